"""Grunsky coefficients of the odd square-root transform.

For normalized univalent f the transform ft(z) = sqrt(f(z**2)) is an
odd normalized univalent function, and the bivariate expansion

    log( (ft(t) - ft(z)) / (t - z) ) = sum_{p,q} w_{p,q} t^p z^q

defines its Grunsky coefficients. Univalence forces, for every complex
vector x,

    sum_q (2q-1) |sum_p w_{2p-1,2q-1} x_{2p-1}|^2
        <= sum_p |x_{2p-1}|^2 / (2p-1),

and the special choice x = (1, 0, 0, ...) gives
|w11|^2 + 3|w13|^2 + 5|w15|^2 + 7|w17|^2 <= 1. The first Taylor
coefficients of f are polynomial in the w entries; with a2 = 0 the
inverse-function determinant becomes
4 w13 w17 - 18 w13^3 - 4 w15^2, and maximizing its two pieces over the
constraint body yields the bound sqrt(3)/(6 sqrt(7)) + 2 sqrt(3) for
the whole univalent class.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .funclasses import CLASS_TAGS, CoefficientSet, extremal
from .series import (
    NotNormalized,
    PowerSeries,
    QComplex,
    ps_div_int,
    ps_inv,
    ps_log,
    ps_mul,
    ps_scale,
    ps_sqrt,
    ps_sub,
    ps_truncate,
)

__all__ = [
    "TruncationTooShallow",
    "MissingIndices",
    "DimensionMismatch",
    "Omega11NotZero",
    "GrunskyTable",
    "sqrt_transform",
    "grunsky_coeffs",
    "check_identities",
    "inequality_slack",
    "psi1",
    "psi2",
    "maximize_psi",
    "full_class_bound",
    "full_class_bound_closed_form",
    "h23_inverse_from_grunsky",
    "univalent_corpus",
    "rotate",
]


class TruncationTooShallow(ValueError):
    """Source series too short for the requested cutoff."""


class MissingIndices(ValueError):
    """Requested Grunsky entry lies beyond the table cutoff."""


class DimensionMismatch(ValueError):
    """Test vector length does not match the table cutoff."""


class Omega11NotZero(ValueError):
    """Reduction requires w11 = 0 (equivalently a2 = 0)."""


@dataclass(frozen=True)
class GrunskyTable:
    """Dense table of the bivariate log coefficients up to the cutoff.

    ``matrix[p][q]`` holds the t^p z^q coefficient; entries with p + q
    odd vanish for odd sources, and the quadratic-form machinery only
    consumes the odd-odd block.
    """

    matrix: tuple
    cutoff: int
    source_order: int

    def omega(self, p: int, q: int):
        """Entry w_{p,q}; both indices odd and at most the cutoff."""
        if p % 2 == 0 or q % 2 == 0:
            raise MissingIndices(f"odd-odd entry expected, got ({p}, {q})")
        if not (1 <= p <= self.cutoff and 1 <= q <= self.cutoff):
            raise MissingIndices(
                f"entry ({p}, {q}) beyond table cutoff {self.cutoff}")
        return self.matrix[p][q]


def sqrt_transform(f: PowerSeries) -> PowerSeries:
    """Odd square-root transform z -> sqrt(f(z**2)) of a normalized f.

    A source of order N yields the transform to order 2N - 1.
    """
    c = f.coeffs
    if len(c) < 2 or c[0] != 0 or c[1] != 1:
        raise NotNormalized("transform needs f = z + a2*z^2 + ...")
    n = f.order
    zero = c[0] * 0
    inner = [zero] * (2 * n - 1)
    for k in range(n):
        inner[2 * k] = c[k + 1]
    s = ps_sqrt(PowerSeries(inner))
    return PowerSeries((zero,) + s.coeffs)


def _is_zero(x, tol=1e-12):
    if isinstance(x, (Fraction, QComplex, int)):
        return x == 0
    return abs(x) <= tol


def grunsky_coeffs(ftilde: PowerSeries, cutoff: int = 7) -> GrunskyTable:
    """Grunsky table of an odd normalized series up to the cutoff.

    The divided difference (ft(t) - ft(z))/(t - z) has constant term one,
    and its bivariate log is computed row by row in the t variable from
    Q * dL/dt = dQ/dt, each row a univariate series in z. Entries are
    exact on exact backends. The source must resolve total degree
    2*cutoff + 1, hence order >= 2*cutoff + 2.
    """
    if cutoff < 1 or cutoff % 2 == 0:
        raise ValueError("cutoff must be odd and positive")
    if ftilde.order < 2 * cutoff + 2:
        raise TruncationTooShallow(
            f"source order {ftilde.order} < {2 * cutoff + 2} required for cutoff {cutoff}")
    c = ftilde.coeffs
    if c[0] != 0 or c[1] != 1:
        raise NotNormalized("transform series must be normalized")
    for k in range(0, ftilde.order + 1, 2):
        if not _is_zero(c[k]):
            raise ValueError(f"source is not odd: coefficient {k} is {c[k]!r}")

    P = cutoff
    # rows of the divided difference: Q_i(z) = sum_j c_{i+j+1} z^j
    q_rows = [PowerSeries([c[i + j + 1] for j in range(P + 1)]) for i in range(P + 1)]
    inv0 = ps_inv(q_rows[0])
    l_rows = [ps_log(q_rows[0])]
    for i in range(1, P + 1):
        acc = None
        for a in range(1, i):
            term = ps_scale(ps_mul(q_rows[a], l_rows[i - a]), i - a)
            acc = term if acc is None else acc + term
        s = q_rows[i] if acc is None else ps_sub(q_rows[i], ps_div_int(acc, i))
        l_rows.append(ps_mul(inv0, s))
    matrix = tuple(tuple(row.coeffs) for row in l_rows)
    return GrunskyTable(matrix=matrix, cutoff=P, source_order=ftilde.order)


def check_identities(a: CoefficientSet, table: GrunskyTable) -> tuple:
    """Residuals of the six coefficient identities linking a2..a5 of f
    to the Grunsky entries of its square-root transform:

        a2 = 2 w11
        a3 = 2 w13 + 3 w11^2
        a4 = 2 w33 + 8 w11 w13 + (10/3) w11^3
        a5 = 2 w35 + 8 w11 w33 + 5 w13^2 + 18 w11^2 w13 + (7/3) w11^4
        0  = 3 w15 - 3 w11 w13 + w11^3 - 3 w33
        0  = w17 - w35 - w11 w33 - w13^2 + (1/3) w11^4

    The a5 relation carries 5*w13^2; see the regression test for the
    misprinted 5*w15^2 variant, which the corpus rejects. Returns the
    six residuals (identity holds when they vanish).
    """
    if table.cutoff < 7:
        raise MissingIndices("identities need entries up to (1,7) and (3,5)")
    w11 = table.omega(1, 1)
    w13 = table.omega(1, 3)
    w15 = table.omega(1, 5)
    w17 = table.omega(1, 7)
    w33 = table.omega(3, 3)
    w35 = table.omega(3, 5)
    return (
        a.a2 - 2 * w11,
        a.a3 - (2 * w13 + 3 * w11 ** 2),
        a.a4 - (2 * w33 + 8 * w11 * w13 + 10 * w11 ** 3 / 3),
        a.a5 - (2 * w35 + 8 * w11 * w33 + 5 * w13 ** 2 + 18 * w11 ** 2 * w13
                + 7 * w11 ** 4 / 3),
        3 * w15 - 3 * w11 * w13 + w11 ** 3 - 3 * w33,
        w17 - w35 - w11 * w33 - w13 ** 2 + w11 ** 4 / 3,
    )


def inequality_slack(table: GrunskyTable, x) -> float:
    """Slack of the truncated Grunsky inequality for the odd-odd block.

    x supplies the weights (x_1, x_3, ..., x_cutoff); nonnegative slack
    is a necessary condition for univalence of the source.
    """
    n = (table.cutoff + 1) // 2
    xs = [complex(v) for v in x]
    if len(xs) != n:
        raise DimensionMismatch(f"expected {n} weights for cutoff {table.cutoff}")
    rhs = sum(abs(xs[p - 1]) ** 2 / (2 * p - 1) for p in range(1, n + 1))
    lhs = 0.0
    for q in range(1, n + 1):
        row = sum(complex(table.omega(2 * p - 1, 2 * q - 1)) * xs[p - 1]
                  for p in range(1, n + 1))
        lhs += (2 * q - 1) * abs(row) ** 2
    return rhs - lhs


def psi1(y, z):
    """y * sqrt(1 - 3y^2 - 5z^2), clipped to the feasible region."""
    return y * np.sqrt(np.maximum(1.0 - 3.0 * y * y - 5.0 * z * z, 0.0))


def psi2(y, z):
    """9y^3 + 2z^2."""
    return 9.0 * y ** 3 + 2.0 * z * z


def _golden_max(f, lo: float, hi: float, iters: int = 120):
    """Golden-section maximization of a unimodal f on [lo, hi]."""
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def maximize_psi(fn, grid: int = 2000):
    """Maximize fn over {y, z >= 0 : 3y^2 + 5z^2 <= 1}.

    Dense grid scan (first maximum in lexicographic (y, z) order wins
    ties) followed by golden-section refinement along each axis within
    the feasible slice. Returns (y, z, value).
    """
    ymax = 1.0 / math.sqrt(3.0)
    zmax = 1.0 / math.sqrt(5.0)
    ys = np.linspace(0.0, ymax, grid)
    zs = np.linspace(0.0, zmax, grid)
    yy, zz = np.meshgrid(ys, zs, indexing="ij")
    feasible = 3.0 * yy * yy + 5.0 * zz * zz <= 1.0 + 1e-12
    vals = np.where(feasible, fn(yy, zz), -1.0)
    flat = int(np.argmax(vals))
    y = float(ys[flat // grid])
    z = float(zs[flat % grid])
    for _ in range(3):
        yhi = math.sqrt(max(1.0 - 5.0 * z * z, 0.0) / 3.0)
        y, _ = _golden_max(lambda t: float(fn(t, z)), 0.0, yhi)
        zhi = math.sqrt(max(1.0 - 3.0 * y * y, 0.0) / 5.0)
        z, _ = _golden_max(lambda t: float(fn(y, t)), 0.0, zhi)
    return y, z, float(fn(y, z))


def full_class_bound_closed_form() -> float:
    """sqrt(3)/(6*sqrt(7)) + 2*sqrt(3)."""
    return math.sqrt(3.0) / (6.0 * math.sqrt(7.0)) + 2.0 * math.sqrt(3.0)


def full_class_bound(grid: int = 2000) -> float:
    """Bound for the whole univalent class with a2 = 0, by maximization.

    Splits 4 w13 w17 - 18 w13^3 - 4 w15^2 over the constraint body into
    the two profiles psi1 (coupling w13, w17 through Cauchy-Schwarz) and
    psi2, maximizes each on the quarter-ellipse, and checks the grid
    maxima against the closed forms sqrt(3)/6 at (1/sqrt(6), 0) and
    sqrt(3) at (1/sqrt(3), 0) before combining them.
    """
    y1, z1, v1 = maximize_psi(psi1, grid)
    if abs(v1 - math.sqrt(3.0) / 6.0) > 1e-9:
        raise ArithmeticError(f"psi1 maximum {v1!r} disagrees with sqrt(3)/6")
    if abs(y1 - 1.0 / math.sqrt(6.0)) > 1e-6 or abs(z1) > 1e-6:
        raise ArithmeticError(f"psi1 maximizer ({y1!r}, {z1!r}) off (1/sqrt(6), 0)")
    y2, z2, v2 = maximize_psi(psi2, grid)
    if abs(v2 - math.sqrt(3.0)) > 1e-9:
        raise ArithmeticError(f"psi2 maximum {v2!r} disagrees with sqrt(3)")
    if abs(y2 - 1.0 / math.sqrt(3.0)) > 1e-6 or abs(z2) > 1e-6:
        raise ArithmeticError(f"psi2 maximizer ({y2!r}, {z2!r}) off (1/sqrt(3), 0)")
    return v1 / math.sqrt(7.0) + 2.0 * v2


def h23_inverse_from_grunsky(table: GrunskyTable):
    """Inverse-function determinant 4 w13 w17 - 18 w13^3 - 4 w15^2.

    Valid only when w11 vanishes (a2 = 0); cross-checks the direct
    coefficient route in the tests.
    """
    w11 = table.omega(1, 1)
    if isinstance(w11, (Fraction, QComplex, int)):
        vanishes = w11 == 0
    else:
        vanishes = abs(w11) <= 1e-10
    if not vanishes:
        raise Omega11NotZero(f"w11 = {w11!r} must vanish for the reduction")
    w13 = table.omega(1, 3)
    w15 = table.omega(1, 5)
    w17 = table.omega(1, 7)
    return 4 * w13 * w17 - 18 * w13 ** 3 - 4 * w15 ** 2


def univalent_corpus(order: int = 12) -> dict:
    """Named rational-backend univalent test functions.

    Identity, the four class extremals, the Koebe function z/(1-z)^2
    and the geometric map z/(1-z).
    """
    out = {"z": PowerSeries.rational([0, 1], order=order)}
    for tag in CLASS_TAGS:
        out["extremal_" + tag] = extremal(tag, order)
    out["koebe"] = PowerSeries.rational(list(range(order + 1)))
    out["geometric"] = PowerSeries.rational([0] + [1] * order)
    return out


def rotate(f: PowerSeries, theta: float) -> PowerSeries:
    """Coefficients of exp(-i*theta) f(exp(i*theta) z), floating backend."""
    return PowerSeries(tuple(
        complex(c) * cmath.exp(1j * theta * (k - 1))
        for k, c in enumerate(f.coeffs)))
