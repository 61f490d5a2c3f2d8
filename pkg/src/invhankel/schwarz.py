"""Schwarz functions through their Schur parameters.

A Schwarz function omega maps the unit disk into itself with
omega(0) = 0. Writing omega(z) = z*g(z) with g in the closed unit ball
of H-infinity, finite Schur-parameter sequences (gamma_1, ..., gamma_m),
each in the closed unit disk, parametrize admissible coefficient bodies
boundary included, so sampling in gamma space reaches extremal
configurations that rejection sampling of raw coefficient boxes misses.

The module provides the sharp coefficient slack of Carlson's lemma, the
inverse Schur recursion as a series computation (exact on the
Gaussian-rational backend), a polynomial boundary-modulus diagnostic,
and a deterministic seeded sampler.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .series import PowerSeries, QComplex, ps_add_scalar, ps_inv, ps_mul, ps_scale

__all__ = [
    "GammaOutOfDisk",
    "SchurParams",
    "SchwarzParams",
    "carlson_slack",
    "schur_to_schwarz",
    "boundary_sup",
    "sample_admissible",
    "DEFAULT_SUP_GRID",
]

DEFAULT_SUP_GRID = 4096


class GammaOutOfDisk(ValueError):
    """Schur parameter outside the closed unit disk."""


def _modulus(x) -> float:
    if isinstance(x, QComplex):
        return math.sqrt(float(x.abs2()))
    if isinstance(x, (int, float, Fraction)):
        return float(abs(x))
    return abs(x)


@dataclass(frozen=True)
class SchurParams:
    """Finite Schur-parameter sequence, every entry in the closed disk."""

    gammas: tuple

    def __post_init__(self):
        gs = tuple(self.gammas)
        object.__setattr__(self, "gammas", gs)
        if not gs:
            raise GammaOutOfDisk("need at least one Schur parameter")
        for k, g in enumerate(gs):
            if isinstance(g, QComplex):
                if g.abs2() > 1:
                    raise GammaOutOfDisk(f"gamma_{k + 1} lies outside the closed disk")
            elif _modulus(g) > 1 + 1e-12:
                raise GammaOutOfDisk(
                    f"gamma_{k + 1} has modulus {_modulus(g)!r} > 1")


@dataclass
class SchwarzParams:
    """Leading coefficients (c_1, ..., c_m) of a Schwarz function.

    ``sup_estimate`` records the numerical evidence behind
    ``admissible``. Instances built by schur_to_schwarz evaluate the
    exact Mobius chain on a boundary grid, which never exceeds one
    beyond rounding; ``boundary_sup`` instead measures the stored
    polynomial itself, which is a truncation and may overshoot slightly
    when some Schur parameter sits near the unit circle.
    """

    coeffs: tuple
    sup_estimate: float = float("nan")
    admissible: bool = False
    gammas: tuple | None = field(default=None, repr=False)

    @property
    def order(self):
        return len(self.coeffs)


def _first4(c):
    coeffs = c.coeffs if isinstance(c, SchwarzParams) else tuple(c)
    out = list(coeffs[:4])
    while len(out) < 4:
        out.append(0)
    return out


def carlson_slack(c) -> tuple[float, float, float, float]:
    """Slack of the four sharp coefficient bounds of Carlson's lemma.

    For a Schwarz function with coefficients c_k the moduli satisfy
    |c1| <= 1, |c2| <= 1 - |c1|^2, |c3| <= 1 - |c1|^2 - |c2|^2/(1+|c1|)
    and |c4| <= 1 - |c1|^2 - |c2|^2. Returns the four differences
    bound minus modulus; admissible vectors keep all of them >= 0.
    """
    m1, m2, m3, m4 = (_modulus(x) for x in _first4(c))
    return (
        1.0 - m1,
        1.0 - m1 * m1 - m2,
        1.0 - m1 * m1 - m2 * m2 / (1.0 + m1) - m3,
        1.0 - m1 * m1 - m2 * m2 - m4,
    )


def _one_of(gamma):
    if isinstance(gamma, QComplex):
        return QComplex(1)
    if isinstance(gamma, Fraction):
        return Fraction(1)
    return 1.0


def _conj(gamma):
    return gamma.conjugate() if hasattr(gamma, "conjugate") else gamma


def _parametrized_sup(gammas, gridpoints: int = 512) -> float:
    """max |omega| on the boundary, evaluated through the Mobius chain.

    Pointwise evaluation of the reconstructed rational function, not of
    its truncated Taylor polynomial, so the result is <= 1 for any
    parameters in the closed disk (up to rounding). A parameter of unit
    modulus collapses its level to the constant gamma, which the
    formula would render as 0/0 on part of the grid.
    """
    zs = np.exp(2j * np.pi * np.arange(gridpoints) / gridpoints)
    acc = np.zeros(gridpoints, dtype=complex)
    for gamma in (complex(g) for g in reversed(gammas)):
        if abs(abs(gamma) - 1.0) < 1e-15:
            acc = np.full(gridpoints, gamma)
        else:
            t = zs * acc
            acc = (gamma + t) / (1.0 + gamma.conjugate() * t)
    return float(np.max(np.abs(acc)))


def schur_to_schwarz(g: SchurParams, order: int) -> SchwarzParams:
    """Schwarz coefficients c_1..c_order from Schur parameters.

    Runs the inverse Schur recursion

        g_k(z) = (gamma_k + z*g_{k+1}(z)) / (1 + conj(gamma_k)*z*g_{k+1}(z))

    downward from g_{m+1} = 0 with truncated series arithmetic and reads
    off omega(z) = z*g_1(z). QComplex parameters keep the whole
    computation exact. A unimodular gamma_k makes g_k collapse to that
    constant, so parameters beyond it are ignored, as the recursion
    itself guarantees.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    gammas = g.gammas
    zero = gammas[0] * 0
    n = order - 1
    gk = PowerSeries((zero,) * (n + 1))
    for gamma in reversed(gammas):
        zg = PowerSeries((zero,) + gk.coeffs[:n])
        num = ps_add_scalar(zg, gamma)
        den = ps_add_scalar(ps_scale(zg, _conj(gamma)), _one_of(gamma))
        gk = ps_mul(num, ps_inv(den))
    sup = _parametrized_sup(gammas)
    return SchwarzParams(coeffs=gk.coeffs[:order], sup_estimate=sup,
                         admissible=True, gammas=tuple(gammas))


def boundary_sup(c, gridpoints: int = DEFAULT_SUP_GRID) -> float:
    """max |omega(z)| over a uniform grid on |z| = 1 for the polynomial
    omega with the stored coefficients. Updates ``sup_estimate`` when
    handed a SchwarzParams instance."""
    if gridpoints < 64:
        raise ValueError("gridpoints must be at least 64")
    coeffs = c.coeffs if isinstance(c, SchwarzParams) else tuple(c)
    poly = np.array([complex(x) for x in reversed(coeffs)] + [0j])
    zs = np.exp(2j * np.pi * np.arange(gridpoints) / gridpoints)
    sup = float(np.max(np.abs(np.polyval(poly, zs))))
    if isinstance(c, SchwarzParams):
        c.sup_estimate = sup
    return sup


def _exact_disk_draw(rng) -> QComplex:
    # radius on a fine rational grid; the angle through the rational
    # parametrization of the circle, so |gamma|^2 = r^2 <= 1 exactly
    r = Fraction(int(rng.integers(0, 257)), 256)
    t = Fraction(int(rng.integers(-64, 65)), 64)
    den = 1 + t * t
    re = r * (1 - t * t) / den
    im = r * 2 * t / den
    if int(rng.integers(0, 2)):
        re, im = -re, -im
    return QComplex(re, im)


def sample_admissible(seed: int, constraint_c1_zero: bool = True, m: int = 6,
                      exact: bool = False) -> SchwarzParams:
    """Deterministic-in-seed draw from the admissible coefficient body.

    Schur parameters are drawn uniformly in the unit disk and pushed
    through schur_to_schwarz, so the sample lies in the true body with
    no rejection step; ``constraint_c1_zero`` zeroes the first parameter,
    which forces c_1 = 0 structurally. With ``exact=True`` the
    parameters are Gaussian rationals on a fine grid and the returned
    coefficients are exact.
    """
    if m < 2:
        raise ValueError("need m >= 2 coefficients")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    gammas = []
    for _ in range(m):
        if exact:
            gammas.append(_exact_disk_draw(rng))
        else:
            u, v = rng.random(2)
            r = math.sqrt(u)
            gammas.append(complex(r * math.cos(2 * math.pi * v),
                                  r * math.sin(2 * math.pi * v)))
    if constraint_c1_zero:
        gammas[0] = QComplex(0) if exact else 0j
    return schur_to_schwarz(SchurParams(tuple(gammas)), order=m)
