"""Coefficient systems of four Schwarz-driven families of normalized
analytic functions on the unit disk.

Each family is defined by subordinating a derivative expression to the
half-plane map (1 + w)/(1 - w) through a Schwarz function w:

==========  =========================================  =================
tag         functional equation                        family
==========  =========================================  =================
``R``       f'(z) = q(z)                               bounded turning
``C``       (z f'(z))' = q(z) f'(z)                    convex
``Sstar``   z f'(z) = q(z) f(z)                        starlike
``Ss``      2 z f'(z) = q(z) (f(z) - f(-z))            starlike w.r.t.
                                                       symmetric points
==========  =========================================  =================

with q = (1 + w)/(1 - w). The module carries the closed-form maps from
(c_1, ..., c_4) to (a_2, ..., a_5) together with an independent
recursion that solves the functional equation degree by degree, so the
two routes cross-check each other. The extremal member of every family
is reached at w(z) = z**2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .series import (
    InnerNotVanishing,
    PowerSeries,
    one_like,
    ps_add_scalar,
    ps_inv,
    ps_mul,
    ps_neg,
    ps_truncate,
)
from .schwarz import SchwarzParams

__all__ = [
    "UnknownClass",
    "CLASS_TAGS",
    "CoefficientSet",
    "coeffs_R",
    "coeffs_C",
    "coeffs_Sstar",
    "coeffs_Ss",
    "class_coeffs",
    "build_from_schwarz",
    "extremal",
    "coefficient_set",
]

CLASS_TAGS = ("R", "C", "Sstar", "Ss")


class UnknownClass(ValueError):
    """Class tag outside {R, C, Sstar, Ss}."""


@dataclass(frozen=True)
class CoefficientSet:
    """Taylor coefficients a_2..a_5 of a normalized function."""

    a2: Any
    a3: Any
    a4: Any
    a5: Any
    class_tag: str = "generic"


def _c14(params):
    coeffs = params.coeffs if isinstance(params, SchwarzParams) else tuple(params)
    out = list(coeffs[:4])
    while len(out) < 4:
        out.append(0)
    return out


def coeffs_R(params, class_tag: str = "R") -> CoefficientSet:
    """Closed-form coefficients for f' = (1 + w)/(1 - w)."""
    c1, c2, c3, c4 = _c14(params)
    return CoefficientSet(
        a2=c1,
        a3=2 * (c2 + c1 * c1) / 3,
        a4=(c3 + 2 * c1 * c2 + c1 ** 3) / 2,
        a5=2 * (c4 + 2 * c1 * c3 + 3 * c1 * c1 * c2 + c2 * c2 + c1 ** 4) / 5,
        class_tag=class_tag,
    )


def coeffs_C(params, class_tag: str = "C") -> CoefficientSet:
    """Closed-form coefficients for (z f')' = f' (1 + w)/(1 - w)."""
    c1, c2, c3, c4 = _c14(params)
    return CoefficientSet(
        a2=c1,
        a3=(c2 + 3 * c1 * c1) / 3,
        a4=(c3 + 5 * c1 * c2 + 6 * c1 ** 3) / 6,
        a5=(3 * c4 + 14 * c1 * c3 + 43 * c1 * c1 * c2 + 30 * c1 ** 4 + 6 * c2 * c2) / 30,
        class_tag=class_tag,
    )


def coeffs_Sstar(params, class_tag: str = "Sstar") -> CoefficientSet:
    """Closed-form coefficients for z f' = f (1 + w)/(1 - w)."""
    c1, c2, c3, c4 = _c14(params)
    return CoefficientSet(
        a2=2 * c1,
        a3=c2 + 3 * c1 * c1,
        a4=2 * (c3 + 5 * c1 * c2 + 6 * c1 ** 3) / 3,
        a5=(3 * c4 + 14 * c1 * c3 + 43 * c1 * c1 * c2 + 30 * c1 ** 4 + 6 * c2 * c2) / 6,
        class_tag=class_tag,
    )


def coeffs_Ss(params, class_tag: str = "Ss") -> CoefficientSet:
    """Closed-form coefficients for 2 z f' = (f(z) - f(-z)) (1 + w)/(1 - w)."""
    c1, c2, c3, c4 = _c14(params)
    return CoefficientSet(
        a2=c1,
        a3=c2 + c1 * c1,
        a4=(c3 + 3 * c1 * c2 + 2 * c1 ** 3) / 2,
        a5=(c4 + 2 * c1 * c3 + 5 * c1 * c1 * c2 + 2 * c1 ** 4 + 2 * c2 * c2) / 2,
        class_tag=class_tag,
    )


_CLASS_MAPS = {"R": coeffs_R, "C": coeffs_C, "Sstar": coeffs_Sstar, "Ss": coeffs_Ss}


def class_coeffs(class_tag: str, params) -> CoefficientSet:
    """Dispatch to the closed-form coefficient map of a class tag."""
    try:
        fn = _CLASS_MAPS[class_tag]
    except KeyError:
        raise UnknownClass(f"unknown class tag {class_tag!r}, expected one of {CLASS_TAGS}") from None
    return fn(params)


def build_from_schwarz(class_tag: str, omega: PowerSeries, order: int) -> PowerSeries:
    """Solve the class functional equation degree by degree.

    Independent of the closed-form maps: builds q = (1+w)/(1-w) by
    series division and peels off a_k from the degree-k coefficient of
    the functional equation. Returns f = z + a_2 z^2 + ... to ``order``.
    Exact whenever omega is exact.
    """
    if class_tag not in CLASS_TAGS:
        raise UnknownClass(f"unknown class tag {class_tag!r}, expected one of {CLASS_TAGS}")
    if order < 1:
        raise ValueError("order must be at least 1")
    if omega.coeffs[0] != 0:
        raise InnerNotVanishing("a Schwarz function vanishes at the origin")
    w = ps_truncate(omega, max(order - 1, 1))
    one = one_like(w)
    zero = w.coeffs[0] * 0
    q = ps_mul(ps_add_scalar(w, one), ps_inv(ps_add_scalar(ps_neg(w), one)))
    p = q.coeffs
    a = [zero, one]
    for k in range(2, order + 1):
        if class_tag == "R":
            # k a_k = p_{k-1}
            a.append(p[k - 1] / k)
        elif class_tag == "C":
            # k^2 a_k = sum_{j=0}^{k-1} p_j (k-j) a_{k-j}
            acc = zero
            for j in range(1, k):
                acc = acc + p[j] * ((k - j) * a[k - j])
            a.append(acc / (k * k - k))
        elif class_tag == "Sstar":
            # k a_k = sum_{j=0}^{k-1} p_j a_{k-j}
            acc = zero
            for j in range(1, k):
                acc = acc + p[j] * a[k - j]
            a.append(acc / (k - 1))
        else:
            # Ss: k a_k = sum_{j=0}^{k-1} p_j o_{k-j} with o_i the odd part
            acc = zero
            for j in range(1, k):
                if (k - j) % 2 == 1:
                    acc = acc + p[j] * a[k - j]
            a.append(acc / (k - 1) if k % 2 == 1 else acc / k)
    return PowerSeries(a)


def extremal(class_tag: str, order: int = 12) -> PowerSeries:
    """Extremal member of the class, the solution at w(z) = z**2.

    Exact rational backend. The R and C members integrate to
    log((1+z)/(1-z)) - z and artanh z; the starlike members share the
    coefficients of z/(1 - z^2).
    """
    if class_tag not in CLASS_TAGS:
        raise UnknownClass(f"unknown class tag {class_tag!r}, expected one of {CLASS_TAGS}")
    om = PowerSeries.rational([0, 0, 1], order=max(order - 1, 2))
    return build_from_schwarz(class_tag, om, order)


def coefficient_set(f: PowerSeries, class_tag: str = "generic") -> CoefficientSet:
    """Lift a normalized series to its (a_2, ..., a_5) record."""
    g = ps_truncate(f, 5)
    c = g.coeffs
    return CoefficientSet(c[2], c[3], c[4], c[5], class_tag)
