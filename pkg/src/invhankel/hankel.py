"""Inverse-function coefficients and the Hankel determinant h23.

For normalized f the compositional inverse has Taylor coefficients

    A2 = -a2
    A3 = 2 a2^2 - a3
    A4 = -a4 + 5 a2 a3 - 5 a2^3
    A5 = -a5 + 6 a2 a4 - 21 a2^2 a3 + 3 a3^2 + 14 a2^4

and h23 = a3 a5 - a4^2 is the second-row Hankel determinant built from
(a3, a4, a5); parts of the literature write it H2(3), others H3(2).
When a2 = 0 the inverse determinant collapses to

    h23(f^{ -1}) = a3 a5 - a4^2 - 3 a3^3,

so the direct and inverse determinants differ by exactly -3 a3^3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .funclasses import CoefficientSet
from .series import QComplex
from .schwarz import _modulus

__all__ = [
    "A2NotZero",
    "InverseCoefficientSet",
    "HankelResult",
    "inverse_coeffs",
    "h23",
    "h23_inverse",
    "difference_functional",
]


class A2NotZero(ValueError):
    """Functional requires a vanishing second coefficient."""


@dataclass(frozen=True)
class InverseCoefficientSet:
    """Taylor coefficients A_2..A_5 of the compositional inverse."""

    A2: Any
    A3: Any
    A4: Any
    A5: Any


@dataclass(frozen=True)
class HankelResult:
    """h23 of the function, of its inverse, and their difference."""

    h_f: Any
    h_finv: Any
    difference: Any
    a3_cubed_term: Any


def inverse_coeffs(a: CoefficientSet) -> InverseCoefficientSet:
    """Closed-form inverse coefficients; agrees with series reversion."""
    a2, a3, a4, a5 = a.a2, a.a3, a.a4, a.a5
    return InverseCoefficientSet(
        A2=-a2,
        A3=2 * a2 * a2 - a3,
        A4=-a4 + 5 * a2 * a3 - 5 * a2 ** 3,
        A5=-a5 + 6 * a2 * a4 - 21 * a2 * a2 * a3 + 3 * a3 * a3 + 14 * a2 ** 4,
    )


def h23(a3, a4, a5):
    """The determinant a3*a5 - a4**2."""
    return a3 * a5 - a4 * a4


def _agree(x, y) -> bool:
    if isinstance(x, (Fraction, QComplex, int)) and isinstance(y, (Fraction, QComplex, int)):
        return x == y
    return abs(complex(x) - complex(y)) <= 1e-12 * (1.0 + abs(complex(x)))


def h23_inverse(a: CoefficientSet) -> HankelResult:
    """h23 for the function and for its compositional inverse.

    The inverse value always comes from the closed A-coefficients; when
    a2 = 0 the reduced form a3*a5 - a4^2 - 3*a3^3 is used and checked
    against the compositional route, which must agree identically.
    """
    inv = inverse_coeffs(a)
    h_f = h23(a.a3, a.a4, a.a5)
    h_comp = h23(inv.A3, inv.A4, inv.A5)
    term = -3 * a.a3 ** 3
    if a.a2 == 0:
        h_finv = h_f + term
        if not _agree(h_finv, h_comp):
            raise ArithmeticError(
                "reduced and compositional inverse determinants disagree: "
                f"{h_finv!r} vs {h_comp!r}")
    else:
        h_finv = h_comp
    return HankelResult(h_f=h_f, h_finv=h_finv, difference=h_finv - h_f,
                        a3_cubed_term=term)


def difference_functional(a: CoefficientSet) -> float:
    """|h23(f^-1) - h23(f)| = 3|a3|^3, defined only for a2 = 0."""
    if a.a2 != 0:
        raise A2NotZero("the difference collapses to 3|a3|^3 only when a2 = 0")
    value = 3.0 * _modulus(a.a3) ** 3
    direct = _modulus(h23_inverse(a).difference)
    if abs(value - direct) > 1e-12 * (1.0 + value):
        raise ArithmeticError(
            f"difference functional mismatch: 3|a3|^3 = {value!r} "
            f"but |h_finv - h_f| = {direct!r}")
    return value
