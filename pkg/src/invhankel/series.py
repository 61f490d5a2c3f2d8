"""Truncated power-series arithmetic over exchangeable coefficient backends.

A series is stored as a plain tuple of coefficients, index k holding the
z**k term. The coefficient type picks the backend:

* ``fractions.Fraction``  exact real-rational arithmetic,
* ``QComplex``            exact Gaussian-rational arithmetic,
* ``complex`` / ``float`` double precision.

Every binary operation truncates its result to the smaller order of the
two operands, so orders never silently grow. Construct series through
the classmethod factories (``rational``, ``gaussian``, ``floating``) so
that every slot, zeros included, carries the backend type; otherwise an
integer constant term can leak a float into an exact computation via
``1 / 1``.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "PowerSeries",
    "QComplex",
    "ZeroConstantTerm",
    "InnerNotVanishing",
    "NotNormalized",
    "ConstantTermNotOne",
    "ps_add",
    "ps_sub",
    "ps_neg",
    "ps_scale",
    "ps_add_scalar",
    "ps_div_int",
    "ps_mul",
    "ps_inv",
    "ps_compose",
    "ps_reversion",
    "ps_diff",
    "ps_log",
    "ps_exp",
    "ps_sqrt",
    "ps_truncate",
    "one_like",
    "to_complex",
]


class ZeroConstantTerm(ValueError):
    """Multiplicative inverse requested for a series with zero constant term."""


class InnerNotVanishing(ValueError):
    """Composition requires the inner series to vanish at the origin."""


class NotNormalized(ValueError):
    """Operation requires a series of the form z + a2*z**2 + ..."""


class ConstantTermNotOne(ValueError):
    """Operation requires constant term exactly one."""


class QComplex:
    """Exact complex scalar with Fraction real and imaginary parts.

    Closed under +, -, *, / and conjugation, which is all the series
    engine needs. Mixing with float or complex raises TypeError so an
    exact computation cannot silently degrade; convert explicitly with
    ``complex(q)`` when precision is no longer required.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @staticmethod
    def _lift(x):
        if isinstance(x, QComplex):
            return x
        if isinstance(x, (int, Fraction)):
            return QComplex(x)
        return None

    def __add__(self, other):
        o = QComplex._lift(other)
        if o is None:
            return NotImplemented
        return QComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = QComplex._lift(other)
        if o is None:
            return NotImplemented
        return QComplex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = QComplex._lift(other)
        if o is None:
            return NotImplemented
        return QComplex(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = QComplex._lift(other)
        if o is None:
            return NotImplemented
        return QComplex(self.re * o.re - self.im * o.im,
                        self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = QComplex._lift(other)
        if o is None:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("QComplex division by zero")
        return QComplex((self.re * o.re + self.im * o.im) / d,
                        (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        o = QComplex._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = QComplex(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __neg__(self):
        return QComplex(-self.re, -self.im)

    def __eq__(self, other):
        o = QComplex._lift(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def conjugate(self):
        return QComplex(self.re, -self.im)

    def abs2(self):
        """|q|**2 as an exact Fraction."""
        return self.re * self.re + self.im * self.im

    def __abs__(self):
        return math.sqrt(float(self.abs2()))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"QComplex({self.re!r}, {self.im!r})"


class PowerSeries:
    """Immutable truncated series; ``coeffs[k]`` is the z**k coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(coeffs)
        if not cs:
            raise ValueError("a series needs at least its constant term")
        self.coeffs = cs

    @classmethod
    def rational(cls, coeffs, order=None):
        """Exact real series: every entry coerced to Fraction."""
        return cls._build([Fraction(c) for c in coeffs], order, Fraction(0))

    @classmethod
    def gaussian(cls, coeffs, order=None):
        """Exact complex series: every entry coerced to QComplex."""
        lifted = [c if isinstance(c, QComplex) else QComplex(c) for c in coeffs]
        return cls._build(lifted, order, QComplex(0))

    @classmethod
    def floating(cls, coeffs, order=None):
        """Double-precision series: every entry coerced to complex."""
        return cls._build([complex(c) for c in coeffs], order, 0j)

    @classmethod
    def _build(cls, cs, order, zero):
        if order is not None:
            if order + 1 <= len(cs):
                cs = cs[: order + 1]
            else:
                cs = cs + [zero] * (order + 1 - len(cs))
        return cls(cs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        return ps_add(self, other)

    def __sub__(self, other):
        return ps_sub(self, other)

    def __neg__(self):
        return ps_neg(self)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return ps_mul(self, other)
        return ps_scale(self, other)

    def __rmul__(self, other):
        return ps_scale(self, other)

    def __repr__(self):
        shown = ", ".join(repr(c) for c in self.coeffs[:6])
        tail = ", ..." if len(self.coeffs) > 6 else ""
        return f"PowerSeries([{shown}{tail}], order={self.order})"


def one_like(s: PowerSeries):
    """Multiplicative unit scalar of the series' coefficient backend."""
    c0 = s.coeffs[0]
    if isinstance(c0, QComplex):
        return QComplex(1)
    if isinstance(c0, Fraction):
        return Fraction(1)
    if isinstance(c0, complex):
        return complex(1)
    if isinstance(c0, float):
        return 1.0
    return 1


def ps_truncate(a: PowerSeries, n: int) -> PowerSeries:
    """First n+1 coefficients, zero-padded if the series is shorter."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n <= a.order:
        return PowerSeries(a.coeffs[: n + 1])
    zero = a.coeffs[0] * 0
    return PowerSeries(a.coeffs + (zero,) * (n - a.order))


def ps_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order)
    return PowerSeries(tuple(a.coeffs[k] + b.coeffs[k] for k in range(n + 1)))


def ps_sub(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order)
    return PowerSeries(tuple(a.coeffs[k] - b.coeffs[k] for k in range(n + 1)))


def ps_neg(a: PowerSeries) -> PowerSeries:
    return PowerSeries(tuple(-c for c in a.coeffs))


def ps_scale(a: PowerSeries, s) -> PowerSeries:
    return PowerSeries(tuple(c * s for c in a.coeffs))


def ps_div_int(a: PowerSeries, n: int) -> PowerSeries:
    return PowerSeries(tuple(c / n for c in a.coeffs))


def ps_add_scalar(a: PowerSeries, s) -> PowerSeries:
    return PowerSeries((a.coeffs[0] + s,) + a.coeffs[1:])


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to the smaller operand order."""
    n = min(a.order, b.order)
    ca, cb = a.coeffs, b.coeffs
    out = []
    for k in range(n + 1):
        acc = ca[0] * cb[k]
        for i in range(1, k + 1):
            acc = acc + ca[i] * cb[k - i]
        out.append(acc)
    return PowerSeries(out)


def ps_inv(a: PowerSeries) -> PowerSeries:
    """Multiplicative inverse; the constant term must be invertible."""
    c = a.coeffs
    if c[0] == 0:
        raise ZeroConstantTerm("cannot invert a series with zero constant term")
    r0 = one_like(a) / c[0]
    out = [r0]
    for k in range(1, a.order + 1):
        acc = c[1] * out[k - 1]
        for i in range(2, k + 1):
            acc = acc + c[i] * out[k - i]
        out.append(-(r0 * acc))
    return PowerSeries(out)


def ps_compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """outer(inner(z)) by Horner evaluation; inner must vanish at 0."""
    if inner.coeffs[0] != 0:
        raise InnerNotVanishing("inner series must have zero constant term")
    n = min(outer.order, inner.order)
    inner = ps_truncate(inner, n)
    zero = inner.coeffs[0] * 0
    co = outer.coeffs
    acc = PowerSeries((co[n],) + (zero,) * n)
    for k in range(n - 1, -1, -1):
        acc = ps_mul(acc, inner)
        acc = ps_add_scalar(acc, co[k])
    return acc


def ps_reversion(f: PowerSeries) -> PowerSeries:
    """Compositional inverse g with f(g(w)) = w, for normalized f.

    Solved degree by degree: with g known below degree k, the degree-k
    coefficient of f(g) is g_k plus terms already determined, so g_k is
    read off directly. The result has the same order as f.
    """
    c = f.coeffs
    if len(c) < 2 or c[0] != 0 or c[1] != 1:
        raise NotNormalized("reversion needs f = z + a2*z^2 + ...")
    n = f.order
    zero = c[0] * 0
    g = [zero, c[1]] + [zero] * (n - 1)
    for k in range(2, n + 1):
        residual = ps_compose(f, PowerSeries(g)).coeffs[k]
        g[k] = -residual
    return PowerSeries(g)


def ps_diff(a: PowerSeries) -> PowerSeries:
    if a.order == 0:
        return PowerSeries((a.coeffs[0] * 0,))
    return PowerSeries(tuple(k * a.coeffs[k] for k in range(1, a.order + 1)))


def ps_log(a: PowerSeries) -> PowerSeries:
    """log(a) for a series with constant term one, via (log a)' = a'/a."""
    if a.coeffs[0] != 1:
        raise ConstantTermNotOne("log needs constant term exactly 1")
    n = a.order
    zero = a.coeffs[0] * 0
    if n == 0:
        return PowerSeries((zero,))
    u = ps_mul(ps_diff(a), ps_inv(ps_truncate(a, n - 1)))
    out = [zero]
    for k in range(1, n + 1):
        out.append(u.coeffs[k - 1] / k)
    return PowerSeries(out)


def ps_exp(a: PowerSeries) -> PowerSeries:
    """exp(a) for a series vanishing at 0, via E' = a'E."""
    if a.coeffs[0] != 0:
        raise ValueError("exp needs zero constant term")
    n = a.order
    c = a.coeffs
    out = [one_like(a)]
    for k in range(1, n + 1):
        acc = c[1] * out[k - 1]
        for j in range(2, k + 1):
            acc = acc + j * c[j] * out[k - j]
        out.append(acc / k)
    return PowerSeries(out)


def ps_sqrt(a: PowerSeries) -> PowerSeries:
    """Square root with constant term +1 for a series with a(0) = 1."""
    if a.coeffs[0] != 1:
        raise ConstantTermNotOne("sqrt needs constant term exactly 1")
    c = a.coeffs
    out = [c[0]]
    for k in range(1, a.order + 1):
        acc = c[k]
        for i in range(1, k):
            acc = acc - out[i] * out[k - i]
        out.append(acc / 2)
    return PowerSeries(out)


def to_complex(a: PowerSeries) -> PowerSeries:
    """Copy of the series on the floating backend."""
    return PowerSeries(tuple(complex(c) for c in a.coeffs))
