from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from invhankel.series import (
    ConstantTermNotOne,
    InnerNotVanishing,
    NotNormalized,
    PowerSeries,
    QComplex,
    ZeroConstantTerm,
    ps_compose,
    ps_exp,
    ps_inv,
    ps_log,
    ps_mul,
    ps_reversion,
    ps_sqrt,
    ps_truncate,
    to_complex,
)

F = Fraction

small_fractions = st.fractions(min_value=F(-1, 2), max_value=F(1, 2),
                               max_denominator=16)


def test_geometric_odd_product():
    z = PowerSeries.rational([0, 1], order=6)
    g = ps_inv(PowerSeries.rational([1, 0, -1], order=6))
    assert ps_mul(z, g).coeffs == tuple(F(k) for k in (0, 1, 0, 1, 0, 1, 0))


def test_compose_square_of_quadratic():
    outer = PowerSeries.rational([0, 0, 1], order=5)
    inner = PowerSeries.rational([0, 1, 1], order=5)
    assert ps_compose(outer, inner).coeffs == tuple(F(k) for k in (0, 0, 1, 2, 1, 0))


def test_sqrt_of_quartic_geometric():
    # (1 - z^4)^(-1) = 1 + z^4 + z^8; its root is 1 + z^4/2 + 3z^8/8
    a = PowerSeries.rational([1, 0, 0, 0, 1, 0, 0, 0, 1])
    s = ps_sqrt(a)
    assert s.coeffs == (F(1), F(0), F(0), F(0), F(1, 2), F(0), F(0), F(0), F(3, 8))


def test_reversion_of_koebe():
    k = PowerSeries.rational([0, 1, 2, 3, 4, 5])
    r = ps_reversion(k)
    assert r.coeffs == (F(0), F(1), F(-2), F(5), F(-14), F(42))


def test_mul_truncates_to_smaller_order():
    a = PowerSeries.rational([1, 1, 1, 1], order=3)
    b = PowerSeries.rational([1, 1], order=8)
    assert ps_mul(a, b).order == 3
    assert (a + b).order == 3


def test_truncate_pads_with_backend_zero():
    a = PowerSeries.rational([1, 2])
    t = ps_truncate(a, 4)
    assert t.coeffs == (F(1), F(2), F(0), F(0), F(0))
    assert all(isinstance(c, Fraction) for c in t.coeffs)


def test_factories_coerce_all_slots():
    r = PowerSeries.rational([0, 1, 2], order=4)
    assert all(isinstance(c, Fraction) for c in r.coeffs)
    g = PowerSeries.gaussian([0, 1], order=3)
    assert all(isinstance(c, QComplex) for c in g.coeffs)
    f = PowerSeries.floating([0, 1.5], order=2)
    assert all(isinstance(c, complex) for c in f.coeffs)


def test_error_types():
    nz = PowerSeries.rational([0, 1, 1])
    with pytest.raises(ZeroConstantTerm):
        ps_inv(nz)
    with pytest.raises(ConstantTermNotOne):
        ps_log(PowerSeries.rational([2, 1]))
    with pytest.raises(ConstantTermNotOne):
        ps_sqrt(PowerSeries.rational([4, 1]))
    with pytest.raises(InnerNotVanishing):
        ps_compose(nz, PowerSeries.rational([1, 1, 0]))
    with pytest.raises(NotNormalized):
        ps_reversion(PowerSeries.rational([0, 2, 1]))
    with pytest.raises(ValueError):
        ps_exp(PowerSeries.rational([1, 1]))


def test_qcomplex_arithmetic_is_exact():
    q = QComplex(F(3, 5), F(4, 5))
    assert q.abs2() == 1
    assert q * q.conjugate() == QComplex(1)
    assert (QComplex(1) / q) == q.conjugate()
    assert q ** 3 == q * q * q
    assert 2 + q == QComplex(F(13, 5), F(4, 5))


def test_qcomplex_refuses_float_mixing():
    q = QComplex(1, 2)
    with pytest.raises(TypeError):
        q + 0.5
    with pytest.raises(TypeError):
        q * (1 + 1j)
    assert complex(q) == 1 + 2j


@given(st.lists(small_fractions, min_size=0, max_size=7))
@settings(deadline=None, max_examples=60)
def test_log_exp_round_trip(tail):
    a = PowerSeries.rational([F(1)] + tail)
    assert ps_exp(ps_log(a)) == a


@given(st.lists(small_fractions, min_size=1, max_size=7))
@settings(deadline=None, max_examples=60)
def test_inverse_is_reciprocal(tail):
    a = PowerSeries.rational([F(1)] + tail)
    one = PowerSeries.rational([1], order=a.order)
    assert ps_mul(a, ps_inv(a)) == one


@given(st.lists(small_fractions, min_size=1, max_size=6))
@settings(deadline=None, max_examples=60)
def test_reversion_composes_to_identity(tail):
    f = PowerSeries.rational([F(0), F(1)] + tail)
    g = ps_reversion(f)
    ident = ps_compose(f, g)
    expected = PowerSeries.rational([0, 1], order=f.order)
    assert ident == expected
    # two-sided: g is also inverted by f
    assert ps_compose(g, f) == expected


@given(st.lists(small_fractions, min_size=1, max_size=7))
@settings(deadline=None, max_examples=60)
def test_sqrt_squares_back(tail):
    a = PowerSeries.rational([F(1)] + tail)
    s = ps_sqrt(a)
    assert ps_mul(s, s) == a


@given(st.lists(small_fractions, min_size=2, max_size=7))
@settings(deadline=None, max_examples=40)
def test_backends_agree(tail):
    exact = PowerSeries.rational([F(1)] + tail)
    approx = to_complex(exact)
    pairs = [
        (ps_inv(exact), ps_inv(approx)),
        (ps_log(exact), ps_log(approx)),
        (ps_sqrt(exact), ps_sqrt(approx)),
        (ps_mul(exact, exact), ps_mul(approx, approx)),
    ]
    for e, a in pairs:
        for ce, ca in zip(e.coeffs, a.coeffs):
            assert abs(complex(ce) - ca) <= 1e-12 * (1.0 + abs(ca))
