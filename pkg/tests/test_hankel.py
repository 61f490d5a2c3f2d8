from fractions import Fraction

import numpy as np
import pytest

from invhankel.funclasses import CoefficientSet, coefficient_set, extremal
from invhankel.hankel import (
    A2NotZero,
    difference_functional,
    h23,
    h23_inverse,
    inverse_coeffs,
)
from invhankel.series import PowerSeries, ps_compose, ps_reversion

F = Fraction

N_RANDOM = 500


def _random_rational_sets(seed, a2_zero):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(N_RANDOM):
        num = rng.integers(-9, 10, size=4)
        den = rng.integers(1, 10, size=4)
        a = [F(int(n), int(d)) for n, d in zip(num, den)]
        if a2_zero:
            a[0] = F(0)
        out.append(CoefficientSet(*a))
    return out


def test_koebe_inverse_coefficients():
    cs = coefficient_set(PowerSeries.rational([0, 1, 2, 3, 4, 5]))
    ic = inverse_coeffs(cs)
    assert (ic.A2, ic.A3, ic.A4, ic.A5) == (F(-2), F(5), F(-14), F(42))


def test_inverse_coeffs_match_reversion_exactly():
    for cs in _random_rational_sets(7, a2_zero=False):
        f = PowerSeries.rational([0, 1, cs.a2, cs.a3, cs.a4, cs.a5])
        g = ps_reversion(f)
        ic = inverse_coeffs(cs)
        assert g.coeffs[2:] == (ic.A2, ic.A3, ic.A4, ic.A5)
        ident = ps_compose(f, g)
        assert ident == PowerSeries.rational([0, 1], order=5)


def test_reduced_inverse_determinant_identity():
    # with a2 = 0: h23(f_inv) = h23(f) - 3 a3^3, exactly
    for cs in _random_rational_sets(11, a2_zero=True):
        res = h23_inverse(cs)
        assert res.h_f == h23(cs.a3, cs.a4, cs.a5)
        assert res.h_finv == res.h_f - 3 * cs.a3 ** 3
        assert res.difference == -3 * cs.a3 ** 3
        assert res.a3_cubed_term == res.difference


def test_general_inverse_determinant_uses_compositional_route():
    cs = CoefficientSet(F(1, 2), F(1, 3), F(1, 4), F(1, 5))
    res = h23_inverse(cs)
    ic = inverse_coeffs(cs)
    assert res.h_finv == h23(ic.A3, ic.A4, ic.A5)
    assert res.h_finv != res.h_f - 3 * cs.a3 ** 3


def test_extremal_values_frozen():
    values = {
        "R": (F(4, 15), F(-28, 45), F(-8, 9)),
        "C": (F(1, 15), F(-2, 45), F(-1, 9)),
        "Sstar": (F(1), F(-2), F(-3)),
        "Ss": (F(1), F(-2), F(-3)),
    }
    for tag, (hf, hinv, diff) in values.items():
        res = h23_inverse(coefficient_set(extremal(tag, 8), tag))
        assert (res.h_f, res.h_finv, res.difference) == (hf, hinv, diff)


def test_difference_attained_at_z_squared():
    attained = {"R": F(8, 9), "C": F(1, 9), "Sstar": F(3), "Ss": F(3)}
    for tag, bound in attained.items():
        cs = coefficient_set(extremal(tag, 8), tag)
        assert difference_functional(cs) == pytest.approx(float(bound), abs=1e-15)


def test_difference_requires_a2_zero():
    with pytest.raises(A2NotZero):
        difference_functional(CoefficientSet(F(1), F(0), F(0), F(0)))


def test_h23_on_floats():
    assert h23(0.5, 0.25, 2.0) == pytest.approx(0.9375)
