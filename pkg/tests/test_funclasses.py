from fractions import Fraction

import pytest

from invhankel.funclasses import (
    CLASS_TAGS,
    UnknownClass,
    build_from_schwarz,
    class_coeffs,
    coefficient_set,
    coeffs_C,
    coeffs_R,
    coeffs_Ss,
    coeffs_Sstar,
    extremal,
)
from invhankel.schwarz import sample_admissible
from invhankel.series import InnerNotVanishing, PowerSeries, QComplex

F = Fraction

# closed-form vs functional-equation recursion, exact Gaussian rationals
N_CROSS = 200


def _abcd(cs):
    return (cs.a2, cs.a3, cs.a4, cs.a5)


@pytest.mark.parametrize("tag", CLASS_TAGS)
def test_closed_form_matches_recursion_exactly(tag):
    for i in range(N_CROSS):
        omega = sample_admissible(10_000 + i, constraint_c1_zero=False, exact=True)
        closed = class_coeffs(tag, omega)
        w = PowerSeries.gaussian((QComplex(0),) + omega.coeffs)
        f = build_from_schwarz(tag, w, order=5)
        rec = coefficient_set(f, tag)
        assert _abcd(closed) == _abcd(rec)


@pytest.mark.parametrize("tag", CLASS_TAGS)
def test_closed_form_matches_recursion_floating(tag):
    for i in range(60):
        omega = sample_admissible(20_000 + i, constraint_c1_zero=False)
        closed = class_coeffs(tag, omega)
        w = PowerSeries.floating((0j,) + omega.coeffs)
        rec = coefficient_set(build_from_schwarz(tag, w, order=5), tag)
        for x, y in zip(_abcd(closed), _abcd(rec)):
            assert abs(complex(x) - complex(y)) <= 1e-12 * (1.0 + abs(complex(y)))


def test_extremal_coefficients_frozen():
    expect = {
        "R": (F(0), F(2, 3), F(0), F(2, 5)),
        "C": (F(0), F(1, 3), F(0), F(1, 5)),
        "Sstar": (F(0), F(1), F(0), F(1)),
        "Ss": (F(0), F(1), F(0), F(1)),
    }
    for tag, vals in expect.items():
        cs = coefficient_set(extremal(tag, 8), tag)
        assert _abcd(cs) == vals
        assert cs.class_tag == tag


def test_starlike_extremal_is_odd_geometric():
    f = extremal("Sstar", 9)
    assert f.coeffs == tuple(F(k % 2) for k in range(10))
    assert extremal("Ss", 9).coeffs == f.coeffs


def test_coefficients_at_omega_z():
    # omega = z sends C and Ss to z/(1-z) and Sstar to the Koebe function
    w = (F(1), F(0), F(0), F(0))
    assert _abcd(coeffs_R(w)) == (F(1), F(2, 3), F(1, 2), F(2, 5))
    assert _abcd(coeffs_C(w)) == (F(1), F(1), F(1), F(1))
    assert _abcd(coeffs_Sstar(w)) == (F(2), F(3), F(4), F(5))
    assert _abcd(coeffs_Ss(w)) == (F(1), F(1), F(1), F(1))


def test_recursion_reproduces_koebe_family():
    w = PowerSeries.rational([0, 1], order=7)
    konvex = build_from_schwarz("C", w, order=8)
    assert konvex.coeffs == tuple(F(0 if k == 0 else 1) for k in range(9))
    koebe = build_from_schwarz("Sstar", w, order=8)
    assert koebe.coeffs == tuple(F(k) for k in range(9))


def test_unknown_class_rejected():
    with pytest.raises(UnknownClass):
        class_coeffs("S", (F(0), F(1), F(0), F(0)))
    with pytest.raises(UnknownClass):
        build_from_schwarz("bogus", PowerSeries.rational([0, 0, 1]), 5)
    with pytest.raises(UnknownClass):
        extremal("bogus")


def test_build_rejects_nonvanishing_omega():
    with pytest.raises(InnerNotVanishing):
        build_from_schwarz("R", PowerSeries.rational([1, 0, 1]), 5)
    with pytest.raises(ValueError):
        build_from_schwarz("R", PowerSeries.rational([0, 0, 1]), 0)


def test_coefficient_set_pads_short_series():
    cs = coefficient_set(PowerSeries.rational([0, 1, 7]))
    assert _abcd(cs) == (F(7), F(0), F(0), F(0))
    assert cs.class_tag == "generic"
