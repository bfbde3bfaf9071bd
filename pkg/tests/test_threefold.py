from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pseudoauto.exactcore import QuadExt, UniPoly, quad_field_for_ell
from pseudoauto.mpoly import INDETERMINATE, ProjPoint, evaluate
from pseudoauto.threefold import (REACHED_E0, CurveParam, beta0_orbit_avoidance, beta_step,
                                  chart_formula_report, e1_chart_dynamics, ell_condition_holds,
                                  fibration_obstruction, g_exceptional_report,
                                  indeterminacy_points, omega_invariance, random_non_solutions,
                                  surface_regression, translation_report,
                                  verify_ell_condition)
from pseudoauto.threefold.maps import g_map
from pseudoauto.threefold.obstruction import ratio_min_poly
from pseudoauto.threefold.surface import E1, E2, E3, p_last


def params(ell):
    a, c, _ = quad_field_for_ell(ell)
    return a, c


def all_pass(rep):
    return rep.passed and not rep.failures()


# -- beta cycle -------------------------------------------------------------------

def test_beta_steps_match_displayed_formulas():
    a, c = params(2)
    t = QuadExt(Fraction(5, 3), 2, -7)
    b3 = beta_step(CurveParam("beta2", t), a, c)
    assert b3.curve_id == "beta3" and b3.t == (a * a + c * t) / a
    # the beta1 formula keeps the beta2 parameter t along the cycle
    b0 = beta_step(b3, a, c)
    assert b0.curve_id == "beta0" and b0.t == (c * t + a * a) / a
    b1 = beta_step(b0, a, c)
    assert b1.curve_id == "beta1" and b1.t == t + (a * a + c * c) / c
    loc = CurveParam("beta2", t)
    for _ in range(4):
        loc = beta_step(loc, a, c)
    assert loc.curve_id == "beta2" and loc.t == t + a * a / c + c + a


@pytest.mark.parametrize("ell", range(2, 7))
def test_ell_condition_reaches_e0(ell):
    a, c = params(ell)
    tr = verify_ell_condition(ell, a, c)
    assert tr.final_status == REACHED_E0
    assert tr.reached_e0_at() == 4 * ell
    assert ell_condition_holds(ell, a, c)


def test_a_c_one_never_reaches_e0():
    tr = verify_ell_condition(2, Fraction(1), Fraction(1))
    assert tr.final_status != REACHED_E0


def test_random_non_solutions_fail():
    pairs = random_non_solutions(20, seed=0)
    assert len(pairs) == 20
    for a, c in pairs:
        for ell in range(2, 7):
            assert not ell_condition_holds(ell, a, c)


def test_h_translation_identity():
    # h(t) = t + a^2/c + c + a applied l times to a vanishes when the relation holds
    for ell in range(2, 7):
        a, c = params(ell)
        t = a
        for _ in range(ell):
            t = t + a * a / c + c + a
        assert t == 0


@pytest.mark.parametrize("ell", [2, 3])
def test_translations_and_avoidance(ell):
    a, c = params(ell)
    assert all_pass(translation_report(a, c))
    rep = beta0_orbit_avoidance(a, c)
    assert rep.passed
    assert rep["q_4n+1 displayed form"].status == "flagged"


@pytest.mark.parametrize("ell", [2, 3])
def test_chart_formulas(ell):
    assert all_pass(chart_formula_report(*params(ell)))


# -- the surface map ----------------------------------------------------------------

@pytest.mark.parametrize("ell", [2, 3])
def test_surface_regression(ell):
    assert all_pass(surface_regression(*params(ell)))


@pytest.mark.parametrize("ell", [2, 3])
def test_g_exceptional(ell):
    a, c = params(ell)
    assert all_pass(g_exceptional_report(a, c))
    ind = indeterminacy_points(a, c)
    assert set(ind) == {E1, E2, E3, p_last(a, c)}


def test_g_lift_vanishes_at_p_last():
    a, c = params(2)
    g = g_map(a, c)
    pt = list(p_last(a, c))
    assert all(P.evaluate(pt) == 0 for P in g.coords)


def test_g_on_L1_goes_to_e1():
    a, c = params(2)
    g = g_map(a, c)
    for x1 in range(1, 6):
        assert evaluate(g, ProjPoint([x1 * x1 + 1, x1, 0])) == E1


@pytest.mark.parametrize("ell", [2, 3])
def test_e1_chart(ell):
    rep = e1_chart_dynamics(*params(ell))
    assert rep.passed
    assert rep["chart formula, literal display"].status == "flagged"


# -- obstruction and the 3-form -------------------------------------------------------

@pytest.mark.parametrize("ell", range(2, 9))
def test_obstruction(ell):
    assert all_pass(fibration_obstruction(*params(ell), ell=ell))


def test_obstruction_sanity_inversion():
    i = QuadExt(0, 1, -1)
    rep = fibration_obstruction(i, QuadExt(1, 0, -1), r_max=1)
    assert not rep["a^2r + c^2r"].ok
    assert not rep["not a root of unity"].ok


def test_ratio_min_poly_ell2():
    a, c = params(2)
    assert ratio_min_poly(a, c) == UniPoly([1, Fraction(3, 2), 1])


def test_omega():
    rep = omega_invariance(*params(2))
    assert all_pass(rep)
    assert rep["J*Omega"].details["equals_L_star"]


@settings(max_examples=20, deadline=None)
@given(st.fractions(-5, 5, max_denominator=5), st.fractions(-5, 5, max_denominator=5))
def test_beta2_translation_any_parameter(p, q):
    a, c = params(2)
    t = QuadExt(p, q, -7)
    if t == 0 or (a * a + c * t) == 0:
        return
    loc = CurveParam("beta2", t)
    for _ in range(4):
        loc = beta_step(loc, a, c)
        if loc is INDETERMINATE:
            return
    assert loc.t == t + (a * a + a * c + c * c) / c
