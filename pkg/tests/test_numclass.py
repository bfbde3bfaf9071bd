from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pseudoauto.exactcore import UniPoly, sturm_count
from pseudoauto.lattice import SALEM_OCTIC, chi_ell, chi_ell_salem_part, pisot_factor
from pseudoauto.numclass import (CYCLOTOMIC_PRODUCT, OTHER, PISOT, QUADRATIC_UNIT, SALEM,
                                 classify, dominant_root, is_reciprocal, root_counts,
                                 salem_threshold_check, salem_trend, threshold_enclosure,
                                 trace_poly)

T = UniPoly([-1, 0, -1, 1])


def test_reciprocal():
    assert is_reciprocal(SALEM_OCTIC)
    assert not is_reciprocal(pisot_factor(3))
    assert is_reciprocal(UniPoly([-1, 1]))


def test_trace_poly_examples():
    assert trace_poly(UniPoly([1, 1, 0, -2, 0, 1, 1])) == UniPoly([-4, -3, 1, 1])
    assert trace_poly(UniPoly([1, 0, 1])) == UniPoly([0, 1])
    q = trace_poly(SALEM_OCTIC)
    assert q.degree == 4
    assert sturm_count(q, -2, 2) == 3


def test_classify_examples():
    assert classify(SALEM_OCTIC).verdict == SALEM
    assert classify(T).verdict == PISOT
    assert classify(UniPoly([-1, 0, 0, 0, 1])).verdict == CYCLOTOMIC_PRODUCT
    assert classify(UniPoly([1, -3, 1])).verdict == QUADRATIC_UNIT
    assert classify(UniPoly([1, 1, 0, -2, 0, 1, 1])).verdict == OTHER
    for ell in (3, 4, 5):
        assert classify(pisot_factor(ell)).verdict == PISOT


@pytest.mark.parametrize("ell", range(2, 9))
def test_salem_part_of_chi(ell):
    assert classify(chi_ell_salem_part(ell)).verdict == SALEM
    assert classify(chi_ell(ell)).verdict == SALEM


def test_reversed_T_swaps_counts():
    assert classify(T).counts() == (2, 0, 1)
    assert classify(T.reverse()).counts() == (1, 0, 2)


def test_non_monic_is_other():
    c = classify(UniPoly([1, -3, 2]))
    assert c.verdict == OTHER
    assert "diagnostic" in c.certificate


def test_dominant_roots():
    lo, hi = dominant_root(T, Fraction(1, 100))
    # alpha_T = 1.46557..., quoted to two decimals as 1.46
    assert lo <= Fraction(14655712, 10 ** 7) <= hi and hi - lo < Fraction(1, 100)
    assert abs(float(lo) - 1.46) < 0.01
    lo, hi = dominant_root(UniPoly([-1, -1, 1]), Fraction(1, 10 ** 6))
    assert lo < (1 + 5 ** 0.5) / 2 < hi
    lo, hi = dominant_root(SALEM_OCTIC, Fraction(1, 10 ** 9))
    assert hi - lo < Fraction(1, 10 ** 9)
    with pytest.raises(ValueError):
        dominant_root(UniPoly([-1, 0, 0, 0, 1]), Fraction(1, 10))


def test_threshold():
    lo, hi = threshold_enclosure(Fraction(1, 1000))
    assert hi - lo <= Fraction(1, 10)
    assert 10.5 < float(lo) < 10.7
    rep = salem_threshold_check()
    for name in ("l = 3 above", "l = 2 below", "l = 2 direct"):
        assert rep[name].ok


def test_salem_trend_increases():
    rep = salem_trend(range(2, 6))
    assert rep.passed
    assert rep["monotone"].ok


int_polys = st.lists(st.integers(-5, 5), min_size=2, max_size=8).filter(lambda c: c[-1] != 0)


@settings(max_examples=80, deadline=None)
@given(int_polys)
def test_root_counts_against_numpy(p):
    P = UniPoly(p)
    counts = root_counts(P)
    assert counts["inside"] + counts["on_circle"] + counts["outside"] == P.degree
    roots = np.roots(p[::-1])
    mods = np.abs(roots)
    if np.any(np.abs(mods - 1) < 1e-5) and counts["on_circle"] == 0:
        return
    assert counts["inside"] == int(np.sum(mods < 1 - 1e-5))
    assert counts["outside"] == int(np.sum(mods > 1 + 1e-5))


@settings(max_examples=40, deadline=None)
@given(int_polys)
def test_reversal_swaps_inside_outside(p):
    P = UniPoly(p)
    if P[0] == 0:
        return
    a, b = root_counts(P), root_counts(P.reverse())
    assert (a["inside"], a["on_circle"], a["outside"]) == (b["outside"], b["on_circle"], b["inside"])
