import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pseudoauto.exactcore import UniPoly, cyclotomic, sturm_count
from pseudoauto.numclass import SALEM, classify
from pseudoauto.torus3 import (FIBERED, KRONECKER, NON_FIBERED, ReciprocalSextic, admissible,
                               beta_on_circle, companion, complex_structure, composed_product,
                               fibration_criterion, lambda1_enclosure, search, spectrum)

EXAMPLE = ReciprocalSextic(1, 0, -2)


def test_example_admissible():
    ok, cert = admissible(EXAMPLE)
    assert ok
    assert EXAMPLE.poly == UniPoly([1, 1, 0, -2, 0, 1, 1])
    assert EXAMPLE.theta == UniPoly([-4, -3, 1, 1])
    assert cert["real_roots"] == 1 and cert["roots_in_open_interval"] == 1
    assert [sign for _, sign in cert["critical_values"]] == [-1, -1]
    assert sturm_count(EXAMPLE.theta, 1, 2) == 1


def test_t6_plus_1_not_admissible():
    assert not admissible(ReciprocalSextic(0, 0, 0))[0]


def test_search():
    hits = search(3)
    assert EXAMPLE in hits
    assert hits == sorted(hits, key=lambda s: s.as_tuple())
    assert all(admissible(s)[0] for s in hits)
    assert search(0) == []


def test_search_symmetry():
    hits = set(search(2))
    assert all(ReciprocalSextic(-s.a, s.b, -s.c) in hits for s in hits)


def test_admissible_is_never_salem():
    for s in search(2):
        assert classify(s.poly).verdict != SALEM


def test_spectrum_example():
    sp = spectrum(EXAMPLE)
    assert sp.beta_on_circle and sp.lambda1_equals_lambda2
    assert all(sp.checks.values())
    lo, hi = sp.lambda1
    assert lo <= hi and hi - lo < 1e-9
    roots = np.roots(EXAMPLE.poly.int_coeffs()[::-1])
    assert lo - 1e-9 < max(abs(roots)) ** 2 < hi + 1e-9
    assert abs(np.prod(roots) - 1) < 1e-9


def test_salem_sextic_pattern():
    # x^6 - x^4 - x^3 - x^2 + 1: real dominant root, four circle roots
    s = ReciprocalSextic(0, -1, -1)
    assert classify(s.poly).verdict == SALEM
    assert beta_on_circle(s)
    assert not admissible(s)[0]
    with pytest.raises(ValueError):
        spectrum(s)


def test_fibration_criterion_cases():
    assert fibration_criterion(EXAMPLE)[0] == NON_FIBERED
    quad = UniPoly([1, -3, 1]) * cyclotomic(8)
    verdict, cert = fibration_criterion(quad)
    assert verdict == FIBERED
    assert cert["lambda1_min_poly"] == "x^2 - 7*x + 1"
    assert fibration_criterion(ReciprocalSextic(0, 0, 0))[0] == KRONECKER
    assert fibration_criterion(ReciprocalSextic(0, -1, -1))[0] == FIBERED


def test_composed_product_roots():
    p = UniPoly([-2, 0, 1])
    # products of roots of x^2 - 2: 2, 2, -2, -2
    assert composed_product(p) == UniPoly([-2, 1]) ** 2 * UniPoly([2, 1]) ** 2


def test_lambda1_enclosure_contains_value():
    lo, hi = lambda1_enclosure(EXAMPLE.poly)
    assert hi - lo < 1e-9
    assert float(lo) <= 1.7709445841945068 <= float(hi)


def test_complex_structure_example():
    cs = complex_structure(EXAMPLE, 1e-9)
    assert cs.ok(1e-9)
    assert cs.det_companion == 1
    J = np.array(cs.J)
    for e in np.eye(6):
        assert np.allclose(J @ (J @ e), -e, atol=1e-9)
    M = np.array(companion(EXAMPLE).to_lists(), dtype=float)
    assert np.linalg.norm(J @ M - M @ J) < 1e-9


@settings(max_examples=25, deadline=None)
@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_admissible_matches_numpy(a, b, c):
    s = ReciprocalSextic(a, b, c)
    ok, cert = admissible(s)
    roots = np.roots(s.poly.int_coeffs()[::-1])
    on = np.sum(np.abs(np.abs(roots) - 1) < 1e-7)
    real = np.sum(np.abs(roots.imag) < 1e-7)
    if ok:
        assert on == 2 and real == 0
    elif cert["irreducible"] and on == 2 and real == 0:
        pytest.fail("numpy sees one circle pair and no real roots but the sextic was rejected")
