from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from pseudoauto.exactcore import (IntMatrix, QuadExt, UniPoly, charpoly, cyclotomic,
                                  ell_relation, irreducibility_certificate, is_irreducible,
                                  parse_coefficients, poly_gcd, quad_field_for_ell,
                                  refine_root, resultant, schur_cohn_inside, sqrt_field,
                                  squarefree_decomposition, sturm_count, isolate_real_roots)

X = sympy.Symbol("x")

small = st.integers(-6, 6)
fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
int_polys = st.lists(small, min_size=2, max_size=7).filter(lambda c: c[-1] != 0)


def to_sympy(p: UniPoly):
    return sympy.Poly([sympy.Rational(str(c)) for c in reversed(p.coeffs)], X)


# -- quadratic fields -----------------------------------------------------------

def test_quad_field_ell2():
    a, c, disc = quad_field_for_ell(2)
    assert disc == -7
    assert a == QuadExt(Fraction(-3, 4), Fraction(1, 4), -7)
    assert c == 1
    assert (a / c) * (a / c).conjugate() == 1


@pytest.mark.parametrize("ell", range(2, 9))
def test_ell_relation_vanishes(ell):
    a, c, _ = quad_field_for_ell(ell)
    assert ell_relation(ell, a, c) == 0
    # the conjugate branch solves it too
    assert ell_relation(ell, a.conjugate(), c) == 0


@pytest.mark.parametrize("ell", [1, 0, -3])
def test_ell_rejected(ell):
    with pytest.raises(ValueError):
        quad_field_for_ell(ell)


@given(fracs, fracs, fracs, fracs, st.sampled_from([-7, -3, 5, 2]))
def test_quadext_field_axioms(a, b, c, d, disc):
    x, y = QuadExt(a, b, disc), QuadExt(c, d, disc)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) * y == x * y + y * y
    if not y.is_zero():
        assert (x / y) * y == x
    assert x.norm() == (x * x.conjugate()).re


@given(fracs, fracs)
def test_quadext_matches_sympy(a, b):
    x = QuadExt(a, b, -7)
    s = sympy.Rational(str(a)) + sympy.Rational(str(b)) * sympy.sqrt(-7)
    p = x * x * x
    assert sympy.simplify(sympy.expand(s ** 3) - (sympy.Rational(str(p.re))
                                                  + sympy.Rational(str(p.im)) * sympy.sqrt(-7))) == 0


@given(fracs, fracs)
def test_sqrt_field_squares_back(a, b):
    z = QuadExt(a, b, -7)
    r = sqrt_field(z * z, -7)
    assert r is not None and r * r == z * z


def test_real_sign():
    w = QuadExt(0, 1, 5)
    assert (w - 2).sign() == 1
    assert (w - Fraction(224, 100)).sign() == -1


# -- polynomials ------------------------------------------------------------------

@given(int_polys, int_polys)
def test_divmod_and_gcd_against_sympy(p, q):
    P, Q = UniPoly(p), UniPoly(q)
    d, r = divmod(P, Q)
    assert d * Q + r == P
    assert r.is_zero() or r.degree < Q.degree
    g = poly_gcd(P, Q)
    assert to_sympy(g).monic() == sympy.gcd(to_sympy(P), to_sympy(Q)).monic()


def sylvester_det(p, q):
    """Resultant as the determinant of the Sylvester matrix (coefficients low to high)."""
    m, n = len(p) - 1, len(q) - 1
    rows = []
    for i in range(n):
        rows.append([0] * i + p[::-1] + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + q[::-1] + [0] * (m - 1 - i))
    return sympy.Matrix(rows).det()


def test_resultant_sign_convention():
    # prod over roots (alpha - beta) = (-1 - 0)^3
    assert resultant(UniPoly([1, 1]), UniPoly([0, 0, 0, 1])) == -1


@given(int_polys, int_polys)
def test_resultant_against_sylvester(p, q):
    assert resultant(UniPoly(p), UniPoly(q)) == sylvester_det(p, q)


@given(int_polys)
def test_squarefree_decomposition_recombines(p):
    P = UniPoly(p) * UniPoly(p[:2] if p[1] else [1, 1])
    total = UniPoly([1])
    for f, k in squarefree_decomposition(P):
        total = total * f ** k
    assert total.monic() == P.monic()


@pytest.mark.parametrize("n", [1, 2, 5, 8, 12, 15, 30])
def test_cyclotomic_against_sympy(n):
    assert to_sympy(cyclotomic(n)) == sympy.Poly(sympy.cyclotomic_poly(n, X), X)


def test_parse_coefficients():
    assert parse_coefficients("1,-1,0,-1") == UniPoly([-1, 0, -1, 1])
    assert parse_coefficients("1,-1,0,-1", constant_first=True) == UniPoly([1, -1, 0, -1])
    with pytest.raises(ValueError):
        parse_coefficients(" , ")


# -- real roots --------------------------------------------------------------------

def test_sturm_examples():
    assert sturm_count(UniPoly([-2, 0, 1]), 0, 2) == 1
    assert sturm_count(UniPoly([-1, 0, -1, 1]), 1, 2) == 1
    assert sturm_count(UniPoly([-4, -3, 1, 1]), -2, 2) == 1


@settings(max_examples=60)
@given(int_polys)
def test_sturm_against_sympy(p):
    P = UniPoly(p)
    roots = sympy.Poly(to_sympy(P)).real_roots()
    assert sturm_count(P) == len(set(roots))
    ivs = isolate_real_roots(P)
    assert len(ivs) == len(set(roots))


def test_refine_root_width():
    T = UniPoly([-1, 0, -1, 1])
    (lo, hi), = isolate_real_roots(T)
    lo, hi = refine_root(T, lo, hi, Fraction(1, 10 ** 9))
    assert hi - lo < Fraction(1, 10 ** 9)
    assert lo <= Fraction(1465571231876768, 10 ** 15) <= hi


def test_schur_cohn_examples():
    assert schur_cohn_inside(UniPoly([-1, -1, 1])) == 1
    assert schur_cohn_inside(UniPoly([-1, 0, -1, 1])) == 2
    assert schur_cohn_inside(UniPoly([-2, 1])) == 0


@settings(max_examples=80)
@given(int_polys)
def test_schur_cohn_against_numpy(p):
    roots = np.roots(p[::-1])
    mods = np.abs(roots)
    if np.any(np.abs(mods - 1) < 1e-6):
        return
    try:
        n = schur_cohn_inside(UniPoly(p))
    except ArithmeticError:
        return
    assert n == int(np.sum(mods < 1))


# -- matrices ----------------------------------------------------------------------

def test_charpoly_identity_and_companion():
    assert charpoly(IntMatrix.identity(3)) == UniPoly([-1, 1]) ** 3
    chi = UniPoly([1, 1, 0, -2, 0, 1, 1])
    assert charpoly(IntMatrix.companion(chi)) == chi


@settings(max_examples=40)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n),
                                                     min_size=n, max_size=n)))
def test_charpoly_against_sympy(rows):
    M = IntMatrix(rows)
    expected = sympy.Matrix(rows).charpoly(X)
    assert to_sympy(M.charpoly()) == sympy.Poly(expected.as_expr(), X)
    assert M.det() == sympy.Matrix(rows).det()


# -- irreducibility ---------------------------------------------------------------

@settings(max_examples=60)
@given(int_polys)
def test_irreducible_against_sympy(p):
    P = UniPoly(p)
    if P.degree < 1:
        return
    facs = sympy.factor_list(to_sympy(P))[1]
    expected = len(facs) == 1 and facs[0][1] == 1 and facs[0][0].degree() == P.degree
    assert is_irreducible(P) == expected


def test_irreducibility_certificate_example():
    cert = irreducibility_certificate(UniPoly([1, 1, 0, -2, 0, 1, 1]))
    assert cert["irreducible"]
