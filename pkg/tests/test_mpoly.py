import random
from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from pseudoauto.exactcore import QuadExt, quad_field_for_ell
from pseudoauto.mpoly import (INDETERMINATE, FactoredIteration, MultiPoly, ProjPoint,
                              RationalMap, compose, evaluate, jacobian_det, mgcd, parse_poly,
                              reduce_map, restrict_to_plane)
from pseudoauto.mpoly.ratfunc import RatFunc
from pseudoauto.threefold.maps import (cremona_J, f_factored, f_map, g_inverse, g_map,
                                       lift_F, linear_L, linear_L_inv)

SYMS = sympy.symbols("x0 x1 x2")
A2, C2, _ = quad_field_for_ell(2)


def mp_from_terms(terms, n=3):
    return MultiPoly(n, {tuple(e): c for e, c in terms})


def to_sympy(p: MultiPoly):
    return sympy.expand(sum(sympy.Rational(str(c)) * sympy.prod([s ** k for s, k in zip(SYMS, e)])
                            for e, c in p.terms.items()))


monos = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
polys3 = st.lists(st.tuples(monos, st.integers(-4, 4).filter(bool)), min_size=1, max_size=4).map(
    mp_from_terms)


@given(polys3, polys3, polys3)
def test_ring_axioms(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p - p == MultiPoly(3)


@given(polys3, polys3)
def test_product_against_sympy(p, q):
    assert to_sympy(p * q) == sympy.expand(to_sympy(p) * to_sympy(q))


@settings(max_examples=30, deadline=None)
@given(polys3, polys3, polys3)
def test_gcd_against_sympy(p, q, r):
    if p.is_zero() or q.is_zero() or r.is_zero():
        return
    g = mgcd(p * r, q * r)
    expected = sympy.gcd(to_sympy(p * r), to_sympy(q * r))
    ratio = sympy.cancel(to_sympy(g) / expected)
    assert ratio.is_number and ratio != 0


def test_parse_poly_roundtrip():
    p = parse_poly("x0*x1 - 3*x2^2 + 1/2", ["x0", "x1", "x2"])
    x0, x1, x2 = MultiPoly.gens(3)
    assert p == x0 * x1 - (x2 * x2).scale(3) + MultiPoly.const(Fraction(1, 2), 3)


def test_reduce_map_with_hint():
    x0, x1, x2 = MultiPoly.gens(3)
    m = reduce_map(RationalMap([x0 * x1, x0 * x2]), [x0])
    assert m.equals_up_to_scalar(RationalMap([x1, x2]))


def test_compose_L_J_is_F():
    a, c = A2, C2
    m = reduce_map(compose(linear_L(a, c), cremona_J()))
    assert m.equals_up_to_scalar(lift_F(a, c))
    assert f_map(a, c).equals_up_to_scalar(lift_F(a, c))


def test_J_involution_and_L_inverse():
    assert reduce_map(compose(cremona_J(), cremona_J())).is_identity()
    assert reduce_map(compose(linear_L(A2, C2), linear_L_inv(A2, C2))).is_identity()


def test_f_squared_degree_drops():
    f = f_map(A2, C2)
    raw = compose(f, f)
    assert raw.degree == 9
    assert reduce_map(raw, seed=1).degree == 3


def test_evaluate_examples():
    a, c = A2, C2
    img = evaluate(f_map(a, c), ProjPoint([1, 1, 1, 1]))
    assert img == ProjPoint([1, 1 + a, 1, 1 + c])
    assert evaluate(cremona_J(), ProjPoint([1, 0, 0, 0])) is INDETERMINATE
    # a point of L1 = {x3 = 0} goes to e1
    assert evaluate(g_map(a, c), ProjPoint([2, 5, 0])) == ProjPoint([1, 0, 0])


def test_jacobian_examples():
    x = MultiPoly.gens(4)
    assert jacobian_det(RationalMap(x)) == MultiPoly.const(1, 4)
    mono = x[0] * x[1] * x[2] * x[3]
    assert jacobian_det(cremona_J()) == (mono * mono).scale(-3)
    # det L = -1 flips the sign of Jac(J)
    assert jacobian_det(lift_F(A2, C2)) == (mono * mono).scale(3)


def test_g_inverse_composition():
    a, c = A2, C2
    assert reduce_map(compose(g_map(a, c), g_inverse(a, c))).is_identity()
    assert reduce_map(compose(g_inverse(a, c), g_map(a, c))).is_identity()
    assert g_map(a, c).degree == 4


def test_restrict_identity():
    x = MultiPoly.gens(4)
    r = restrict_to_plane(RationalMap(x), 0)
    assert r.is_identity()


def test_factored_iteration_degrees():
    assert FactoredIteration(f_factored(A2, C2), 0).run(4) == [3, 3, 5, 7]


@settings(max_examples=25, deadline=None)
@given(st.integers(-9, 9), st.integers(-9, 9), st.integers(1, 9))
def test_ratfunc_field(p, q, r):
    x, y = RatFunc.var(0, 2), RatFunc.var(1, 2)
    f = (x * p + y) / (y * r + 1)
    g = (x - q) / (x * x + 1)
    assert (f + g) - g == f
    if not f.is_zero():
        assert (g / f) * f == g


def test_random_points_on_quadratic_field():
    rng = random.Random(3)
    m = f_map(A2, C2)
    for _ in range(5):
        pt = [QuadExt(rng.randint(1, 9), rng.randint(-5, 5), -7) for _ in range(4)]
        img = evaluate(m, ProjPoint(pt))
        x0, x1, x2, x3 = pt
        inv = [1 / v for v in pt]
        expected = ProjPoint([inv[3], inv[0] + A2 * inv[3], inv[1], inv[2] + C2 * inv[3]])
        assert img == expected
