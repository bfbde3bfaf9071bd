"""The Cremona involution, the linear map L, their composite f = L o J, and the surface map g."""

from __future__ import annotations

from dataclasses import dataclass

from ..mpoly.factored import FactoredMap
from ..mpoly.maps import RationalMap, compose, reduce_map
from ..mpoly.poly import MultiPoly


def _xs(n=4):
    return MultiPoly.gens(n)


def cremona_J() -> RationalMap:
    x0, x1, x2, x3 = _xs()
    return RationalMap([x1 * x2 * x3, x0 * x2 * x3, x0 * x1 * x3, x0 * x1 * x2], "J")


def linear_L(a, c) -> RationalMap:
    x0, x1, x2, x3 = _xs()
    return RationalMap([x3, x0 + x3.scale(a), x1, x2 + x3.scale(c)], "L")


def linear_L_inv(a, c) -> RationalMap:
    x0, x1, x2, x3 = _xs()
    return RationalMap([x1 - x0.scale(a), x2, x3 - x0.scale(c), x0], "L^-1")


def lift_F(a, c) -> RationalMap:
    """The cubic lift of f."""
    x0, x1, x2, x3 = _xs()
    return RationalMap([x0 * x1 * x2,
                        x1 * x2 * x3 + (x0 * x1 * x2).scale(a),
                        x0 * x2 * x3,
                        x0 * x1 * x3 + (x0 * x1 * x2).scale(c)], "F")


def face_hints(a, c) -> list[MultiPoly]:
    """Coordinate faces and the faces of L(tetrahedron)."""
    x0, x1, x2, x3 = _xs()
    return [x0, x1, x2, x3, x0 + x3.scale(a), x2 + x3.scale(c),
            x1 - x0.scale(a), x3 - x0.scale(c)]


def f_map(a, c, seed: int = 0) -> RationalMap:
    m = reduce_map(compose(linear_L(a, c), cremona_J()), face_hints(a, c), seed)
    m.name = "f"
    return m


def f_inverse(a, c, seed: int = 0) -> RationalMap:
    """f^-1 = J o L^-1, reduced (never by symbolic inversion)."""
    m = reduce_map(compose(cremona_J(), linear_L_inv(a, c)), face_hints(a, c), seed)
    m.name = "f^-1"
    return m


def f_factored(a, c) -> FactoredMap:
    x0, x1, x2, x3 = _xs()
    s = x3 + x0.scale(a)
    t = x3 + x2.scale(c)
    return FactoredMap([[x0, x1, x2], [x1, x2, s], [x0, x2, x3], [x0, x1, t]])


# -- the surface map on the invariant plane {x0 = 0}, variables (x1, x2, x3) ---

def _ys():
    return MultiPoly.gens(3)


def Q_poly(a, c) -> MultiPoly:
    x1, x2, x3 = _ys()
    return (x1 * x2).scale(c) + x1 * x3 + (x2 * x3).scale(c)


def N_poly(a, c) -> MultiPoly:
    x1, x2, x3 = _ys()
    return x1 * x3 - (x2 * x3).scale(a) - (x1 * x2).scale(a)


def g_factors(a, c):
    x1, x2, x3 = _ys()
    q = Q_poly(a, c)
    q4 = q + (x2 * x3).scale(a)
    line = x3 + x2.scale(a + c)
    return [[q, q4], [x2, x3, q], [x3, line, q4]]


def g_map(a, c) -> RationalMap:
    m = g_factored(a, c).as_rational_map()
    m.name = "g"
    return m


def g_factored(a, c) -> FactoredMap:
    return FactoredMap(g_factors(a, c))


def g_inverse(a, c) -> RationalMap:
    x1, x2, x3 = _ys()
    n = N_poly(a, c)
    n2 = n - (x1 * x2).scale(c)
    m = RationalMap([x1 * (x1 - x2.scale(a + c)) * n2, x1 * x2 * n, n * n2], "g^-1")
    return m


def surface_hints(a, c) -> list[MultiPoly]:
    x1, x2, x3 = _ys()
    q = Q_poly(a, c)
    n = N_poly(a, c)
    return [x1, x2, x3, q, q + (x2 * x3).scale(a), x3 + x2.scale(a + c),
            n, n - (x1 * x2).scale(c), x1 - x2.scale(a), x1 - x2.scale(a + c),
            x3.scale(1) + x2.scale(c)]


@dataclass
class Parameters:
    ell: int | None
    a: object
    c: object
    disc: int | None = None
