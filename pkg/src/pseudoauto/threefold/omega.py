"""The invariant 3-form Omega = d(1/x0) ^ dx1 ^ d(1/x2), in the affine chart x3 = 1.

A rational 3-form in the chart is ``h dx0^dx1^dx2``; we store only ``h``.  For a map
``phi`` of the chart, ``phi^*(h dx) = h(phi) det(D phi) dx``.
"""

from __future__ import annotations

from ..mpoly.maps import RationalMap
from ..mpoly.ratfunc import RatFunc, substitute
from ..report import Report
from .maps import cremona_J, linear_L, lift_F


def _chart_vars():
    return [RatFunc.var(i, 3) for i in range(3)]


def omega_coefficient() -> RatFunc:
    """d(1/x0) ^ dx1 ^ d(1/x2) = (1/(x0^2 x2^2)) dx0^dx1^dx2."""
    x0, x1, x2 = _chart_vars()
    return (x0 * x0 * x2 * x2).inverse()


def in_chart(m: RationalMap) -> list[RatFunc]:
    """The map read from the chart x3 = 1 to the chart x3 = 1."""
    pt = _chart_vars() + [RatFunc.const(1, 3)]
    imgs = [substitute(P, pt) for P in m.coords]
    return [imgs[i] / imgs[3] for i in range(3)]


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def pullback(h: RatFunc, phi: list[RatFunc]) -> RatFunc:
    jac = [[phi[i].diff(j) for j in range(3)] for i in range(3)]
    return substitute_ratfunc(h, phi) * _det3(jac)


def substitute_ratfunc(h: RatFunc, phi) -> RatFunc:
    return substitute(h.num, phi) / substitute(h.den, phi)


def omega_invariance(a, c) -> Report:
    rep = Report("omega", {"a": a, "c": c})
    om = omega_coefficient()
    x0, x1, x2 = _chart_vars()

    f_star = pullback(om, in_chart(lift_F(a, c)))
    rep.add("f*Omega", "f^* Omega = Omega", f_star == om, {"coefficient": f_star.to_text()})

    l_star = pullback(om, in_chart(linear_L(a, c)))
    # dx2 ^ dx0 ^ d(1/x1) = -(1/x1^2) dx2^dx0^dx1 = -(1/x1^2) dx0^dx1^dx2
    expected = -(x1 * x1).inverse()
    rep.add("L*Omega", "L^* Omega = dx2 ^ dx0 ^ d(1/x1)", l_star == expected,
            {"coefficient": l_star.to_text()})

    j_star = pullback(om, in_chart(cremona_J()))
    # J is x_i -> 1/x_i in this chart, so J^* Omega = dx0 ^ d(1/x1) ^ dx2
    rep.add("J*Omega", "J^* Omega = dx0 ^ d(1/x1) ^ dx2 = -(1/x1^2) dx0^dx1^dx2",
            j_star == expected, {"coefficient": j_star.to_text(),
                                 "equals_L_star": j_star == l_star})

    ident = pullback(om, _chart_vars())
    rep.add("identity", "the identity map leaves Omega unchanged", ident == om)
    return rep
