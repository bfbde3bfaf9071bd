"""Local charts near the blown-up points and the formulas of f in them.

Charts (blow-down maps):

* ``E3``: ``(u, v, w) -> [u : uv : uw : 1]`` near ``e3``;
* ``E1``: ``(u, v, w) -> [u : 1 : uv : uw]`` near ``e1``;
* ``E1surf``: ``(u, v) -> [1 : u : uv]`` for the surface map ``g`` on ``{x0 = 0}``.

Entry maps send a point of P^3 (off the relevant indeterminacy) to chart
coordinates of its f-image; the reduced maps are ``f o pi`` divided by ``u^2``.
Each formula is an exact identity checked by ``chart_formula_report``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..mpoly.maps import ProjPoint
from ..mpoly.poly import MultiPoly
from ..mpoly.ratfunc import RatFunc
from ..report import Report
from .maps import lift_F

CHARTS = ("E3", "E1", "E1surf")


@dataclass(frozen=True)
class ChartPoint:
    chart_id: str
    coords: tuple

    def blow_down(self) -> ProjPoint:
        if self.chart_id == "E3":
            u, v, w = self.coords
            return ProjPoint([u, u * v, u * w, 1])
        if self.chart_id == "E1":
            u, v, w = self.coords
            return ProjPoint([u, 1, u * v, u * w])
        if self.chart_id == "E1surf":
            u, v = self.coords
            return ProjPoint([1, u, u * v])
        raise ValueError(self.chart_id)

    def to_text(self) -> str:
        parts = ", ".join(c.to_text() if hasattr(c, "to_text") else str(c) for c in self.coords)
        return f"{self.chart_id}({parts})"


# -- E3 ------------------------------------------------------------------------

def e3_entry(x, a, c):
    """Chart coordinates of f(x) near E3, or None when a denominator vanishes."""
    x0, x1, x2, x3 = x
    d = x3 + c * x2
    if d == 0 or x1 == 0 or x0 == 0:
        return None
    return (x2 / d, x3 / x0 + a, x3 / x1)


def e3_image(u, v, w, a, c):
    """``f o pi_E3`` after removing ``u^2``."""
    return [u * v * w, v * w + a * u * v * w, w, v + c * u * v * w]


# -- E1 ------------------------------------------------------------------------

def e1_entry(x, a, c):
    x0, x1, x2, x3 = x
    d = x3 + a * x0
    if d == 0 or x1 == 0 or x2 == 0:
        return None
    return (x0 / d, x3 / x1, (x3 + c * x2) / x2)


def e1_image(u, v, w, a, c):
    """``f o pi_E1`` after removing ``u^2``."""
    return [v, v * w + a * v, u * v * w, w + c * v]


# -- verification -----------------------------------------------------------------

def _uvw():
    return MultiPoly.gens(3)


def _proj_equal(p, q) -> bool:
    n = len(p)
    return all(p[i] * q[j] == p[j] * q[i] for i in range(n) for j in range(i + 1, n))


def chart_formula_report(a, c) -> Report:
    rep = Report("charts", {"a": a, "c": c})
    F = lift_F(a, c)
    u, v, w = _uvw()
    one = MultiPoly.const(1, 3)

    # F o pi in the E3 chart, before and after removing u^2
    pi3 = [u, u * v, u * w, one]
    raw3 = [P.substitute(pi3, 3) for P in F.coords]
    shown_raw = [u ** 3 * v * w, u ** 2 * v * w + (u ** 3 * v * w).scale(a), u ** 2 * w,
                 u ** 2 * v + (u ** 3 * v * w).scale(c)]
    red3 = e3_image(u, v, w, a, c)
    rep.add("E3 lift", "f o pi = [u^3vw : u^2vw + a u^3vw : u^2w : u^2v + c u^3vw]",
            raw3 == shown_raw)
    rep.add("E3 reduced", "dividing by u^2 gives [uvw : vw + a uvw : w : v + c uvw]",
            all(r == (u * u) * s for r, s in zip(raw3, red3)))

    pi1 = [u, one, u * v, u * w]
    raw1 = [P.substitute(pi1, 3) for P in F.coords]
    red1 = e1_image(u, v, w, a, c)
    rep.add("E1 reduced", "f o pi = u^2 [v : vw + av : uvw : w + cv] near e1",
            all(r == (u * u) * s for r, s in zip(raw1, red1)))

    # entry maps: pi(entry(x)) equals f(x) as a projective identity
    y1, y2, y3 = (RatFunc.var(i, 3) for i in range(3))
    x = (RatFunc.const(1, 3), y1, y2, y3)
    fx = [P.evaluate(x) for P in F.coords]
    eu, ev, ew = e3_entry(x, a, c)
    rep.add("E3 entry", "from {x0 = 1}: (u, v, w) = (x2/(x3+cx2), x3+a, x3/x1)",
            _proj_equal([eu, eu * ev, eu * ew, RatFunc.const(1, 3)], fx))
    x = (y1, RatFunc.const(1, 3), y2, y3)
    fx = [P.evaluate(x) for P in F.coords]
    eu, ev, ew = e1_entry(x, a, c)
    rep.add("E1 entry", "(u, v, w) = (x0/(x3+ax0), x3/x1, (x3+cx2)/x2)",
            _proj_equal([eu, RatFunc.const(1, 3), eu * ev, eu * ew], fx))
    return rep
