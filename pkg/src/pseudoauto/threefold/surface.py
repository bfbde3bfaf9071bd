"""The surface map g on the invariant plane {x0 = 0}: exceptional curves,
indeterminacy points, and the dynamics on the exceptional curve over e1.

Coordinates on the plane are ``(x1, x2, x3)``; ``g = [Q*Q4 : x2*x3*Q : x3*line*Q4]``
with ``Q4 = Q + a*x2*x3`` and ``line = x3 + (a+c)*x2``.
"""

from __future__ import annotations

import random
from fractions import Fraction

from ..exactcore.quadext import QuadExt, sqrt_field
from ..exactcore.unipoly import UniPoly, poly_gcd
from ..mpoly.maps import INDETERMINATE, ProjPoint, evaluate
from ..mpoly.poly import MultiPoly
from ..mpoly.ratfunc import RatFunc, substitute
from ..report import Report
from .maps import Q_poly, g_factors, g_map

E1 = ProjPoint([1, 0, 0])
E2 = ProjPoint([0, 1, 0])
E3 = ProjPoint([0, 0, 1])


def p3_point(a, c) -> ProjPoint:
    return ProjPoint([1, 1 / (a + c), a / c])


def p_last(a, c) -> ProjPoint:
    """The indeterminacy point p_{4l-1} = [c(a+c) : -a : a(a+c)]."""
    return ProjPoint([c * (a + c), -a, a * (a + c)])


def _disc_of(*xs):
    for x in xs:
        if isinstance(x, QuadExt) and x.im:
            return x.disc
    return None


# -- common zeros of a small polynomial system on the plane -----------------------

def _line_points(ell: MultiPoly):
    """Two points spanning the line ``{ell = 0}``."""
    coef = [ell.terms.get(e, 0) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    k = next(i for i in range(3) if coef[i] != 0)
    pts = []
    for j in range(3):
        if j == k:
            continue
        v = [Fraction(0)] * 3
        v[j] = 1
        v[k] = -coef[j] / coef[k]
        pts.append(v)
    return pts


def _univariate_roots(p: UniPoly, disc):
    """All roots of ``p`` in the field, or None if some root lies outside it."""
    p = p.monic()
    if p.degree <= 0:
        return []
    if p.degree == 1:
        return [-p[0]]
    if p.degree == 2:
        b, c0 = p[1], p[0]
        delta = b * b - 4 * c0
        r = sqrt_field(delta, disc if disc is not None else -1)
        if r is None:
            return None
        return [(-b + r) / 2, (-b - r) / 2]
    return None


def common_zeros(polys) -> list[ProjPoint] | None:
    """Common projective zeros of ``polys`` when one of them is linear.

    Returns None when the zero set is a curve or when a coordinate of a zero
    lies outside the coefficient field.
    """
    lin = next(p for p in polys if p.degree() == 1)
    p0, p1 = _line_points(lin)
    others = [p for p in polys if p is not lin]
    disc = _disc_of(*(c for p in polys for c in p.terms.values()))
    g = UniPoly()
    for p in others:
        r = p.restrict_to_line(p0, p1)
        g = r if g.is_zero() else poly_gcd(g, r)
    out = []
    if not g.is_zero():
        roots = _univariate_roots(g, disc)
        if roots is None:
            return None
        out = [ProjPoint([x + s * y for x, y in zip(p0, p1)]) for s in roots]
    elif others:
        return None
    if all(p.evaluate(p1) == 0 for p in others):
        out.append(ProjPoint(p1))
    return out


def indeterminacy_points(a, c) -> list[ProjPoint] | None:
    """Ind(g) from the factorisations of the three coordinates.

    A point is indeterminate iff one factor of each coordinate vanishes, so
    Ind(g) is the union over factor triples.  When both conics Q and Q4 occur,
    ``Q4 - Q = a*x2*x3`` replaces the pair by Q and a coordinate line.
    """
    F0, F1, F2 = g_factors(a, c)
    x1, x2, x3 = MultiPoly.gens(3)
    q = Q_poly(a, c)
    found = []
    systems = []
    for A in F0:
        for B in F1:
            for C in F2:
                sys_ = []
                for p in (A, B, C):
                    if all(p != s for s in sys_):
                        sys_.append(p)
                if any(p.degree() == 1 for p in sys_):
                    systems.append(sys_)
                else:
                    systems.append([q, x2])
                    systems.append([q, x3])
    for s in systems:
        pts = common_zeros(s)
        if pts is None:
            return None
        for p in pts:
            if p not in found:
                found.append(p)
    return found


# -- exceptional curves ------------------------------------------------------------

def _params(a, c):
    """Parametrisations (in two variables s, t) of L1..L4 and their expected images."""
    s, t = MultiPoly.gens(2)
    zero = MultiPoly.const(0, 2)
    cx2x3 = (s * t).scale(c)
    return {
        "L1": ([s, t, zero], E1, "{x3 = 0} is contracted to e1"),
        "L2": ([t, s, s.scale(-c)], p3_point(a, c),
               "{c x2 + x3 = 0} is contracted to p3 = [1 : 1/(a+c) : a/c]"),
        "L3": ([-cx2x3, s * (s.scale(c) + t), t * (s.scale(c) + t)], E3,
               "the conic {Q = 0} is contracted to e3"),
        "L4": ([(s * t).scale(-(a + c)), s * (s.scale(c) + t), t * (s.scale(c) + t)], E2,
               "the conic {Q + a x2 x3 = 0} is contracted to e2"),
    }


def _curve_image(g, param, target: ProjPoint):
    img = [P.substitute(param, 2) for P in g.coords]
    if all(x.is_zero() for x in img):
        return False
    tgt = list(target.coords)
    return all((img[i].scale(tgt[j]) - img[j].scale(tgt[i])).is_zero()
               for i in range(3) for j in range(i + 1, 3))


def g_exceptional_report(a, c, seed: int = 0) -> Report:
    rep = Report("g exceptional", {"a": a, "c": c, "seed": seed})
    g = g_map(a, c)
    q = Q_poly(a, c)
    x1, x2, x3 = MultiPoly.gens(3)
    params = _params(a, c)
    on_curve = {"L1": x3, "L2": x3 + x2.scale(c), "L3": q, "L4": q + (x2 * x3).scale(a)}
    for name, (param, target, claim) in params.items():
        lies = on_curve[name].substitute(param, 2).is_zero()
        rep.add(f"{name} image", claim, lies and _curve_image(g, param, target),
                {"target": target})

    p = p_last(a, c)
    vals = [P.evaluate(list(p.coords)) for P in g.coords]
    rep.add("p_4l-1 indeterminate", "every coordinate of g vanishes at [c(a+c) : -a : a(a+c)]",
            all(v == 0 for v in vals))
    ind = indeterminacy_points(a, c)
    expected = [E1, E2, E3, p]
    ok = ind is not None and len(ind) == 4 and all(e in ind for e in expected)
    rep.add("Ind(g)", "Ind(g) = {e1, e2, e3, p_4l-1}", ok,
            {"points": [x.to_text() for x in ind] if ind else None})

    rng = random.Random(seed)
    hits = []
    for _ in range(5):
        pt = [Fraction(rng.choice((-1, 1)) * rng.randint(1, 50), rng.randint(1, 9)),
              Fraction(rng.randint(1, 50)), 0]
        hits.append(evaluate(g, pt) == E1)
    rep.add("L1 samples", "five random points of L1 map to e1", all(hits))

    exc = [x3, x3 + x2.scale(c), q, q + (x2 * x3).scale(a)]
    while True:
        pt = [Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(3)]
        if all(h.evaluate(pt) != 0 for h in exc):
            break
    img = evaluate(g, pt)
    special = [E1, E2, E3, p3_point(a, c)]
    rep.add("generic point", "a point off Exc(g) has a defined image outside e1, e2, e3, p3",
            img is not INDETERMINATE and all(img != s for s in special),
            {"point": pt, "image": img if img is not INDETERMINATE else None})
    return rep


# -- the exceptional curve E1 over e1 ---------------------------------------------------

def _uv():
    return RatFunc.var(0, 2), RatFunc.var(1, 2)


def g_in_e1_chart(a, c):
    """``g o eps`` for ``eps(u, v) = [1 : u : uv]``, as three rational functions."""
    u, v = _uv()
    one = RatFunc.const(1, 2)
    return [substitute(P, [one, u, u * v]) for P in g_map(a, c).coords]


def _proj_eq(p, q) -> bool:
    return all(p[i] * q[j] == p[j] * q[i] for i in range(3) for j in range(i + 1, 3))


def _at_u0(r: RatFunc):
    """The restriction of a rational function to ``u = 0``, or None if it is 0/0 there."""
    r = r.reduced()
    den = r.den.set_var(0, 0)
    if den.is_zero():
        return None
    return RatFunc(r.num.set_var(0, 0), den)


def e1_chart_dynamics(a, c, n_max: int = 1000) -> Report:
    rep = Report("E1 chart", {"a": a, "c": c, "n_max": n_max})
    u, v = _uv()
    G = g_in_e1_chart(a, c)
    D = c + v + c * u * v + a * u * v
    shown = [RatFunc.const(1, 2), u * v / D, u * v / D * (a + c + v) * D / (c + v + c * u * v)]
    rep.add("chart formula", "g(1, u, uv) = [1 : uv/D : (uv/D)(a+c+v)D/(c+v+cuv)], "
            "D = c+v+cuv+auv", _proj_eq(G, shown))
    literal = [shown[0], shown[1],
               u * v / D * (a + c + v) * (c + v + c * u + a * u * v) / (c + v + c * u * v)]
    agrees = _proj_eq(G, literal)
    rep.add("chart formula, literal display",
            "the displayed factor c+v+cu+auv is read as c+v+cuv+auv", True,
            {"literal_agrees": agrees}, flag=not agrees)

    # chart coordinates of the image: u' = G1/G0, v' = G2/G1
    u_img = G[1] / G[0]
    v_img = G[2] / G[1]
    u0 = _at_u0(u_img)
    v0 = _at_u0(v_img)
    rep.add("E1 invariant", "u = 0 maps into u = 0", u0 is not None and u0.is_zero())
    rep.add("translation", "on E1 the induced map is v -> v + (a+c)",
            v0 is not None and v0 == v + (a + c))

    # indeterminacy on E1: common zeros at u = 0 of the coordinates after removing u^2
    uu = MultiPoly.var(0, 2)
    cut = []
    for r in G:
        num = r.reduced().num
        for _ in range(2):
            num = num.exact_div(uu)
        cut.append(num.set_var(0, 0).restrict_to_line([0, 0], [0, 1]))
    gcd = UniPoly()
    for p in cut:
        gcd = p.monic() if gcd.is_zero() else poly_gcd(gcd, p)
    rep.add("unique indeterminacy", "the only indeterminate point of E1 is v = -c",
            not gcd.is_zero() and gcd.degree >= 1
            and _univariate_roots(gcd, _disc_of(a, c)) is not None
            and set(_univariate_roots(gcd, _disc_of(a, c))) == {-c},
            {"gcd": gcd.to_text("v")})
    rep.add("v = -c indeterminate", "all coordinates vanish at (u, v) = (0, -c)",
            all(x == 0 for x in [p(-c) for p in cut]))

    # strict transform of L1 = {x3 = 0}: affine x1 = 1, chart coordinates of g
    y2, y3 = RatFunc.var(0, 2), RatFunc.var(1, 2)
    one = RatFunc.const(1, 2)
    gx = [substitute(P, [one, y2, y3]) for P in g_map(a, c).coords]
    q = c * y2 + y3 + c * y2 * y3
    q4 = q + a * y2 * y3
    u_l = y2 * y3 / q4
    v_l = ((a + c) * y2 + y3) * q4 / (y2 * q)
    rep.add("lift formula", "u = x2x3/(Q+ax2x3) and v = ((a+c)x2+x3)(Q+ax2x3)/(x2 Q)",
            u_l == gx[1] / gx[0] and v_l == gx[2] / gx[1])
    num_u = u_l.num.set_var(1, 0)
    num_v, den_v = v_l.num.set_var(1, 0), v_l.den.set_var(1, 0)
    rep.add("L1 lands", "the strict transform of L1 lands at (u, v) = (0, a+c)",
            num_u.is_zero() and not den_v.is_zero()
            and RatFunc(num_v, den_v) == RatFunc.const(a + c, 2))

    bad = [n for n in range(1, n_max + 1) if n * a + (n + 1) * c == 0]
    rep.add("orbit avoidance", f"n a + (n+1) c != 0 for 1 <= n <= {n_max}", not bad)
    ratio = a / c
    structural = isinstance(ratio, QuadExt) and ratio.im != 0
    rep.add("avoidance certificate", "a/c is not real, so n a + (n+1) c never vanishes",
            structural, {"a/c": ratio})
    return rep


# -- regression of g against the fourth iterate of f --------------------------------

def surface_regression(a, c, seed: int = 0) -> Report:
    """g is the restriction of f^4 to {x0 = 0}, and g o g^-1 is the identity."""
    from ..mpoly.factored import FactoredIteration
    from ..mpoly.maps import compose, reduce_map, restrict_to_plane
    from .maps import f_factored, g_inverse, surface_hints

    rep = Report("g regression", {"a": a, "c": c})
    it = FactoredIteration(f_factored(a, c), seed)
    f4 = it.expanded(4)
    g4 = restrict_to_plane(f4, 0, seed=seed)
    g = g_map(a, c)
    rep.add("f^4 on x0 = 0", "reduced f^4 restricted to {x0 = 0} equals g up to a scalar",
            g4.equals_up_to_scalar(g), {"deg_f4": f4.degree, "deg_g": g.degree})
    gg = reduce_map(compose(g, g_inverse(a, c)), surface_hints(a, c), seed)
    rep.add("g o g^-1", "g o g^-1 reduces to the identity", gg.is_identity())
    gg = reduce_map(compose(g_inverse(a, c), g), surface_hints(a, c), seed)
    rep.add("g^-1 o g", "g^-1 o g reduces to the identity", gg.is_identity())
    return rep
