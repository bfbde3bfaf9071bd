"""Multivariate gcd.

Homogeneous inputs go through the modular algorithm in ``modgcd``; anything
else uses recursive primitive remainder sequences, which are slow but total.
"""

from __future__ import annotations

from .modgcd import homogeneous_gcd
from .poly import MultiPoly


def _coeffs_in(p: MultiPoly, v: int) -> dict[int, MultiPoly]:
    out: dict[int, dict] = {}
    for e, c in p.terms.items():
        k = e[v]
        out.setdefault(k, {})[e[:v] + (0,) + e[v + 1:]] = c
    return {k: MultiPoly(p.nvars, t) for k, t in out.items()}


def _from_coeffs(coeffs: dict[int, MultiPoly], v: int, nvars: int) -> MultiPoly:
    terms = {}
    for k, c in coeffs.items():
        for e, a in c.terms.items():
            terms[e[:v] + (k,) + e[v + 1:]] = a
    return MultiPoly(nvars, terms)


def content(p: MultiPoly, v: int) -> MultiPoly:
    """gcd of the coefficients of ``p`` viewed as a polynomial in ``x_v``."""
    cs = sorted(_coeffs_in(p, v).values(), key=len)
    g = None
    for c in cs:
        if c.is_constant():
            return MultiPoly.const(1, p.nvars)
        g = c if g is None else mgcd(g, c)
        if g.is_constant():
            return MultiPoly.const(1, p.nvars)
    return g.monic()


def primitive_part(p: MultiPoly, v: int) -> MultiPoly:
    c = content(p, v)
    return p if c.is_constant() else p.exact_div(c)


def prem(a: MultiPoly, b: MultiPoly, v: int) -> MultiPoly:
    """Sparse pseudo-remainder of ``a`` by ``b`` in the variable ``x_v``."""
    db = b.degree_in(v)
    cb = _coeffs_in(b, v)
    lcb = cb[db]
    r = a
    while not r.is_zero() and r.degree_in(v) >= db:
        dr = r.degree_in(v)
        lcr = _coeffs_in(r, v)[dr]
        shift = [0] * a.nvars
        shift[v] = dr - db
        mono = MultiPoly(a.nvars, {tuple(shift): 1})
        r = r * lcb - lcr * mono * b
    return r


def mgcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Monic (grlex leading coefficient 1) gcd of two multivariate polynomials."""
    if (a.nvars >= 2 and not a.is_zero() and not b.is_zero()
            and not a.is_constant() and not b.is_constant()
            and a.is_homogeneous() and b.is_homogeneous()):
        return homogeneous_gcd(a, b)
    return mgcd_prs(a, b)


def mgcd_prs(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Primitive remainder sequence gcd; the reference implementation."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return MultiPoly.const(1, a.nvars)
    va, vb = set(a.variables()), set(b.variables())
    both = va & vb
    if not both:
        # a common factor can only involve variables occurring in both
        return MultiPoly.const(1, a.nvars)
    v = min(both, key=lambda i: max(a.degree_in(i), b.degree_in(i)))
    ca, cb = content(a, v), content(b, v)
    gc = mgcd_prs(ca, cb) if not (ca.is_constant() and cb.is_constant()) else MultiPoly.const(1, a.nvars)
    pa = a if ca.is_constant() else a.exact_div(ca)
    pb = b if cb.is_constant() else b.exact_div(cb)
    if pa.degree_in(v) < pb.degree_in(v):
        pa, pb = pb, pa
    while not pb.is_zero() and pb.degree_in(v) > 0:
        r = prem(pa, pb, v)
        pa, pb = pb, (primitive_part(r, v) if not r.is_zero() else r)
    g = pa if pb.is_zero() else MultiPoly.const(1, a.nvars)
    if g.degree_in(v) <= 0:
        g = MultiPoly.const(1, a.nvars)
    else:
        g = primitive_part(g, v)
    return (gc * g).monic()
