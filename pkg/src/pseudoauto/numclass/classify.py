"""Exact classification of integer polynomials by the position of their roots.

Unit-circle roots are only ever detected through the trace polynomial of the
reciprocal part ``gcd(p, rev p)``; the rest is counted by Schur-Cohn.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..exactcore.roots import (isolate_real_roots, refine_root,
                               schur_cohn_inside, sturm_count)
from ..exactcore.unipoly import (UniPoly, cyclotomic, euler_phi, is_reciprocal, poly_gcd,
                                 squarefree_decomposition, squarefree_part)

CYCLOTOMIC_PRODUCT = "CyclotomicProduct"
PISOT = "Pisot"
SALEM = "Salem"
QUADRATIC_UNIT = "QuadraticUnit"
OTHER = "Other"


def _check_integer(p: UniPoly):
    if p.is_zero():
        raise ValueError("zero polynomial")
    if not p.is_integral():
        raise ValueError("integer coefficients required")


def dickson(k: int) -> UniPoly:
    """``D_k`` with ``t^k + t^-k = D_k(t + 1/t)``."""
    a, b = UniPoly([2]), UniPoly([0, 1])
    if k == 0:
        return a
    for _ in range(k - 1):
        a, b = b, UniPoly([0, 1]) * b - a
    return b


def trace_poly(p: UniPoly) -> UniPoly:
    """The degree-m polynomial q with ``p(t) = t^m q(t + 1/t)`` for palindromic p of degree 2m."""
    if p.degree % 2 or p.reverse() != p:
        raise ValueError("trace polynomial needs a palindromic polynomial of even degree")
    m = p.degree // 2
    q = UniPoly([p[m]])
    for k in range(1, m + 1):
        if p[m + k] != 0:
            q = q + dickson(k) * p[m + k]
    return q


def unit_circle_roots(g: UniPoly) -> int:
    """Roots of a palindromic ``g`` on the unit circle, with multiplicity.

    Requires ``g(1) != 0`` and ``g(-1) != 0`` (so the trace roots avoid +-2).
    """
    if g.degree <= 0:
        return 0
    q = trace_poly(g)
    total = 0
    for f, mult in squarefree_decomposition(q):
        total += 2 * mult * sturm_count(f, -2, 2)
    return total


def remove_cyclotomic(p: UniPoly):
    """Divide out every cyclotomic factor; returns ``(rest, [(n, multiplicity)])``."""
    removed = []
    rest = p
    deg = p.degree
    for n in range(1, 2 * deg * deg + 2):
        if euler_phi(n) > rest.degree:
            continue
        phi = cyclotomic(n)
        k = 0
        while rest.degree >= phi.degree:
            q, r = divmod(rest, phi)
            if not r.is_zero():
                break
            rest, k = q, k + 1
        if k:
            removed.append((n, k))
    return rest, removed


@dataclass
class ClassifiedNumber:
    poly: UniPoly
    verdict: str
    dominant_root: tuple | None = None
    certificate: dict = field(default_factory=dict)

    def counts(self) -> tuple[int, int, int]:
        c = self.certificate
        return c["inside"], c["on_circle"], c["outside"]

    def as_dict(self) -> dict:
        return {"poly": self.poly.to_text(), "verdict": self.verdict,
                "dominant_root": None if self.dominant_root is None
                else [str(x) for x in self.dominant_root],
                "certificate": self.certificate}


def root_counts(p: UniPoly) -> dict:
    """Exact inside / on / outside counts (with multiplicity) for an integer polynomial."""
    return _analyse(p)[0]


def _analyse(p: UniPoly):
    _check_integer(p)
    zeros = p.trailing_zeros()
    body = p.shift_down(zeros)
    rest, removed = remove_cyclotomic(body)
    cyc_deg = sum(euler_phi(n) * k for n, k in removed)
    if rest.degree <= 0:
        g = UniPoly([1])
    else:
        g = poly_gcd(rest, rest.reverse())
    if g.degree > 0 and g.reverse() != g:
        raise ArithmeticError("reciprocal part is not palindromic after removing +-1")
    on = unit_circle_roots(g)
    free = rest.exact_div(g) if rest.degree > 0 else rest
    sc = schur_cohn_inside(free) if free.degree > 0 else 0
    paired = (g.degree - on) // 2
    inside = zeros + sc + paired
    outside = (free.degree - sc) + paired
    return {"degree": p.degree, "zero_roots": zeros,
            "cyclotomic_factors": removed, "cyclotomic_degree": cyc_deg,
            "rest": rest.to_text(), "rest_degree": rest.degree,
            "reciprocal_part": g.to_text(), "reciprocal_part_degree": g.degree,
            "inside": inside, "on_circle": on + cyc_deg, "outside": outside,
            "rest_on_circle": on,
            "real_roots_above_1": sturm_count(squarefree_part(rest), 1, None)
            if rest.degree > 0 else 0}, rest


def classify(p: UniPoly) -> ClassifiedNumber:
    _check_integer(p)
    poly = p.primitive()
    if poly.lc() < 0:
        poly = -poly
    cert, rest = _analyse(poly)
    cert["monic"] = poly.lc() == 1
    n_in, n_on, n_out = cert["inside"], cert["on_circle"], cert["outside"]
    if n_in + n_on + n_out != poly.degree:
        cert["diagnostic"] = "root counts do not add up to the degree"
        return ClassifiedNumber(poly, OTHER, None, cert)
    monic = cert["monic"]
    verdict = OTHER
    if not monic:
        cert["diagnostic"] = "not monic: roots are not algebraic integers"
    elif rest.degree <= 0 and cert["zero_roots"] == 0:
        verdict = CYCLOTOMIC_PRODUCT
    elif n_out == 1 and cert["real_roots_above_1"] == 1:
        rin = n_in - cert["zero_roots"]
        if is_reciprocal(rest) and rin == 1 and cert["rest_on_circle"] == 0 and rest.degree == 2:
            verdict = QUADRATIC_UNIT
        elif is_reciprocal(rest) and rin == 1 and cert["rest_on_circle"] >= 2:
            verdict = SALEM
        elif cert["rest_on_circle"] == 0 and rin == rest.degree - 1:
            verdict = PISOT
        else:
            cert["diagnostic"] = "one dominant root but the other roots are mixed"
    else:
        cert["diagnostic"] = "no unique real root outside the unit circle"
    dom = None
    if verdict in (PISOT, SALEM, QUADRATIC_UNIT):
        dom = _dominant_interval(rest, Fraction(1, 10 ** 6))
        cert["dominant_rest"] = rest.to_text()
    return ClassifiedNumber(poly, verdict, dom, cert)


def _dominant_interval(p: UniPoly, eps) -> tuple[Fraction, Fraction]:
    q = squarefree_part(p)
    ivs = [(lo, hi) for lo, hi in isolate_real_roots(q) if hi > 1]
    if q(1) != 0 and sturm_count(q, 1, None) != 1:
        raise ValueError("no unique real root above 1")
    lo, hi = ivs[-1]
    if lo == hi:
        return lo, hi
    lo = max(lo, Fraction(1))
    return refine_root(q, lo, hi, eps)


def dominant_root(p: UniPoly, eps) -> tuple[Fraction, Fraction]:
    """Isolating interval of width < eps for the unique dominant real root > 1."""
    eps = Fraction(eps)
    c = classify(p)
    if c.verdict not in (PISOT, SALEM, QUADRATIC_UNIT):
        raise ValueError(f"no unique dominant real root (verdict {c.verdict})")
    rest = _analyse(c.poly)[1]
    return _dominant_interval(rest, eps)
