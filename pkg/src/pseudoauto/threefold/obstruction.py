"""Arithmetic behind the exclusion of invariant fibrations: a^(2r) != -c^(2r)."""

from __future__ import annotations

from fractions import Fraction

from ..exactcore.quadext import QuadExt
from ..exactcore.unipoly import UniPoly
from ..report import Report


def ratio_min_poly(a, c) -> UniPoly:
    """Monic minimal polynomial of a/c over Q."""
    alpha = a / c
    if not isinstance(alpha, QuadExt) or alpha.im == 0:
        return UniPoly([-Fraction(alpha.re if isinstance(alpha, QuadExt) else alpha), 1])
    return UniPoly([alpha.norm(), -alpha.trace(), 1])


def fibration_obstruction(a, c, r_max: int = 100, ell: int | None = None) -> Report:
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    rep = Report("fibration obstruction", {"a": a, "c": c, "r_max": r_max, "ell": ell})
    a2, c2 = a * a, c * c
    pa, pc = a2, c2
    bad = []
    for r in range(1, r_max + 1):
        if pa + pc == 0:
            bad.append(r)
        pa, pc = pa * a2, pc * c2
    rep.add("a^2r + c^2r", f"a^(2r) + c^(2r) != 0 for 1 <= r <= {r_max}", not bad,
            {"vanishing_r": bad[:5]})

    mp = ratio_min_poly(a, c)
    integral = all(Fraction(x).denominator == 1 for x in mp.coeffs)
    if mp.degree == 1:
        root_of_unity = mp[0] in (1, -1)
        certified = not root_of_unity
    else:
        certified = not integral
    rep.add("not a root of unity",
            "a/c has a non-integral minimal polynomial, so it is not a root of unity",
            certified, {"min_poly": mp.to_text("x")})
    if ell is not None:
        expected = UniPoly([1, Fraction(ell + 1, ell), 1])
        rep.add("minimal polynomial", f"a/c is a root of x^2 + ({ell + 1}/{ell})x + 1",
                mp == expected, {"expected": expected.to_text("x")})
    return rep
