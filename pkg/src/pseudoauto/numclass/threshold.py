"""The Salem threshold 2(a_T + 1)/(a_T - 1) for the Pisot root a_T of T = x^3 - x^2 - 1."""

from __future__ import annotations

from fractions import Fraction

from ..lattice.actions import T_POLY, chi_ell_salem_part
from ..report import Report
from .classify import PISOT, SALEM, classify, dominant_root

CLAIMED_LO, CLAIMED_HI = Fraction(106, 10), Fraction(108, 10)


def threshold_enclosure(eps=Fraction(1, 10 ** 12)) -> tuple[Fraction, Fraction]:
    """Certified interval for 2(a+1)/(a-1); the map is decreasing in a > 1."""
    lo, hi = dominant_root(T_POLY, eps)
    return 2 * (hi + 1) / (hi - 1), 2 * (lo + 1) / (lo - 1)


def salem_threshold_check(eps=Fraction(1, 10 ** 12)) -> Report:
    rep = Report("salem threshold", {"eps": eps})
    rep.add("T Pisot", "a_T, the real root of x^3 - x^2 - 1, is a Pisot number",
            classify(T_POLY).verdict == PISOT)
    lo, hi = threshold_enclosure(eps)
    approx = float((lo + hi) / 2)
    rep.add("enclosure width", "the threshold enclosure has width <= 0.1", hi - lo <= Fraction(1, 10),
            {"lo": float(lo), "hi": float(hi)})
    rep.add("threshold window", "2(a_T + 1)/(a_T - 1) lies in (10.6, 10.8)",
            CLAIMED_LO < lo and hi < CLAIMED_HI,
            {"enclosure": [str(lo), str(hi)], "approx": approx})
    rep.add("l = 3 above", "4*3 + 1 = 13 exceeds the threshold", 13 > hi)
    rep.add("l = 2 below", "4*2 + 1 = 9 is below the threshold", 9 < lo)
    rep.add("l = 2 direct", "for l = 2 the factor of chi_2 is still Salem",
            classify(chi_ell_salem_part(2)).verdict == SALEM)
    return rep


def salem_trend(ells=range(2, 9), eps=Fraction(1, 10 ** 15)) -> Report:
    """Dominant roots lambda_l of chi_l against a_T."""
    rep = Report("salem trend", {"ells": list(ells)})
    a_lo, a_hi = dominant_root(T_POLY, eps)
    rows = []
    for ell in ells:
        c = classify(chi_ell_salem_part(ell))
        lo, hi = dominant_root(chi_ell_salem_part(ell), eps)
        rows.append((ell, c.verdict, lo, hi))
        rep.add(f"l = {ell} Salem", f"the dominant root of chi_{ell} is a Salem number",
                c.verdict == SALEM, {"lambda": float(lo)})
    gaps = [a_lo - hi for _, _, _, hi in rows]
    rep.add("below a_T", "every lambda_l lies below a_T", all(g > 0 for g in gaps))
    rep.add("monotone", "lambda_l increases with l and the gap to a_T shrinks",
            all(r2[2] > r1[3] for r1, r2 in zip(rows, rows[1:]))
            and all(g2 < g1 for g1, g2 in zip(gaps, gaps[1:])),
            {"gaps": [float(g) for g in gaps]})
    return rep
