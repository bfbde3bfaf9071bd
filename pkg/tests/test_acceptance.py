"""Acceptance criteria 1-11, one test each.

Every criterion is evaluated in full and its outcome printed as a single
``criterion N: PASS|FAIL`` line (see the terminal summary in conftest.py, or
run this file directly).
"""

import io
import json
import time
from fractions import Fraction

import pytest

from pseudoauto.cli import main as cli_main
from pseudoauto.exactcore import UniPoly, ell_relation, quad_field_for_ell, sturm_count
from pseudoauto.lattice import (SALEM_OCTIC, T_POLY, chi_ell, gamma_fixed, pisot_factor,
                                u_report, verify_charpoly, verify_gw)
from pseudoauto.lattice.degrees import degree_crosscheck
from pseudoauto.numclass import PISOT, QUADRATIC_UNIT, SALEM, classify, dominant_root
from pseudoauto.numclass.threshold import threshold_enclosure
from pseudoauto.threefold import (REGULAR, beta0_orbit_avoidance, e1_chart_dynamics,
                                  fibration_obstruction, g_exceptional_report,
                                  indeterminacy_points, random_non_solutions,
                                  surface_regression, translation_report, verify_ell_condition)
from pseudoauto.threefold.orbit import ell_condition_holds
from pseudoauto.threefold.surface import E1, E2, E3, p_last
from pseudoauto.torus3 import (NON_FIBERED, ReciprocalSextic, admissible, complex_structure,
                               fibration_criterion, search, spectrum)

RESULTS = {}


class Criterion:
    """Collects named sub-checks; ``ok`` is their conjunction."""

    def __init__(self, number, title):
        self.number, self.title = number, title
        self.failed = []

    def check(self, name, ok):
        if not ok:
            self.failed.append(name)

    @property
    def ok(self):
        return not self.failed

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        extra = "" if self.ok else f" (failed: {', '.join(self.failed)})"
        return f"criterion {self.number}: {status} - {self.title}{extra}"


def params(ell):
    a, c, _ = quad_field_for_ell(ell)
    return a, c


def criterion_1():
    cr = Criterion(1, "parameter exactness, l = 2..8")
    for ell in range(2, 9):
        a, c = params(ell)
        cr.check(f"l = {ell}", ell_relation(ell, a, c) == 0)
    return cr


def criterion_2():
    cr = Criterion(2, "l-condition orbit, l = 2..6, and 20 random non-solutions")
    for ell in range(2, 7):
        a, c = params(ell)
        tr = verify_ell_condition(ell, a, c)
        cr.check(f"l = {ell} reaches e0 at {4 * ell}", tr.reached_e0_at() == 4 * ell)
        cr.check(f"l = {ell} regular before", all(s == REGULAR for _, _, s in tr.steps[:-1]))
    pairs = random_non_solutions(20, seed=0)
    cr.check("20 pairs", len(pairs) == 20)
    for i, (a, c) in enumerate(pairs):
        cr.check(f"non-solution {i}", not any(ell_condition_holds(ell, a, c) for ell in range(2, 7)))
    return cr


def criterion_3():
    cr = Criterion(3, "Picard certification, l = 2..8")
    for ell in range(2, 9):
        rep = verify_charpoly(ell)
        for name in ("inverse pair", "charpoly f", "charpoly f^-1", "x^4 - 1 divides",
                     "simple root 1"):
            cr.check(f"l = {ell} {name}", rep[name].ok)
        g = gamma_fixed(ell)
        cr.check(f"l = {ell} Gamma fixed", g["Gamma fixed"].ok)
        cr.check(f"l = {ell} eigenline", g["eigenline"].ok)
    expected = (UniPoly.monomial(9) * UniPoly([-1, -1, -1, 0, 1]) + UniPoly([-1, 0, 1, 1, 1]))
    cr.check("chi_2 closed form", chi_ell(2) == expected)
    return cr


def criterion_4():
    cr = Criterion(4, "Salem/Pisot certification and the threshold enclosure")
    chi2 = chi_ell(2)
    cr.check("chi_2 factorisation",
             chi2 == UniPoly([-1, 0, 0, 0, 1]) * UniPoly([1, 1]) * SALEM_OCTIC)
    cr.check("octic Salem", classify(SALEM_OCTIC).verdict == SALEM)
    for ell in range(2, 9):
        v = classify(pisot_factor(ell)).verdict
        cr.check(f"l = {ell} Pisot", v == PISOT or (ell == 2 and v == QUADRATIC_UNIT))
    lo, hi = dominant_root(pisot_factor(2), Fraction(1, 10 ** 9))
    cr.check("golden mean", lo < (1 + 5 ** 0.5) / 2 < hi)
    cr.check("T Pisot", classify(T_POLY).verdict == PISOT)
    tlo, thi = threshold_enclosure(Fraction(1, 10 ** 12))
    cr.check("enclosure width <= 0.1", thi - tlo <= Fraction(1, 10))
    cr.check(f"threshold in (10.6, 10.8), enclosure [{float(tlo):.6f}, {float(thi):.6f}]",
             Fraction(106, 10) < tlo and thi < Fraction(108, 10))
    return cr


def criterion_5():
    cr = Criterion(5, "surface regression and exceptional curves, l = 2, 3")
    t0 = time.perf_counter()
    for ell in (2, 3):
        a, c = params(ell)
        reg = surface_regression(a, c)
        cr.check(f"l = {ell} regression", reg.passed)
        exc = g_exceptional_report(a, c)
        cr.check(f"l = {ell} exceptional", exc.passed)
        cr.check(f"l = {ell} Ind(g)", set(indeterminacy_points(a, c)) == {E1, E2, E3, p_last(a, c)})
    cr.check("runtime <= 60 s", time.perf_counter() - t0 <= 60)
    return cr


def criterion_6():
    cr = Criterion(6, "g_W lattice, l = 2..8, and the vector u")
    for ell in range(2, 9):
        cr.check(f"l = {ell}", verify_gw(ell).passed)
    cr.check("u", u_report().passed)
    return cr


def criterion_7():
    cr = Criterion(7, "degree cross-check for l = 2")
    a, c = params(2)
    rep = degree_crosscheck(2, a, c, n_f=6, n_g=4)
    cr.check("f degrees", rep["f degrees"].ok)
    cr.check("g degrees", rep["g degrees"].ok)
    cr.check("f starts 3, 3", rep["f degrees"].details["symbolic"][:2] == [3, 3])
    cr.check("g starts 4, 8", rep["g degrees"].details["symbolic"][:2] == [4, 8])
    cr.check("f recurrence", rep["f recurrence"].ok)
    cr.check("g recurrence", rep["g recurrence"].ok)
    return cr


def criterion_8():
    cr = Criterion(8, "chart dynamics and orbit avoidance")
    for ell in range(2, 7):
        a, c = params(ell)
        e1 = e1_chart_dynamics(a, c, n_max=1000)
        for name in ("translation", "unique indeterminacy", "orbit avoidance",
                     "avoidance certificate"):
            cr.check(f"l = {ell} {name}", e1[name].ok)
        tr = translation_report(a, c)
        cr.check(f"l = {ell} beta2 return", tr["beta2 return"].ok)
        cr.check(f"l = {ell} beta0 return", tr["beta0 return"].ok)
        cr.check(f"l = {ell} beta0 avoidance", beta0_orbit_avoidance(a, c)["avoidance"].ok)
    return cr


def criterion_9():
    cr = Criterion(9, "fibration obstruction, l = 2..8")
    for ell in range(2, 9):
        rep = fibration_obstruction(*params(ell), r_max=100, ell=ell)
        cr.check(f"l = {ell} powers", rep["a^2r + c^2r"].ok)
        cr.check(f"l = {ell} not a root of unity", rep["not a root of unity"].ok)
    return cr


def criterion_10():
    cr = Criterion(10, "torus search")
    t0 = time.perf_counter()
    hits = search(3)
    ex = ReciprocalSextic(1, 0, -2)
    cr.check("contains (1, 0, -2)", ex in hits)
    theta = ex.theta
    cr.check("theta", theta == UniPoly([-4, -3, 1, 1]))
    cr.check("theta one real root", sturm_count(theta) == 1)
    cr.check("theta root in (-2, 2)", sturm_count(theta, -2, 2) == 1)
    ok, cert = admissible(ex)
    cr.check("irreducible", cert["irreducible"])
    cr.check("non-fibered", fibration_criterion(ex)[0] == NON_FIBERED)
    J = complex_structure(ex, 1e-9)
    cr.check("||J^2 + I|| < 1e-9", J.residual_square < 1e-9)
    cr.check("||JM - MJ|| < 1e-9", J.residual_commute < 1e-9)
    cr.check("lambda1 = lambda2 flag", spectrum(ex).lambda1_equals_lambda2)
    cr.check("runtime <= 30 s", time.perf_counter() - t0 <= 30)
    return cr


def criterion_11():
    cr = Criterion(11, "failure-path self-test")
    out = io.StringIO()
    code = cli_main(["certify", "--ell", "2", "--perturb", "--format", "json"], out)
    cr.check("perturbed certify exits nonzero", code != 0)
    status = {ch["name"]: ch["status"] for ch in json.loads(out.getvalue())["checks"]}
    cr.check("l-condition check fails", status.get("orbit: l-condition") == "fail")
    fwd, rev = classify(T_POLY).counts(), classify(T_POLY.reverse()).counts()
    cr.check("reversed counts swapped", (rev[0], rev[1], rev[2]) == (fwd[2], fwd[1], fwd[0]))
    return cr


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


@pytest.mark.parametrize("fn", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 12)])
def test_criterion(fn):
    cr = fn()
    RESULTS[cr.number] = cr.line()
    print(cr.line())
    assert cr.ok, cr.line()


if __name__ == "__main__":
    for fn in CRITERIA:
        print(fn().line())
