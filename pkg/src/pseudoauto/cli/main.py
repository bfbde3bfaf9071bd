"""Command-line front end.

    pseudoauto certify --ell 2
    pseudoauto torus --bound 3 --verify-J
    pseudoauto classify "1,-1,0,-1,1,-1,0,-1,1"
    pseudoauto degrees --ell 2 --n 6 --format csv
    pseudoauto orbit --ell 3

Exit status is 0 iff every check passes; flagged checks are shown but do not fail a run.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from ..exactcore.quadext import ell_relation, quad_field_for_ell
from ..exactcore.unipoly import parse_coefficients
from ..lattice import (build_fx_star, build_gw_star, chi_ell_salem_part, degree_sequence,
                       gamma_fixed, pisot_factor, u_report, verify_charpoly, verify_gw)
from ..lattice.degrees import degree_crosscheck, symbolic_degrees
from ..mpoly.maps import jacobian_det
from ..mpoly.poly import MultiPoly
from ..numclass import PISOT, QUADRATIC_UNIT, SALEM, classify
from ..report import Report, jsonable
from ..threefold import (REACHED_E0, beta0_orbit_avoidance, chart_formula_report,
                         e1_chart_dynamics, fibration_obstruction, g_exceptional_report,
                         lift_F, omega_invariance, surface_regression, translation_report,
                         verify_ell_condition)
from ..threefold.orbit import ell_condition_holds
from ..torus3 import (admissible, complex_structure, fibration_criterion, search, spectrum)

PERTURBATION = Fraction(1, 1000)


def _parameters(ell: int, perturb: bool):
    a, c, disc = quad_field_for_ell(ell)
    if perturb:
        a = a + PERTURBATION
    return a, c, disc


def orbit_report(ell: int, a, c) -> Report:
    rep = Report("orbit", {"ell": ell, "a": a, "c": c})
    tr = verify_ell_condition(ell, a, c)
    rep.add("l-condition", f"the orbit of p1 reaches e0 at step exactly {4 * ell}, "
            "every earlier step regular", ell_condition_holds(ell, a, c),
            {"reached_at": tr.reached_e0_at() if tr.final_status == REACHED_E0 else None,
             "final_status": tr.final_status, "steps": tr.rows()})
    return rep


def jacobian_report(a, c) -> Report:
    rep = Report("jacobian", {})
    det = jacobian_det(lift_F(a, c))
    x = MultiPoly.gens(4)
    prod = x[0] * x[1] * x[2] * x[3]
    ok = det == (prod * prod).scale(3)
    rep.add("jacobian of F", "det DF = 3 (x0 x1 x2 x3)^2; the displayed value is x0 x1 x2 x3",
            ok, {"det": det.to_text()}, flag=True)
    return rep


def classification_report(ell: int) -> Report:
    rep = Report("classification", {"ell": ell})
    salem = classify(chi_ell_salem_part(ell))
    rep.add("Salem factor", "chi_l / ((x^4-1)(x+1)) is a Salem polynomial",
            salem.verdict == SALEM, {"factor": salem.poly.to_text(),
                                     "counts": list(salem.counts()),
                                     "dominant_root": salem.dominant_root})
    pis = classify(pisot_factor(ell))
    rep.add("Pisot factor", "x^l - x^(l-1) - ... - 1 is a Pisot polynomial",
            pis.verdict in (PISOT, QUADRATIC_UNIT) if ell == 2 else pis.verdict == PISOT,
            {"factor": pis.poly.to_text(), "verdict": pis.verdict,
             "dominant_root": pis.dominant_root})
    return rep


def certify(ell: int, perturb: bool = False, seed: int = 0, n_f: int = 5, n_g: int = 4,
            golden_dir: str | None = None) -> Report:
    if ell < 2:
        raise ValueError(f"ell must be >= 2: delta_l = -3l^2 + 2l + 1 is {-3 * ell * ell + 2 * ell + 1} "
                         f"for l = {ell}, so a/c is real (delta_1 = 0) and the construction "
                         "degenerates")
    t0 = time.perf_counter()
    a0, c0, disc = quad_field_for_ell(ell)
    a, c, _ = _parameters(ell, perturb)
    rep = Report("certify", {"ell": ell, "perturb": perturb, "seed": seed,
                             "n_f": n_f, "n_g": n_g, "a": a, "c": c, "disc": disc})
    rep.add("parameters", "l a^2 + (l+1) a c + l c^2 = 0 exactly",
            ell_relation(ell, a, c) == 0, {"a": a, "c": c})
    rep.extend(orbit_report(ell, a, c), "orbit: ")
    # everything below is run at the true parameters
    a, c = a0, c0
    parts = [
        ("translations: ", translation_report(a, c)),
        ("beta0 orbit: ", beta0_orbit_avoidance(a, c)),
        ("charts: ", chart_formula_report(a, c)),
        ("charpoly: ", verify_charpoly(ell)),
        ("gamma: ", gamma_fixed(ell)),
        ("surface: ", surface_regression(a, c, seed)),
        ("g exceptional: ", g_exceptional_report(a, c, seed)),
        ("E1 chart: ", e1_chart_dynamics(a, c)),
        ("g_W: ", verify_gw(ell)),
        ("classification: ", classification_report(ell)),
        ("degrees: ", degree_crosscheck(ell, a, c, n_f, n_g, seed)),
        ("obstruction: ", fibration_obstruction(a, c, ell=ell)),
        ("omega: ", omega_invariance(a, c)),
        ("jacobian: ", jacobian_report(a, c)),
    ]
    if ell == 2:
        parts.append(("u: ", u_report()))
    for prefix, sub in parts:
        rep.extend(sub, prefix)
    if golden_dir is not None:
        golden_check(rep, Path(golden_dir) / f"certify_ell{ell}.json")
    rep.timing = time.perf_counter() - t0
    return rep


def golden_check(rep: Report, path: Path, update: bool = False):
    """Compare the timing-free JSON of ``rep`` with ``path``; write it if missing."""
    text = rep.to_json(with_timing=False) + "\n"
    if update or not path.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        rep.add("golden", f"golden file {path.name} written", True)
        return
    rep.add("golden", f"report matches golden file {path.name}",
            path.read_text(encoding="utf-8") == text)


def torus_rows(bound: int, verify_j: bool = False, eps=Fraction(1, 10 ** 12), tol=1e-9):
    """Yield one record per admissible sextic, in search order."""
    for s in search(bound):
        ok, cert = admissible(s)
        sp = spectrum(s, eps)
        verdict, fcert = fibration_criterion(s)
        row = {"a": s.a, "b": s.b, "c": s.c, "admissible": ok, "verdict": verdict,
               "lambda1_enclosure": list(sp.lambda1),
               "lambda1_equals_lambda2": sp.lambda1_equals_lambda2,
               "lambda1_min_poly": fcert.get("lambda1_min_poly"),
               "consistent": all(sp.checks.values())}
        if verify_j:
            J = complex_structure(s, tol)
            row["residual_J2_plus_I"] = J.residual_square
            row["residual_JM_minus_MJ"] = J.residual_commute
            row["J_ok"] = J.ok(tol)
        yield row


def degrees_table(ell: int, n: int, seed: int = 0, n_g: int | None = None):
    a, c, _ = quad_field_for_ell(ell)
    n_g = n if n_g is None else n_g
    f_lat = degree_sequence(build_fx_star(ell), n)
    g_lat = degree_sequence(build_gw_star(ell), n_g)
    f_sym = symbolic_degrees("f", a, c, n, seed)
    g_sym = symbolic_degrees("g", a, c, n_g, seed)
    rows = []
    for k in range(1, max(n, n_g) + 1):
        rows.append({"k": k,
                     "f_lattice": f_lat[k - 1] if k <= n else None,
                     "f_symbolic": f_sym[k - 1] if k <= n else None,
                     "g_lattice": g_lat[k - 1] if k <= n_g else None,
                     "g_symbolic": g_sym[k - 1] if k <= n_g else None})
    return rows


# -- argument handling -----------------------------------------------------------

def _emit(rep: Report, fmt: str, out):
    if fmt == "json":
        out.write(rep.to_json() + "\n")
    elif fmt == "csv":
        out.write(rep.to_csv())
    else:
        out.write(rep.to_text() + "\n")


def cmd_certify(args, out) -> int:
    try:
        rep = certify(args.ell, args.perturb, args.seed, args.n if args.n else 5,
                      args.n_g if args.n_g else 4, args.golden_dir)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    _emit(rep, args.format, out)
    return 0 if rep.passed else 1


def cmd_torus(args, out) -> int:
    if args.bound < 0:
        print("error: bound must be >= 0", file=sys.stderr)
        return 2
    t0 = time.perf_counter()
    rep = Report("torus", {"bound": args.bound, "verify_J": args.verify_J})
    tol = float(Fraction(args.tol))
    n = 0
    writer = None
    for row in torus_rows(args.bound, args.verify_J, Fraction(args.eps), tol):
        n += 1
        if args.format == "json":
            out.write(json.dumps(jsonable(row), sort_keys=True) + "\n")
        elif args.format == "csv":
            if writer is None:
                writer = csv.DictWriter(out, fieldnames=list(row), lineterminator="\n")
                writer.writeheader()
            writer.writerow(jsonable(row))
        ok = row["consistent"] and row.get("J_ok", True)
        if not ok:
            rep.add(f"sextic ({row['a']},{row['b']},{row['c']})",
                    "spectrum enclosures and complex structure are consistent", False, row)
    rep.add("hits", f"{n} admissible sextics with coefficients bounded by {args.bound}", True,
            {"count": n})
    rep.timing = time.perf_counter() - t0
    if args.format == "text":
        _emit(rep, args.format, out)
    else:
        print(rep.to_text(), file=sys.stderr)
    return 0 if rep.passed else 1


def cmd_classify(args, out) -> int:
    try:
        p = parse_coefficients(args.poly, constant_first=args.constant_first)
        res = classify(p)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    rep = Report("classify", {"poly": p.to_text(), "constant_first": args.constant_first})
    inside, on, outside = res.counts()
    rep.add("verdict", f"{res.poly.to_text()} is classified as {res.verdict}", True,
            {"verdict": res.verdict, "inside": inside, "on_circle": on, "outside": outside,
             "dominant_root": res.dominant_root, "certificate": res.certificate})
    _emit(rep, args.format, out)
    return 0


def cmd_degrees(args, out) -> int:
    ell, n = args.ell, args.n or 6
    if ell < 2 or n < 1:
        print("error: need ell >= 2 and n >= 1", file=sys.stderr)
        return 2
    n_g = args.n_g or min(n, 5)
    rows = degrees_table(ell, n, args.seed, n_g)
    rep = Report("degrees", {"ell": ell, "n": n, "n_g": n_g, "seed": args.seed})
    rep.add("f degrees", "symbolic degrees of f^k agree with the lattice",
            all(r["f_lattice"] == r["f_symbolic"] for r in rows if r["k"] <= n),
            {"rows": rows})
    rep.add("g degrees", "symbolic degrees of g^k agree with the lattice",
            all(r["g_lattice"] == r["g_symbolic"] for r in rows if r["k"] <= n_g))
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]))
        w.writeheader()
        for r in rows:
            w.writerow({k: "" if v is None else v for k, v in r.items()})
        out.write(buf.getvalue())
    else:
        _emit(rep, args.format, out)
    return 0 if rep.passed else 1


def cmd_orbit(args, out) -> int:
    try:
        a, c, _ = _parameters(args.ell, args.perturb)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    rep = orbit_report(args.ell, a, c)
    if args.format == "text":
        for row in rep["l-condition"].details["steps"]:
            out.write(f"{row['k']:3d}  {row['location']:40s}  {row['status']}\n")
    _emit(rep, args.format, out)
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pseudoauto",
                                description="Exact certification of pseudo-automorphism claims.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(fmt="text"):
        # built per subcommand so that defaults are not shared
        q = argparse.ArgumentParser(add_help=False)
        q.add_argument("--format", choices=["json", "csv", "text"], default=fmt)
        q.add_argument("--seed", type=int, default=0)
        return q

    c = sub.add_parser("certify", parents=[common()], help="run every check for one ell")
    c.add_argument("--ell", type=int, required=True)
    c.add_argument("--n", type=int, default=None, help="degree depth for f (default 5)")
    c.add_argument("--n-g", dest="n_g", type=int, default=None, help="degree depth for g (default 4)")
    c.add_argument("--perturb", action="store_true", help="inject a wrong parameter a + 1/1000")
    c.add_argument("--golden-dir", default=None)
    c.set_defaults(func=cmd_certify)

    t = sub.add_parser("torus", parents=[common("json")], help="search admissible reciprocal sextics")
    t.add_argument("--bound", type=int, default=3)
    t.add_argument("--eps", default="1/1000000000000")
    t.add_argument("--tol", default="1/1000000000")
    t.add_argument("--verify-J", dest="verify_J", action="store_true")
    t.set_defaults(func=cmd_torus)

    k = sub.add_parser("classify", parents=[common()], help="classify an integer polynomial")
    k.add_argument("poly", help='coefficients, highest degree first, e.g. "1,-1,-1"')
    k.add_argument("--constant-first", action="store_true")
    k.set_defaults(func=cmd_classify)

    d = sub.add_parser("degrees", parents=[common()], help="symbolic against lattice degrees")
    d.add_argument("--ell", type=int, default=2)
    d.add_argument("--n", type=int, default=6)
    d.add_argument("--n-g", dest="n_g", type=int, default=None)
    d.set_defaults(func=cmd_degrees)

    o = sub.add_parser("orbit", parents=[common()], help="trace the orbit of p1")
    o.add_argument("--ell", type=int, required=True)
    o.add_argument("--perturb", action="store_true")
    o.set_defaults(func=cmd_orbit)
    return p


def main(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
