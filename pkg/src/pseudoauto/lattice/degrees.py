"""Predicted degree growth against the degrees of the reduced symbolic iterates."""

from __future__ import annotations

from ..mpoly.factored import FactoredIteration
from ..report import Report
from ..threefold.maps import f_factored, g_factored
from .actions import (build_fx_star, build_gw_star, chi_ell, gw_charpoly_closed_form,
                      satisfies_recurrence, degree_sequence)


def symbolic_degrees(kind: str, a, c, n: int, seed: int = 0) -> list[int]:
    base = f_factored(a, c) if kind == "f" else g_factored(a, c)
    return FactoredIteration(base, seed).run(n)


def degree_crosscheck(ell: int, a, c, n_f: int = 5, n_g: int = 4, seed: int = 0) -> Report:
    rep = Report("degrees", {"ell": ell, "n_f": n_f, "n_g": n_g, "seed": seed})
    for kind, n, action, poly in (
            ("f", n_f, build_fx_star(ell), chi_ell(ell)),
            ("g", n_g, build_gw_star(ell), gw_charpoly_closed_form(ell))):
        predicted = degree_sequence(action, n)
        symbolic = symbolic_degrees(kind, a, c, n, seed)
        rep.add(f"{kind} degrees", f"reduced degrees of {kind}^k, k <= {n}, match the lattice",
                predicted == symbolic, {"lattice": predicted, "symbolic": symbolic})
        # the recurrence needs d_0 = 1 and at least deg(poly) + 1 terms
        long_seq = [1] + degree_sequence(action, n + poly.degree)
        rep.add(f"{kind} recurrence",
                f"the degree sequence of {kind} satisfies the charpoly recurrence",
                satisfies_recurrence(long_seq, poly))
    return rep
