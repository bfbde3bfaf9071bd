"""Pullback actions on Pic(X) and Pic(W), their characteristic polynomials and fixed classes."""

from __future__ import annotations

from fractions import Fraction

from ..exactcore.intmatrix import IntMatrix
from ..exactcore.quadext import QuadExt
from ..exactcore.unipoly import UniPoly
from ..report import Report
from .basis import DivisorClass, LatticeAction, basis_w, basis_x, intersection


def _check_ell(ell: int):
    if not isinstance(ell, int) or ell < 2:
        raise ValueError(f"ell must be an integer >= 2, got {ell!r}")


def build_fx_star(ell: int) -> LatticeAction:
    _check_ell(ell)
    B = basis_x(ell)
    top = f"P{4 * ell + 1}"
    img = {
        "H": {"H": 3, "E1^": -2, "E2": -2, "E3^": -2, top: -2},
        "E1^": {"H": 1, "E1^": -1, "E2": -1, "E3^": -1},
        "E2": {"H": 1, "E2": -1, "E3^": -1, top: -1},
        "E3^": {"H": 1, "E1^": -1, "E3^": -1, top: -1},
        "P1": {"H": 1, "E1^": -1, "E2": -1, top: -1},
    }
    for j in range(2, 4 * ell + 2):
        img[f"P{j}"] = {f"P{j - 1}": 1}
    return LatticeAction.from_images(B, img, "f_X^*")


def build_fx_inv_star(ell: int) -> LatticeAction:
    _check_ell(ell)
    B = basis_x(ell)
    top = f"P{4 * ell + 1}"
    img = {
        "H": {"H": 3, "E1^": -2, "E2": -2, "E3^": -2, "P1": -2},
        "E1^": {"H": 1, "E1^": -1, "E3^": -1, "P1": -1},
        "E2": {"H": 1, "E1^": -1, "E2": -1, "P1": -1},
        "E3^": {"H": 1, "E1^": -1, "E2": -1, "E3^": -1},
        top: {"H": 1, "E2": -1, "E3^": -1, "P1": -1},
    }
    for j in range(1, 4 * ell + 1):
        img[f"P{j}"] = {f"P{j + 1}": 1}
    return LatticeAction.from_images(B, img, "(f_X^-1)^*")


def chi_ell(ell: int) -> UniPoly:
    """x^(4l+1) (x^4 - x^2 - x - 1) + x^4 + x^3 + x^2 - 1."""
    return (UniPoly.monomial(4 * ell + 1) * UniPoly([-1, -1, -1, 0, 1])
            + UniPoly([-1, 0, 1, 1, 1]))


T_POLY = UniPoly([-1, 0, -1, 1])  # x^3 - x^2 - 1
SALEM_OCTIC = UniPoly.from_high([1, -1, 0, -1, 1, -1, 0, -1, 1])


def verify_charpoly(ell: int) -> Report:
    rep = Report("charpoly", {"ell": ell})
    M, Mi = build_fx_star(ell), build_fx_inv_star(ell)
    chi = chi_ell(ell)
    pf, pi = M.charpoly(), Mi.charpoly()
    rep.add("inverse pair", "f_X^* (f_X^-1)^* = identity",
            (M.matrix * Mi.matrix).is_identity() and (Mi.matrix * M.matrix).is_identity())
    rep.add("unimodular", "both matrices have determinant +-1",
            abs(M.matrix.det()) == 1 and abs(Mi.matrix.det()) == 1,
            {"det": M.matrix.det(), "det_inv": Mi.matrix.det()})
    rep.add("charpoly f", "charpoly(f_X^*) = chi_l", pf == chi, {"charpoly": pf.to_text()})
    rep.add("charpoly f^-1", "charpoly((f_X^-1)^*) = chi_l", pi == chi)
    _, r = divmod(chi, UniPoly([-1, 0, 0, 0, 1]))
    rep.add("x^4 - 1 divides", "(x^4 - 1) divides chi_l", r.is_zero())
    rep.add("simple root 1", "x = 1 is a simple root of chi_l",
            chi(1) == 0 and chi.derivative()(1) != 0)
    # chi_l / (x+1) = x^(4l+1) T(x) - x^3 T(1/x)
    x3t_inv = T_POLY.reverse(3)
    rep.add("T identity", "chi_l/(x+1) = x^(4l+1) T(x) - x^3 T(1/x), T = x^3 - x^2 - 1",
            chi == UniPoly([1, 1]) * (UniPoly.monomial(4 * ell + 1) * T_POLY - x3t_inv))
    rest = chi_ell_salem_part(ell)
    rep.add("factorisation", "chi_l = (x^4 - 1)(x + 1) * rest", True,
            {"rest": rest.to_text()})
    if ell == 2:
        rep.add("Salem octic", "chi_2 = (x^4 - 1)(x + 1)(x^8 - x^7 - x^5 + x^4 - x^3 - x + 1)",
                rest == SALEM_OCTIC)
    return rep


def chi_ell_salem_part(ell: int) -> UniPoly:
    """chi_l divided by (x^4 - 1)(x + 1)."""
    return chi_ell(ell).exact_div(UniPoly([-1, 0, 0, 0, 1]) * UniPoly([1, 1]))


def gamma_class(ell: int) -> DivisorClass:
    B = basis_x(ell)
    terms = {"H": 2, "E1^": -1, "E2": -1, "E3^": -1}
    terms.update({f"P{j}": -1 for j in range(1, 4 * ell + 2)})
    return DivisorClass.of(B, terms)


def gamma_fixed(ell: int) -> Report:
    rep = Report("gamma", {"ell": ell})
    M = build_fx_star(ell)
    G = gamma_class(ell)
    rep.add("Gamma fixed", "f_X^* [Gamma] = [Gamma]", M(G) == G, {"Gamma": G.to_text()})
    n = M.basis.dim
    D = M.matrix - IntMatrix.identity(n)
    rank = D.rank()
    ker = D.kernel()
    line = len(ker) == 1 and (ker[0] == list(G.coeffs) or ker[0] == [-x for x in G.coeffs])
    rep.add("eigenline", "the 1-eigenspace of f_X^* is the line through [Gamma]",
            rank == n - 1 and line, {"rank": rank, "dim": n})
    Mi = build_fx_inv_star(ell)
    rep.add("Gamma fixed by inverse", "(f_X^-1)^* [Gamma] = [Gamma]", Mi(G) == G)
    return rep


# -- the surface W ---------------------------------------------------------------

def build_gw_star(ell: int) -> LatticeAction:
    _check_ell(ell)
    B = basis_w(ell)
    last = f"F{ell}"
    img = {
        "L": {"L": 4, "E1": -2, "E2": -2, "E3": -1, last: -1},
        "E1": {"L": 1, "E2": -1},
        "E2": {"L": 2, "E1": -1, "E2": -1, "E3": -1},
        "E3": {"L": 2, "E1": -1, "E2": -1, last: -1},
        "F1": {"L": 1, "E1": -1},
    }
    for j in range(2, ell + 1):
        img[f"F{j}"] = {f"F{j - 1}": 1}
    return LatticeAction.from_images(B, img, "g_W^*")


def pisot_factor(ell: int) -> UniPoly:
    """x^l - x^(l-1) - ... - x - 1."""
    return UniPoly([-1] * ell + [1])


def gw_charpoly_closed_form(ell: int) -> UniPoly:
    return UniPoly([0, 0, 1]) * UniPoly([1, -1]) ** 2 * pisot_factor(ell)


def sigma02(ell: int) -> DivisorClass:
    return DivisorClass.of(basis_w(ell), {"L": 1, "E1": -1, "E3": -1})


def beta0_class(ell: int) -> DivisorClass:
    terms = {"L": 1, "E2": -1}
    terms.update({f"F{j}": -1 for j in range(1, ell + 1)})
    return DivisorClass.of(basis_w(ell), terms)


def verify_gw(ell: int) -> Report:
    rep = Report("g_W", {"ell": ell})
    M = build_gw_star(ell)
    p = M.charpoly()
    rep.add("charpoly", "charpoly(g_W^*) = x^2 (x-1)^2 (x^l - x^(l-1) - ... - 1)",
            p == gw_charpoly_closed_form(ell), {"charpoly": p.to_text()})
    S, Bt = sigma02(ell), beta0_class(ell)
    rep.add("Sigma fixed", "g_W^* [Sigma_02] = [Sigma_02], Sigma_02 = L - E1 - E3", M(S) == S)
    rep.add("beta0 fixed", "g_W^* [beta0] = [beta0], beta0 = L - E2 - sum F_j", M(Bt) == Bt)
    D = M.matrix - IntMatrix.identity(M.basis.dim)
    rep.add("fixed span", "the fixed classes span the kernel of g_W^* - 1",
            len(D.kernel()) == 2, {"kernel_dim": len(D.kernel())})
    B = M.basis
    ss, sb, bb = intersection(B, S, S), intersection(B, S, Bt), intersection(B, Bt, Bt)
    rep.add("intersection numbers", "Sigma.Sigma = -1, Sigma.beta0 = 1, beta0.beta0 = -l",
            (ss, sb, bb) == (-1, 1, -ell), {"values": [ss, sb, bb]})
    # C = m1 Sigma + m2 beta0 on a small grid, against the closed forms
    ok = True
    for m1 in range(-3, 4):
        for m2 in range(-3, 4):
            C = m1 * S + m2 * Bt
            ok &= intersection(B, C, S) == m2 - m1
            ok &= intersection(B, C, Bt) == m1 - ell * m2
    rep.add("intersection identities", "C.Sigma = m2 - m1 and C.beta0 = m1 - l m2", ok)
    return rep


def u_vector():
    """The golden-mean eigenvector for l = 2 in the basis L, E1, E2, E3, F1, F2."""
    r5 = QuadExt(0, 1, 5)
    half = Fraction(1, 2)
    e = -(half + half * r5)
    return [2 + r5, -(Fraction(3, 2) + half * r5), e, e, QuadExt(-1, 0, 5), e]


def u_self_intersection() -> QuadExt:
    u = u_vector()
    return intersection(basis_w(2), u, u)


def u_report() -> Report:
    rep = Report("u", {"ell": 2})
    u = u_vector()
    uu = u_self_intersection()
    rep.add("u.u", "u.u = sqrt(5)", uu == QuadExt(0, 1, 5), {"u.u": uu})
    rep.add("u.u positive", "u.u > 0", uu.sign() > 0)
    lam = QuadExt(Fraction(1, 2), Fraction(1, 2), 5)
    img = build_gw_star(2).matrix.apply(u)
    rep.add("eigenvector", "g_W^* u = ((1 + sqrt 5)/2) u",
            all(x - lam * y == 0 for x, y in zip(img, u)))
    return rep


# -- degree growth ---------------------------------------------------------------

def degree_sequence(action: LatticeAction, n: int) -> list[int]:
    """The first-basis-vector coefficient of M^k e_0 for k = 1..n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    v = [0] * action.basis.dim
    v[0] = 1
    out = []
    for _ in range(n):
        v = action.matrix.apply(v)
        out.append(v[0])
    return out


def satisfies_recurrence(seq, poly: UniPoly) -> bool:
    """``sum_i p_i s_(k+i) = 0`` for every window of ``seq``."""
    cs = poly.int_coeffs()
    d = len(cs) - 1
    return all(sum(cs[i] * seq[k + i] for i in range(d + 1)) == 0
               for k in range(len(seq) - d))
