"""Root enclosures of reciprocal sextics, the dynamical degrees they induce, and the fibration dichotomy."""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import sympy

from ..exactcore.irreducible import is_irreducible
from ..exactcore.roots import sturm_count
from ..exactcore.unipoly import UniPoly, squarefree_part
from ..numclass.classify import CYCLOTOMIC_PRODUCT, SALEM, classify
from .sextic import ReciprocalSextic, admissible, beta_on_circle

FIBERED = "fibered"
NON_FIBERED = "non-fibered"
KRONECKER = "kronecker"


_DPS = 50


@contextmanager
def _iv_dps(dps: int):
    old = mpmath.iv.dps
    mpmath.iv.dps = dps
    try:
        yield
    finally:
        mpmath.iv.dps = old


@dataclass(frozen=True)
class RootDisk:
    """A disk ``|z - center| <= radius`` known to contain exactly one root (mpmath values)."""
    center: object
    radius: object

    def modulus(self):
        """Interval enclosure of ``|root|``."""
        with mpmath.workdps(_DPS), _iv_dps(_DPS):
            m = abs(self.center)
            return mpmath.iv.mpf([max(m - self.radius, 0), m + self.radius])

    def as_dict(self) -> dict:
        z = complex(self.center)
        return {"re": z.real, "im": z.imag, "radius": float(self.radius)}


def _floats(x) -> tuple[float, float]:
    """Outward-rounded float bounds of an interval."""
    lo, hi = float(x.a), float(x.b)
    return math.nextafter(lo, -math.inf), math.nextafter(hi, math.inf)


def _meets(x, y) -> bool:
    return x.a <= y.b and y.a <= x.b


def root_disks(p: UniPoly, eps) -> list[RootDisk]:
    """Inclusion disks for the roots of a squarefree integer polynomial, each narrower than eps.

    Uses the bound ``|z - root| <= n |p(z)/p'(z)|``; the disks are checked to be pairwise
    disjoint, so each holds exactly one root.
    """
    eps = mpmath.mpf(Fraction(eps).numerator) / Fraction(eps).denominator
    n = p.degree
    coeffs = [int(x) for x in p.int_coeffs()[::-1]]
    dp = [coeffs[i] * (n - i) for i in range(n)]
    dps = _DPS
    while dps <= 800:
        with mpmath.workdps(dps):
            zs = mpmath.polyroots(coeffs, maxsteps=400, extraprec=4 * dps)
            disks = []
            for z in zs:
                den = mpmath.polyval(dp, z)
                if den == 0:
                    break
                r = n * abs(mpmath.polyval(coeffs, z) / den)
                # pad the radius to cover rounding in the evaluation
                disks.append(RootDisk(z, r + mpmath.mpf(10) ** (-dps + 5) * (1 + abs(z))))
            else:
                ok = all(abs(disks[i].center - disks[j].center) > disks[i].radius + disks[j].radius
                         for i in range(n) for j in range(i + 1, n))
                if ok and all(2 * d.radius < eps for d in disks):
                    return disks
        dps *= 2
    raise ArithmeticError("could not separate the roots at the available precision")


@dataclass
class TorusSpectrum:
    sextic: ReciprocalSextic
    alpha: RootDisk
    beta: RootDisk
    gamma: RootDisk
    beta_on_circle: bool
    alpha_nonreal: bool
    lambda1: tuple[float, float]
    lambda2: tuple[float, float]
    checks: dict = field(default_factory=dict)

    @property
    def lambda1_equals_lambda2(self) -> bool:
        """Decided exactly: lambda1 = lambda2 iff |beta| = 1."""
        return self.beta_on_circle

    def as_dict(self) -> dict:
        return {"alpha": self.alpha.as_dict(), "beta": self.beta.as_dict(),
                "gamma": self.gamma.as_dict(), "beta_on_circle": self.beta_on_circle,
                "alpha_nonreal": self.alpha_nonreal, "lambda1": list(self.lambda1),
                "lambda2": list(self.lambda2),
                "lambda1_equals_lambda2": self.lambda1_equals_lambda2, "checks": self.checks}


def spectrum(s: ReciprocalSextic, eps=Fraction(1, 10 ** 12)) -> TorusSpectrum:
    ok, cert = admissible(s)
    if not ok:
        raise ValueError(f"sextic {s.as_tuple()} is not admissible")
    disks = root_disks(s.poly, eps)
    upper = sorted((d for d in disks if d.center.imag > 0), key=lambda d: -abs(d.center))
    if len(upper) != 3 or any(d.radius >= abs(d.center.imag) for d in upper):
        raise ArithmeticError("root disks do not separate the conjugate pairs")
    alpha, beta, gamma = upper
    with _iv_dps(_DPS):
        ma, mb, mg = alpha.modulus(), beta.modulus(), gamma.modulus()
        lam1 = ma * ma
        lam2 = lam1 * mb * mb
        inv_g2 = 1 / (mg * mg)
        checks = {
            "ordered": bool(ma.a >= mb.b and mb.a >= mg.b),
            "alpha_gamma_reciprocal": bool(_meets(ma * mg, mpmath.iv.mpf(1))),
            "lambda2_is_inverse_gamma_squared": bool(_meets(lam2, inv_g2)),
            "beta_modulus_contains_1": bool(_meets(mb, mpmath.iv.mpf(1))),
        }
        lam1, lam2 = _floats(lam1), _floats(lam2)
    return TorusSpectrum(s, alpha, beta, gamma, beta_on_circle(s), True, lam1, lam2, checks)


def composed_product(p: UniPoly) -> UniPoly:
    """Res_t(p(t), t^n p(x/t)): its roots are all products of two roots of p."""
    t, x = sympy.symbols("t x")
    n = p.degree
    cs = p.int_coeffs()
    pt = sum(sympy.Integer(c) * t ** i for i, c in enumerate(cs))
    px = sum(sympy.Integer(c) * x ** i * t ** (n - i) for i, c in enumerate(cs))
    res = sympy.Poly(sympy.resultant(pt, px, t), x)
    return UniPoly([int(c) for c in reversed(res.all_coeffs())])


def lambda1_enclosure(p: UniPoly, eps=Fraction(1, 10 ** 12)) -> tuple[Fraction, Fraction]:
    """Rational interval containing rho^2, rho the largest root modulus of p."""
    disks = root_disks(squarefree_part(p), eps)
    with _iv_dps(_DPS):
        lam = max((d.modulus() for d in disks), key=lambda m: m.b) ** 2
        lo, hi = _floats(lam)
    return Fraction(lo), Fraction(hi)


def lambda1_min_poly(p: UniPoly) -> UniPoly:
    """Minimal polynomial of rho^2, selected by an exact root count in its enclosure."""
    lo, hi = lambda1_enclosure(p)
    x = sympy.symbols("x")
    comp = composed_product(p)
    expr = sum(sympy.Integer(c) * x ** i for i, c in enumerate(comp.int_coeffs()))
    _, factors = sympy.factor_list(expr, x)
    hits = []
    for f, _ in factors:
        q = UniPoly([int(c) for c in reversed(sympy.Poly(f, x).all_coeffs())])
        if q.degree >= 1 and (q(hi) == 0 or sturm_count(q, lo, hi) > 0):
            hits.append(q)
    if len(hits) != 1:
        raise ArithmeticError(f"{len(hits)} factors of the composed product meet the enclosure")
    best = hits[0]
    return -best if best.lc() < 0 else best


def fibration_criterion(s) -> tuple[str, dict]:
    """Verdict on lambda1's minimal polynomial: quadratic or Salem means fibered."""
    p = s.poly if isinstance(s, ReciprocalSextic) else s
    cert = {"poly": p.to_text("t")}
    chi_class = classify(p)
    cert["chi_verdict"] = chi_class.verdict
    if chi_class.verdict == CYCLOTOMIC_PRODUCT:
        cert["reason"] = "all roots are roots of unity, lambda1 = 1"
        return KRONECKER, cert
    mp = lambda1_min_poly(p)
    lam = classify(mp)
    cert["lambda1_min_poly"] = mp.to_text("x")
    cert["lambda1_degree"] = mp.degree
    cert["lambda1_verdict"] = lam.verdict
    irreducible = is_irreducible(p)
    cert["irreducible"] = irreducible
    if isinstance(s, ReciprocalSextic):
        cert["beta_on_circle"] = beta_on_circle(s)
    if mp.degree == 2 or lam.verdict == SALEM:
        cert["reason"] = "lambda1 is quadratic" if mp.degree == 2 else "lambda1 is a Salem number"
        return FIBERED, cert
    if irreducible:
        cert["reason"] = "irreducible sextic: every root has degree 6"
        cert["d_beta"] = 6
    else:
        cert["reason"] = "lambda1 is neither quadratic nor Salem"
    return NON_FIBERED, cert
