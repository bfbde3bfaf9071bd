"""Reciprocal sextics t^6 + a t^5 + b t^4 + c t^3 + b t^2 + a t + 1 and their admissibility.

A sextic is admissible when it is irreducible and its trace cubic
``s^3 + a s^2 + (b-3) s + (c-2a)`` has exactly one real root, lying in (-2, 2):
then exactly one conjugate pair of roots is on the unit circle and the other
four roots are non-real and off the circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from ..exactcore.irreducible import irreducibility_certificate
from ..exactcore.quadext import QuadExt, squarefree_part
from ..exactcore.roots import sturm_count
from ..exactcore.unipoly import UniPoly
from ..numclass.classify import trace_poly


@dataclass(frozen=True)
class ReciprocalSextic:
    a: int
    b: int
    c: int

    @property
    def poly(self) -> UniPoly:
        a, b, c = self.a, self.b, self.c
        return UniPoly([1, a, b, c, b, a, 1])

    @property
    def theta(self) -> UniPoly:
        """The trace cubic s^3 + a s^2 + (b-3) s + (c-2a)."""
        return UniPoly([self.c - 2 * self.a, self.b - 3, self.a, 1])

    def as_tuple(self) -> tuple[int, int, int]:
        return self.a, self.b, self.c


def _critical_values(theta: UniPoly):
    """Exact signs of theta at the real roots of theta' (empty if there are none)."""
    a2, a1 = theta[2], theta[1]
    # theta' = 3 s^2 + 2 a2 s + a1
    disc = 4 * a2 * a2 - 12 * a1
    if disc < 0:
        return []
    if disc == 0:
        s = Fraction(-a2, 3)
        return [(str(s), (theta(s) > 0) - (theta(s) < 0))]
    d, k = squarefree_part(int(disc))
    out = []
    for sign in (1, -1):
        if d == 1:
            s = Fraction(-2 * a2 + sign * k, 6)
            val = theta(s)
            out.append((str(s), (val > 0) - (val < 0)))
            continue
        s = QuadExt(Fraction(-2 * a2, 6), Fraction(sign * k, 6), d)
        val = theta[0] + theta[1] * s + theta[2] * s * s + s * s * s
        out.append((s.to_text(), val.sign()))
    return out


def admissibility_certificate(s: ReciprocalSextic) -> dict:
    chi = s.poly
    theta = s.theta
    cert = {"a": s.a, "b": s.b, "c": s.c, "theta": theta.to_text("s")}
    cert["theta_matches_trace"] = trace_poly(chi) == theta
    irr = irreducibility_certificate(chi)
    cert["irreducible"] = irr["irreducible"]
    cert["irreducibility_method"] = irr["method"]
    if theta(2) == 0 or theta(-2) == 0:
        cert["real_roots"] = None
        cert["roots_in_open_interval"] = None
        cert["admissible"] = False
        cert["reason"] = "root at +-1"
        return cert
    n_real = sturm_count(theta)
    n_mid = sturm_count(theta, -2, 2)
    cert["real_roots"] = n_real
    cert["roots_in_open_interval"] = n_mid
    cert["critical_values"] = _critical_values(theta)
    cert["admissible"] = bool(irr["irreducible"] and n_real == 1 and n_mid == 1)
    return cert


def admissible(s: ReciprocalSextic) -> tuple[bool, dict]:
    cert = admissibility_certificate(s)
    return cert["admissible"], cert


def beta_on_circle(s: ReciprocalSextic) -> bool:
    """True iff some conjugate pair of roots lies on the unit circle (exact, via theta)."""
    theta = s.theta
    if theta(2) == 0 or theta(-2) == 0:
        return True
    return sturm_count(theta, -2, 2) > 0


def search(bound: int) -> list[ReciprocalSextic]:
    """All admissible sextics with |a|, |b|, |c| <= bound, in lexicographic order."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    rng = range(-bound, bound + 1)
    out = []
    for a, b, c in product(rng, rng, rng):
        s = ReciprocalSextic(a, b, c)
        if quick_reject(s):
            continue
        if admissible(s)[0]:
            out.append(s)
    return out


def quick_reject(s: ReciprocalSextic) -> bool:
    """Cheap necessary conditions: theta has one real root, in (-2, 2)."""
    theta = s.theta
    if theta(2) == 0 or theta(-2) == 0:
        return True
    return sturm_count(theta) != 1 or sturm_count(theta, -2, 2) != 1
