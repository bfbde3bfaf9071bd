"""Irreducibility over Q for small-degree integer polynomials.

A mod-p degree-pattern sieve proves irreducibility in most cases: each good
prime restricts the possible degrees of a rational factor to subset sums of
its modular factor degrees, and once only ``{0, n}`` survive the polynomial
is irreducible.  When the sieve is inconclusive we fall back to sympy's
factorization over Z.
"""

from __future__ import annotations

import sympy

from .modp import pderiv, pdiv, pgcd, pmod, ppowmod, trim
from .unipoly import UniPoly

MAX_DEGREE = 13
SIEVE_PRIMES = [p for p in range(2, 100) if all(p % q for q in range(2, int(p ** 0.5) + 1))]


def degree_pattern_mod_p(coeffs: list[int], p: int) -> list[int] | None:
    """Degrees of the irreducible factors mod p, or None if p is not a good prime."""
    f = trim([c % p for c in coeffs])
    if len(f) != len(coeffs):  # leading coefficient vanished
        return None
    g = pgcd(f, pderiv(f, p), p)
    if len(g) > 1:  # not squarefree mod p
        return None
    inv = pow(f[-1], -1, p)
    f = [c * inv % p for c in f]
    degrees = []
    h = [0, 1]
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = ppowmod(h, p, f, p)
        diff = h[:] + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = pgcd(f, trim(diff), p)
        k = len(g) - 1
        if k > 0:
            degrees += [d] * (k // d)
            f = pdiv(f, g, p)
            h = pmod(h, f, p)
    if len(f) > 1:
        degrees.append(len(f) - 1)
    return sorted(degrees)


def _subset_sums(degs):
    sums = {0}
    for d in degs:
        sums |= {s + d for s in sums}
    return sums


def irreducibility_certificate(p: UniPoly) -> dict:
    """Decide irreducibility over Q; returns ``{'irreducible', 'method', ...}``."""
    if p.degree <= 0:
        return {"irreducible": False, "method": "degree"}
    q = p.primitive()
    if q.degree == 1:
        return {"irreducible": True, "method": "degree"}
    if q[0] == 0:
        return {"irreducible": False, "method": "x divides"}
    if q.degree > MAX_DEGREE:
        raise ValueError(f"irreducibility test limited to degree <= {MAX_DEGREE}")
    coeffs = q.int_coeffs()
    n = q.degree
    possible = set(range(n + 1))
    patterns = {}
    for prime in SIEVE_PRIMES:
        pat = degree_pattern_mod_p(coeffs, prime)
        if pat is None:
            continue
        patterns[prime] = pat
        possible &= _subset_sums(pat)
        if possible == {0, n}:
            return {"irreducible": True, "method": "mod-p degree sieve",
                    "patterns": patterns}
    # sieve inconclusive: factor over Z
    x = sympy.Symbol("x")
    expr = sum(sympy.Integer(c) * x ** i for i, c in enumerate(coeffs))
    _, factors = sympy.factor_list(expr, x)
    irreducible = len(factors) == 1 and factors[0][1] == 1
    return {"irreducible": irreducible, "method": "factorization over Z",
            "patterns": patterns,
            "factors": [(str(f), e) for f, e in factors]}


def is_irreducible(p: UniPoly) -> bool:
    return irreducibility_certificate(p)["irreducible"]
