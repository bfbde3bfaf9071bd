"""Dense polynomials over F_p (lists of ints, lowest degree first) and reduction maps.

Q(sqrt d) reduces modulo a prime ``p`` in which ``d`` is a square by sending
sqrt(d) to a fixed square root ``s`` of ``d`` mod p.
"""

from __future__ import annotations

import random
from fractions import Fraction

from sympy import isprime
from sympy.ntheory import sqrt_mod

from .quadext import QuadExt


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def pmod(a, b, p):
    a = a[:]
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    while a and len(a) - 1 >= db:
        q = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - q * c) % p
        trim(a)
    return a


def pdiv(a, b, p):
    a = a[:]
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    out = [0] * max(len(a) - db, 1)
    while a and len(a) - 1 >= db:
        q = a[-1] * inv % p
        shift = len(a) - 1 - db
        out[shift] = q
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - q * c) % p
        trim(a)
    return trim(out)


def pgcd(a, b, p):
    """Monic gcd in F_p[x]."""
    a, b = trim(a[:]), trim(b[:])
    while b:
        a, b = b, pmod(a, b, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return trim(out)


def pmulmod(a, b, f, p):
    return pmod(pmul(a, b, p), f, p)


def ppowmod(base, e, f, p):
    result = [1]
    while e:
        if e & 1:
            result = pmulmod(result, base, f, p)
        base = pmulmod(base, base, f, p)
        e >>= 1
    return result


def ppow(base, e, p):
    result = [1]
    while e:
        if e & 1:
            result = pmul(result, base, p)
        base = pmul(base, base, p)
        e >>= 1
    return result


def pderiv(a, p):
    return trim([(i * c) % p for i, c in enumerate(a)][1:])


def interpolate_mod(xs, ys, p):
    """Newton interpolation in F_p; returns coefficient list."""
    n = len(xs)
    coef = [y % p for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) * pow(xs[i] - xs[i - j], -1, p) % p
    out = [coef[-1]]
    for i in range(n - 2, -1, -1):
        # out = out*(x - xs[i]) + coef[i]
        shifted = [0] + out
        for k in range(len(out)):
            shifted[k] = (shifted[k] - xs[i] * out[k]) % p
        shifted[0] = (shifted[0] + coef[i]) % p
        out = shifted
    return trim(out)


class Reduction:
    """Ring map Q(sqrt disc) -> F_p (or Q -> F_p when disc is None)."""

    def __init__(self, p: int, disc: int | None = None, root: int | None = None):
        self.p = p
        self.disc = disc
        self.root = root

    def __call__(self, x) -> int:
        p = self.p
        if isinstance(x, QuadExt) and x.im != 0:
            if self.disc is None or x.disc != self.disc:
                raise ValueError("element outside the reduction's field")
            return (self._q(x.re) + self._q(x.im) * self.root) % p
        if isinstance(x, QuadExt):
            x = x.re
        return self._q(Fraction(x))

    def _q(self, r: Fraction) -> int:
        if r.denominator % self.p == 0:
            raise ZeroDivisionError("denominator divisible by the prime")
        return r.numerator * pow(r.denominator, -1, self.p) % self.p

    def __repr__(self):
        return f"Reduction(p={self.p}, disc={self.disc}, root={self.root})"


def choose_reduction(disc: int | None, rng: random.Random, bits: int = 61) -> Reduction:
    """A random large prime with ``disc`` a nonzero square mod p."""
    while True:
        p = rng.randrange(1 << (bits - 1), 1 << bits) | 1
        if not isprime(p):
            continue
        if disc is None:
            return Reduction(p)
        if disc % p == 0:
            continue
        s = sqrt_mod(disc % p, p)
        if s is None:
            continue
        return Reduction(p, disc, s)
