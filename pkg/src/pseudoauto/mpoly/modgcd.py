"""Modular gcd of homogeneous polynomials over Q or Q(sqrt d).

Both inputs are sheared, ``x_i -> x_i + r_i x_0``, so that every factor
becomes monic in ``x_0``.  Modulo a prime the gcd is then read off from
univariate gcds on a grid of lines and interpolated; the two square roots of
``d`` mod p give the two conjugate images, and rational reconstruction over
several primes recovers the coefficients.  A candidate is only returned after
it divides both inputs exactly, so the modular steps can cost time but never
correctness.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, isqrt

from ..exactcore.modp import Reduction, choose_reduction, interpolate_mod, pgcd
from ..exactcore.quadext import QuadExt
from .poly import MultiPoly, eval_mod

SHEAR_HEIGHT = 50


class UnluckyPrime(Exception):
    pass


def _ratrec(u: int, m: int):
    bound = isqrt(m // 2)
    r0, r1 = m, u % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def _interp_grid(xs, values: dict, dim: int, p: int) -> dict:
    """Tensor Newton interpolation of grid values; keys become exponent tuples."""
    cur = values
    for axis in range(dim):
        groups: dict = {}
        for key, v in cur.items():
            rest = key[:axis] + key[axis + 1:]
            groups.setdefault(rest, {})[key[axis]] = v
        nxt = {}
        for rest, col in groups.items():
            ys = [col.get(i, 0) for i in range(len(xs))]
            for e, c in enumerate(interpolate_mod(xs, ys, p)):
                if c:
                    nxt[rest[:axis] + (e,) + rest[axis:]] = c
        cur = nxt
    return cur


def _image(a, b, red, shear, k_hint, rng):
    """gcd of ``a`` and ``b`` after the shear, modulo ``red``; monic in x_0.

    Returns ``(k, {exponent: int})``; raises UnluckyPrime when the grid or
    the prime misbehaves.
    """
    p = red.p
    n = a.nvars
    ra, rb = a.reduce_mod(red), b.reduce_mod(red)
    direction = [1] + list(shear)
    if eval_mod(ra, direction, p, n) == 0 or eval_mod(rb, direction, p, n) == 0:
        raise UnluckyPrime("leading coefficient vanishes mod p")
    dim = n - 2
    offset = [rng.randrange(p) for _ in range(dim)]

    def uni(point):
        base = [0] + [(o + t) % p for o, t in zip(offset, point)] + [1]
        ga = a.restrict_to_line_mod(red, base, direction, ra)
        gb = b.restrict_to_line_mod(red, base, direction, rb)
        return pgcd(ga, gb, p)

    k = len(uni([0] * dim)) - 1 if k_hint is None else k_hint
    if k == 0:
        return 0, {}
    xs = list(range(k + 1))
    grid = [()]
    for _ in range(dim):
        grid = [g + (i,) for g in grid for i in xs]
    per_coeff: list[dict] = [dict() for _ in range(k + 1)]
    for point in grid:
        g = uni(list(point))
        if len(g) - 1 != k:
            raise UnluckyPrime("gcd degree changed across the grid")
        for j, c in enumerate(g):
            per_coeff[j][point] = c
    out = {}
    for j in range(k + 1):
        poly = _interp_grid(xs, per_coeff[j], dim, p) if dim else {(): per_coeff[j][()]}
        for alpha, c in poly.items():
            last = k - j - sum(alpha)
            if last < 0:
                raise UnluckyPrime("interpolant exceeds the degree bound")
            out[(j,) + alpha + (last,)] = c
    # undo the shift of the interpolation variables: x_i = offset_i + t_i
    shifted = MultiPoly(n, {e: c for e, c in out.items()})
    images = [MultiPoly.var(0, n)]
    for i in range(dim):
        images.append(MultiPoly.var(i + 1, n) - MultiPoly.var(n - 1, n).scale(offset[i]))
    images.append(MultiPoly.var(n - 1, n))
    back = shifted.substitute(images, n)
    return k, {e: int(c) % p for e, c in back.terms.items() if int(c) % p}


def _lift(images: dict, m: int, disc):
    out = {}
    for e, (re, im) in images.items():
        r = _ratrec(re, m)
        if r is None:
            return None
        if disc is None:
            out[e] = r
            continue
        i = _ratrec(im, m)
        if i is None:
            return None
        out[e] = QuadExt(r, i, disc) if i else r
    return out


def homogeneous_gcd(a: MultiPoly, b: MultiPoly, seed: int = 0, max_primes: int = 60) -> MultiPoly:
    """Monic gcd of two nonzero homogeneous polynomials in at least two variables."""
    n = a.nvars
    disc = a.field_disc() or b.field_disc()
    rng = random.Random(seed)
    while True:
        shear = [rng.randint(-SHEAR_HEIGHT, SHEAR_HEIGHT) for _ in range(n - 1)]
        direction = [1] + shear
        if a.evaluate(direction) != 0 and b.evaluate(direction) != 0:
            break
    best_k = None
    acc: dict = {}
    modulus = 1
    tried = 0
    while tried < max_primes:
        tried += 1
        red = choose_reduction(disc, rng)
        try:
            if disc is None:
                k, img = _image(a, b, red, shear, None, rng)
                pairs = {e: (c, 0) for e, c in img.items()}
            else:
                k, img1 = _image(a, b, red, shear, None, rng)
                conj = Reduction(red.p, disc, red.p - red.root)
                _, img2 = _image(a, b, conj, shear, k, rng)
                inv2 = pow(2, -1, red.p)
                inv2s = pow(2 * red.root, -1, red.p)
                keys = set(img1) | set(img2)
                pairs = {e: ((img1.get(e, 0) + img2.get(e, 0)) * inv2 % red.p,
                             (img1.get(e, 0) - img2.get(e, 0)) * inv2s % red.p) for e in keys}
        except (UnluckyPrime, ZeroDivisionError):
            continue
        if k == 0:
            return MultiPoly.const(1, n)
        if best_k is not None and k > best_k:
            continue
        if best_k is None or k < best_k:
            best_k, acc, modulus = k, {}, 1
        p = red.p
        keys = set(acc) | set(pairs)
        new = {}
        for e in keys:
            old = acc.get(e, (0, 0))
            cur = pairs.get(e, (0, 0))
            new[e] = tuple(_crt(o, modulus, c, p) for o, c in zip(old, cur))
        acc, modulus = new, modulus * p
        coeffs = _lift(acc, modulus, disc)
        if coeffs is None:
            continue
        cand = MultiPoly(n, coeffs)
        inverse = [MultiPoly.var(0, n)] + [MultiPoly.var(i + 1, n) - MultiPoly.var(0, n).scale(r)
                                           for i, r in enumerate(shear)]
        g = cand.substitute(inverse, n)
        if a.try_div(g) is not None and b.try_div(g) is not None:
            return g.monic()
    raise ArithmeticError("modular gcd did not stabilise")


def _crt(r1: int, m1: int, r2: int, m2: int) -> int:
    t = (r2 - r1) * pow(m1, -1, m2) % m2
    return (r1 + m1 * t) % (m1 * m2)
