"""Iterating rational maps with coordinates kept as products of shared factors.

Expanded iterates of the threefold map reach degree 23 in four variables, and
their unreduced compositions are far larger.  Here each coordinate is stored
as ``scalar * prod(atom^k)`` where atoms are expanded polynomials held in a
shared registry.  Applying a base map whose coordinates are products of small
"factor polynomials" only expands the sums that genuinely appear; common
factors are cancelled atom-wise, and coprimality of the result is certified
on random lines exactly as in ``reduce_map``.
"""

from __future__ import annotations

import random
from collections import Counter

from ..exactcore.modp import choose_reduction, pgcd, pmod, pmul, ppow
from .gcd import mgcd
from .maps import RationalMap, coords_disc, random_line
from .poly import MultiPoly


class AtomRegistry:
    def __init__(self, nvars: int, seed: int = 0, disc: int | None = None):
        self.nvars = nvars
        self.atoms: list[MultiPoly] = []
        self._pow: dict[tuple[int, int], MultiPoly] = {}
        self._reduced: dict[int, dict] = {}
        self._line_cache: dict[tuple, list[int]] = {}
        self.rng = random.Random(seed)
        self.red = choose_reduction(disc, self.rng)
        self._probe = random_line(nvars, self.rng)

    def add(self, p: MultiPoly) -> int:
        self.atoms.append(p)
        return len(self.atoms) - 1

    def degree(self, i: int) -> int:
        return self.atoms[i].degree()

    def power(self, i: int, k: int) -> MultiPoly:
        if k == 0:
            return MultiPoly.const(1, self.nvars)
        if k == 1:
            return self.atoms[i]
        key = (i, k)
        if key not in self._pow:
            half = self.power(i, k // 2)
            sq = half * half
            self._pow[key] = sq * self.atoms[i] if k % 2 else sq
        return self._pow[key]

    def on_line(self, i: int, line) -> list[int]:
        """Restriction of atom ``i`` to an integer line, reduced mod p."""
        key = (i, tuple(line[0]), tuple(line[1]))
        if key not in self._line_cache:
            a = self.atoms[i]
            if i not in self._reduced:
                self._reduced[i] = a.reduce_mod(self.red)
            self._line_cache[key] = a.restrict_to_line_mod(self.red, *line, self._reduced[i])
        return self._line_cache[key]


class Factored:
    """``scalar * prod(atoms[i]^k)``; ``scalar == 0`` encodes the zero polynomial."""

    __slots__ = ("scalar", "exps")

    def __init__(self, scalar, exps=None):
        self.scalar = scalar
        self.exps = Counter({k: v for k, v in (exps or {}).items() if v})

    def is_zero(self) -> bool:
        return self.scalar == 0

    def __mul__(self, other: Factored) -> Factored:
        e = Counter(self.exps)
        e.update(other.exps)
        return Factored(self.scalar * other.scalar, e)

    def degree(self, reg: AtomRegistry) -> int:
        return sum(k * reg.degree(i) for i, k in self.exps.items())

    def expand(self, reg: AtomRegistry) -> MultiPoly:
        out = MultiPoly.const(self.scalar, reg.nvars)
        for i, k in sorted(self.exps.items()):
            out = out * reg.power(i, k)
        return out

    def on_line(self, reg: AtomRegistry, line) -> list[int]:
        p = reg.red.p
        out = [reg.red(self.scalar)]
        for i, k in self.exps.items():
            out = pmul(out, ppow(reg.on_line(i, line), k, p), p)
        return out


def _factor_residual(reg: AtomRegistry, r: MultiPoly) -> Factored:
    """Write ``r`` over the registry: divide out known atoms, register the rest."""
    scalar = r.lc()
    r = r.scale(1 / scalar)
    exps = Counter()
    if r.is_constant():
        return Factored(scalar * r.constant_value(), exps)
    line = reg._probe
    p = reg.red.p
    for i in range(len(reg.atoms)):
        a = reg.atoms[i]
        if a.degree() > r.degree() or a.is_constant():
            continue
        a_line = reg.on_line(i, line)
        r_line = r.restrict_to_line_mod(reg.red, *line)
        while a.degree() <= r.degree():
            # cheap necessary condition, sound when a keeps its degree mod p
            if len(a_line) - 1 == a.degree() and pmod(r_line, a_line, p):
                break
            q = r.try_div(a)
            if q is None:
                break
            r = q
            exps[i] += 1
            r_line = r.restrict_to_line_mod(reg.red, *line)
        if r.is_constant():
            break
    if not r.is_constant():
        c = r.lc()
        r = r.scale(1 / c)
        scalar = scalar * c
        exps[reg.add(r)] += 1
    else:
        scalar = scalar * r.constant_value()
    return Factored(scalar, exps)


class FactoredMap:
    """A base map whose coordinates are products of factor polynomials.

    ``coords[j]`` is a list of ``MultiPoly`` factors in the map's own
    variables; the coordinate is their product.
    """

    def __init__(self, coords, scalars=None):
        self.coords = [list(c) for c in coords]
        self.nvars = self.coords[0][0].nvars
        self.scalars = scalars or [1] * len(self.coords)

    def as_rational_map(self) -> RationalMap:
        out = []
        for fs, s in zip(self.coords, self.scalars):
            p = MultiPoly.const(s, self.nvars)
            for f in fs:
                p = p * f
            out.append(p)
        return RationalMap(out)


def _apply_factor(reg: AtomRegistry, h: MultiPoly, P: list[Factored], memo: dict) -> Factored:
    key = id(h)
    if key in memo:
        return memo[key]
    terms = []
    for e, c in h.terms.items():
        t = Factored(c)
        for i, k in enumerate(e):
            for _ in range(k):
                t = t * P[i]
        if not t.is_zero():
            terms.append(t)
    if not terms:
        res = Factored(0)
    elif len(terms) == 1:
        res = terms[0]
    else:
        common = Counter(terms[0].exps)
        for t in terms[1:]:
            common = common & t.exps
        total = MultiPoly(reg.nvars)
        for t in terms:
            rest = Factored(t.scalar, t.exps - common)
            total = total + rest.expand(reg)
        if total.is_zero():
            res = Factored(0)
        else:
            res = _factor_residual(reg, total) * Factored(1, common)
    memo[key] = res
    return res


def apply_map(base: FactoredMap, P: list[Factored], reg: AtomRegistry) -> list[Factored]:
    memo: dict = {}
    out = []
    for fs, s in zip(base.coords, base.scalars):
        acc = Factored(s)
        for f in fs:
            acc = acc * _apply_factor(reg, f, P, memo)
        out.append(acc)
    return out


def cancel_common(P: list[Factored]) -> list[Factored]:
    nz = [p for p in P if not p.is_zero()]
    common = Counter(nz[0].exps)
    for p in nz[1:]:
        common = common & p.exps
    return [p if p.is_zero() else Factored(p.scalar, p.exps - common) for p in P]


def certify(P: list[Factored], reg: AtomRegistry, tries: int = 3) -> dict:
    nz = [p for p in P if not p.is_zero()]
    d = nz[0].degree(reg)
    info = {}
    for _ in range(tries):
        line = random_line(reg.nvars, reg.rng)
        rs = [p.on_line(reg, line) for p in nz]
        g: list[int] = []
        for r in rs:
            g = pgcd(g, r, reg.red.p)
            if len(g) == 1:
                break
        full = any(len(r) - 1 == d for r in rs)
        info = {"line": line, "prime": reg.red.p, "gcd_degree": len(g) - 1,
                "full_degree": full, "certified": len(g) == 1 and full}
        if info["certified"]:
            return info
    return info


def _replace_atom(P, i, parts, scalar):
    out = []
    for p in P:
        e = Counter(p.exps)
        k = e.pop(i, 0)
        sc = p.scalar
        for idx in parts:
            e[idx] += k
        if k:
            sc = sc * scalar ** k
        out.append(Factored(sc, e))
    return out


def _split_atom(P, reg, i, g_idx):
    q = reg.atoms[i].exact_div(reg.atoms[g_idx])
    if q.is_constant():
        return _replace_atom(P, i, [g_idx], q.constant_value())
    c = q.lc()
    return _replace_atom(P, i, [g_idx, reg.add(q.scale(1 / c))], c)


def _coprime_on_probe(reg: AtomRegistry, i: int, j: int) -> bool:
    """Sufficient test for coprimality of two atoms via the probe line mod p."""
    ri, rj = reg.on_line(i, reg._probe), reg.on_line(j, reg._probe)
    if len(ri) - 1 != reg.degree(i) and len(rj) - 1 != reg.degree(j):
        return False
    return len(pgcd(ri, rj, reg.red.p)) == 1


def _refine(P: list[Factored], reg: AtomRegistry) -> tuple[list[Factored], bool]:
    """Split a pair of atoms sharing a factor; returns (new P, changed)."""
    used = sorted({i for p in P for i in p.exps})
    for x in range(len(used)):
        for y in range(x + 1, len(used)):
            i, j = used[x], used[y]
            if _coprime_on_probe(reg, i, j):
                continue
            g = mgcd(reg.atoms[i], reg.atoms[j])
            if g.is_constant():
                continue
            g_idx = reg.add(g)
            P = _split_atom(P, reg, i, g_idx)
            P = _split_atom(P, reg, j, g_idx)
            return P, True
    return P, False


def reduce_factored(P: list[Factored], reg: AtomRegistry) -> tuple[list[Factored], dict]:
    P = cancel_common(P)
    unlucky = 0
    while True:
        cert = certify(P, reg)
        if cert["certified"]:
            return P, cert
        P, changed = _refine(P, reg)
        if not changed:
            # every pair of atoms is coprime; confirm with a full gcd
            coords = [p.expand(reg) for p in P]
            g = MultiPoly(reg.nvars)
            for c in coords:
                if not c.is_zero():
                    g = c.monic() if g.is_zero() else mgcd(g, c)
            if g.is_constant() and unlucky < 5:
                unlucky += 1
                continue
            raise ArithmeticError("common factor not resolved by atom refinement")
        P = cancel_common(P)


class FactoredIteration:
    """Successive reduced iterates ``base^k``, with per-step certificates."""

    def __init__(self, base: FactoredMap, seed: int = 0):
        self.base = base
        disc = coords_disc([f for fs in base.coords for f in fs])
        self.reg = AtomRegistry(base.nvars, seed, disc)
        self.identity = [Factored(1, {self.reg.add(MultiPoly.var(i, base.nvars)): 1})
                         for i in range(base.nvars)]
        self.iterates: list[list[Factored]] = []
        self.certificates: list[dict] = []

    def step(self) -> list[Factored]:
        prev = self.iterates[-1] if self.iterates else self.identity
        raw = apply_map(self.base, prev, self.reg)
        P, cert = reduce_factored(raw, self.reg)
        self.iterates.append(P)
        self.certificates.append(cert)
        return P

    def run(self, n: int) -> list[int]:
        while len(self.iterates) < n:
            self.step()
        return self.degrees()[:n]

    def degrees(self) -> list[int]:
        return [next(p for p in P if not p.is_zero()).degree(self.reg) for P in self.iterates]

    def expanded(self, k: int) -> RationalMap:
        """The k-th iterate (1-based) as an expanded rational map."""
        while len(self.iterates) < k:
            self.step()
        return RationalMap([p.expand(self.reg) if not p.is_zero() else MultiPoly(self.reg.nvars)
                            for p in self.iterates[k - 1]])
