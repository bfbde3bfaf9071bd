"""Projective points and rational maps given by homogeneous coordinate polynomials."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations

from ..exactcore.modp import choose_reduction, pgcd
from .gcd import mgcd
from .poly import MultiPoly

LINE_HEIGHT = 1000


class Indeterminate:
    """Value returned when every coordinate of a map vanishes at a point."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Indeterminate"

    def __bool__(self):
        return False


INDETERMINATE = Indeterminate()


class ProjPoint:
    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(Fraction(c) if isinstance(c, int) else c for c in coords)
        if all(c == 0 for c in coords):
            raise ValueError("projective point with all coordinates zero")
        self.coords = coords

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        if isinstance(other, Indeterminate):
            return False
        if not isinstance(other, ProjPoint):
            other = ProjPoint(other)
        if len(other) != len(self):
            return False
        a, b = self.coords, other.coords
        n = len(a)
        return all(a[i] * b[j] == a[j] * b[i] for i in range(n) for j in range(i + 1, n))

    def __hash__(self):
        return hash(self.normalized().coords)

    def normalized(self) -> ProjPoint:
        """Scale so the first nonzero coordinate is 1."""
        k = next(c for c in self.coords if c != 0)
        return ProjPoint([c / k for c in self.coords])

    def to_text(self) -> str:
        parts = [c.to_text() if hasattr(c, "to_text") else str(c)
                 for c in self.normalized().coords]
        return "[" + " : ".join(parts) + "]"

    def __repr__(self):
        return f"ProjPoint({self.to_text()})"


class RationalMap:
    """``[P_0 : ... : P_m]`` with homogeneous ``P_i`` of one common degree in ``nvars`` variables."""

    __slots__ = ("nvars", "coords", "name")

    def __init__(self, coords, name: str = ""):
        coords = list(coords)
        if not coords:
            raise ValueError("empty map")
        nv = coords[0].nvars
        if any(c.nvars != nv for c in coords):
            raise ValueError("coordinates live in different rings")
        if all(c.is_zero() for c in coords):
            raise ValueError("all coordinates vanish")
        degs = {c.degree() for c in coords if not c.is_zero()}
        if len(degs) != 1 or not all(c.is_homogeneous() for c in coords):
            raise ValueError("coordinates must be homogeneous of one common degree")
        self.nvars = nv
        self.coords = tuple(coords)
        self.name = name

    @property
    def source_dim(self) -> int:
        return self.nvars - 1

    @property
    def target_dim(self) -> int:
        return len(self.coords) - 1

    @property
    def degree(self) -> int:
        return next(c.degree() for c in self.coords if not c.is_zero())

    @classmethod
    def identity(cls, nvars: int) -> RationalMap:
        return cls(MultiPoly.gens(nvars), name="id")

    def __call__(self, point):
        return evaluate(self, point)

    def normalized(self) -> RationalMap:
        first = next(c for c in self.coords if not c.is_zero())
        k = first.lc()
        return RationalMap([c.scale(1 / k) for c in self.coords], self.name)

    def equals_up_to_scalar(self, other: RationalMap) -> bool:
        if len(self.coords) != len(other.coords) or self.nvars != other.nvars:
            return False
        return self.normalized().coords == other.normalized().coords

    def is_identity(self) -> bool:
        return len(self.coords) == self.nvars and \
            self.equals_up_to_scalar(RationalMap.identity(self.nvars))

    def to_text(self, names=None) -> str:
        return "[" + " : ".join(c.to_text(names) for c in self.coords) + "]"

    def __repr__(self):
        return f"RationalMap({self.to_text()})"


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def compose(outer: RationalMap, inner: RationalMap) -> RationalMap:
    """``outer o inner`` by substitution, not reduced."""
    if outer.nvars != len(inner.coords):
        raise ValueError(f"cannot compose: outer takes {outer.nvars} coordinates, "
                         f"inner gives {len(inner.coords)}")
    return RationalMap([c.substitute(list(inner.coords), inner.nvars) for c in outer.coords])


def evaluate(m: RationalMap, point):
    pt = point.coords if isinstance(point, ProjPoint) else tuple(point)
    if len(pt) != m.nvars:
        raise ValueError("point dimension mismatch")
    values = [c.evaluate(pt) for c in m.coords]
    if all(v == 0 for v in values):
        return INDETERMINATE
    return ProjPoint(values)


def random_line(nvars: int, rng: random.Random):
    p0 = [rng.randint(-LINE_HEIGHT, LINE_HEIGHT) for _ in range(nvars)]
    p1 = [rng.randint(-LINE_HEIGHT, LINE_HEIGHT) for _ in range(nvars)]
    return p0, p1


def coords_disc(coords) -> int | None:
    for c in coords:
        d = c.field_disc()
        if d is not None:
            return d
    return None


def line_gcd_certificate(coords, rng: random.Random) -> dict:
    """Coprimality certificate on a random line, computed modulo a random prime.

    If the coordinates shared a factor G over the field, then on any line and
    modulo any prime not dividing the denominators, the reduced restrictions
    would share the reduction of G as a binary form.  So a constant gcd mod p
    together with one coordinate keeping full degree mod p (no common root at
    infinity) proves the coordinates are coprime.
    """
    nz = [c for c in coords if not c.is_zero()]
    d = nz[0].degree()
    disc = coords_disc(nz)
    while True:
        red = choose_reduction(disc, rng)
        try:
            reduced = [c.reduce_mod(red) for c in nz]
            break
        except ZeroDivisionError:
            continue
    p0, p1 = random_line(nz[0].nvars, rng)
    rs = [c.restrict_to_line_mod(red, p0, p1, r) for c, r in zip(nz, reduced)]
    g: list[int] = []
    for r in rs:
        g = pgcd(g, r, red.p)
        if len(g) == 1:
            break
    full = any(len(r) - 1 == d for r in rs)
    return {"line": (p0, p1), "prime": red.p, "gcd_degree": len(g) - 1,
            "full_degree": full, "certified": len(g) == 1 and full}


def _monomial_content(coords):
    nz = [c for c in coords if not c.is_zero()]
    n = nz[0].nvars
    mins = [min(e[i] for c in nz for e in c.terms) for i in range(n)]
    return tuple(mins)


def _divide_monomial(p: MultiPoly, mono) -> MultiPoly:
    if not any(mono):
        return p
    return MultiPoly(p.nvars, {tuple(a - b for a, b in zip(e, mono)): c
                               for e, c in p.terms.items()})


def reduce_map(m: RationalMap, hints=(), seed: int = 0, lines: int = 3,
               log: list | None = None) -> RationalMap:
    """Divide the coordinates of ``m`` by their full common polynomial factor.

    Steps: remove the monomial content, trial-divide by hint factors, then
    certify coprimality on random lines; if the certificate fails, compute
    the multivariate gcd and repeat.
    """
    rng = random.Random(seed)
    coords = list(m.coords)
    removed = []
    mono = _monomial_content(coords)
    if any(mono):
        coords = [_divide_monomial(c, mono) for c in coords]
        removed.append(("monomial", mono))
    for h in hints:
        if h.is_constant():
            continue
        count = 0
        while True:
            quots = []
            for c in coords:
                q = c.try_div(h) if not c.is_zero() else c
                if q is None:
                    break
                quots.append(q)
            else:
                coords = quots
                count += 1
                continue
            break
        if count:
            removed.append((h.to_text(), count))
    while True:
        cert = None
        for _ in range(lines):
            cert = line_gcd_certificate(coords, rng)
            if cert["certified"]:
                break
        if cert["certified"]:
            if log is not None:
                log.append({"removed": removed, "certificate_line": cert["line"]})
            return RationalMap(coords, m.name)
        g = MultiPoly.const(0, coords[0].nvars)
        for c in coords:
            if not c.is_zero():
                g = mgcd(g, c) if not g.is_zero() else c.monic()
        if g.is_constant():
            # the lines were unlucky; draw fresh ones
            continue
        coords = [c.exact_div(g) if not c.is_zero() else c for c in coords]
        removed.append(("gcd", g.to_text()))


def jacobian_matrix(m: RationalMap):
    return [[c.diff(j) for j in range(m.nvars)] for c in m.coords]


def _perm_sign(p) -> int:
    sign, seen = 1, list(p)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    return sign


def jacobian_det(m: RationalMap) -> MultiPoly:
    """Determinant of the matrix of partial derivatives of the lift."""
    if len(m.coords) != m.nvars:
        raise ValueError("jacobian determinant needs a square system")
    jm = jacobian_matrix(m)
    n = m.nvars
    total = MultiPoly(n)
    for perm in permutations(range(n)):
        term = MultiPoly.const(_perm_sign(perm), n)
        for i, j in enumerate(perm):
            term = term * jm[i][j]
            if term.is_zero():
                break
        total = total + term
    return total


def factor_against(p: MultiPoly, hints=()) -> dict:
    """Split ``p`` as scalar * monomial * prod(hint^k) * residual."""
    mono = _monomial_content([p])
    rest = _divide_monomial(p, mono)
    mults = []
    for h in hints:
        k = 0
        while not rest.is_constant():
            q = rest.try_div(h)
            if q is None:
                break
            rest, k = q, k + 1
        mults.append((h, k))
    scalar = rest.constant_value() if rest.is_constant() else rest.lc()
    residual = rest.scale(1 / scalar)
    return {"scalar": scalar, "monomial": mono, "hints": mults, "residual": residual}


def restrict_to_plane(m: RationalMap, var_index: int, hints=(), seed: int = 0) -> RationalMap:
    """Induced map on the invariant hyperplane ``{x_i = 0}``."""
    if len(m.coords) != m.nvars:
        raise ValueError("restriction needs a self-map")
    cut = [c.set_var(var_index, 0) for c in m.coords]
    if not cut[var_index].is_zero():
        raise ValueError(f"the plane x{var_index}=0 is not invariant")
    if all(c.is_zero() for c in cut):
        raise ValueError(f"the map collapses x{var_index}=0 into its indeterminacy")
    rest = [c.drop_var(var_index) for k, c in enumerate(cut) if k != var_index]
    hints = [h.set_var(var_index, 0).drop_var(var_index) for h in hints
             if h.nvars == m.nvars]
    hints = [h for h in hints if not h.is_zero()]
    return reduce_map(RationalMap(rest), hints, seed)
