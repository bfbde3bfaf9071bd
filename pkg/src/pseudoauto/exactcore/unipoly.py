"""Dense univariate polynomials over an exact field (Q or Q(sqrt d)).

Coefficients are stored lowest degree first.  Integers are promoted to
``Fraction`` so that division never truncates.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm


def _lift(x):
    if isinstance(x, int):
        return Fraction(x)
    return x


def _is_zero(x) -> bool:
    return x == 0


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_lift(c) for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -----------------------------------------------------
    @classmethod
    def x(cls) -> UniPoly:
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> UniPoly:
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c=1) -> UniPoly:
        return cls([0] * n + [c])

    @classmethod
    def from_roots(cls, roots) -> UniPoly:
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @classmethod
    def from_high(cls, coeffs) -> UniPoly:
        """Build from coefficients listed highest degree first."""
        return cls(list(coeffs)[::-1])

    # -- basic properties -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def is_integral(self) -> bool:
        return all(isinstance(c, Fraction) and c.denominator == 1
                   for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("polynomial has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    # -- arithmetic -------------------------------------------------------
    def _wrap(self, other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __add__(self, other):
        o = self._wrap(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly([self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = UniPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        o = self._wrap(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return UniPoly(), UniPoly(rem)
        quot = [Fraction(0)] * (dq + 1)
        inv = 1 / o.lc()
        m = len(o.coeffs) - 1
        for k in range(dq, -1, -1):
            q = rem[k + m] * inv
            quot[k] = q
            if _is_zero(q):
                continue
            for j, b in enumerate(o.coeffs):
                rem[k + j] = rem[k + j] - q * b
        return UniPoly(quot), UniPoly(rem[:m])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> UniPoly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def divides(self, other: UniPoly) -> bool:
        """True when ``self`` divides ``other``."""
        return (other % self).is_zero()

    # -- calculus / evaluation -------------------------------------------
    def derivative(self) -> UniPoly:
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = Fraction(0) if not self.coeffs else self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose(self, inner: UniPoly) -> UniPoly:
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def scale_arg(self, s) -> UniPoly:
        """p(s*x)."""
        out, pw = [], Fraction(1)
        for c in self.coeffs:
            out.append(c * pw)
            pw = pw * s
        return UniPoly(out)

    def reverse(self, n: int | None = None) -> UniPoly:
        """``x^n p(1/x)``; ``n`` defaults to the degree."""
        if n is None:
            n = self.degree
        cs = list(self.coeffs) + [Fraction(0)] * (n + 1 - len(self.coeffs))
        return UniPoly(cs[::-1])

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        inv = 1 / self.lc()
        return UniPoly([c * inv for c in self.coeffs])

    # -- integer content --------------------------------------------------
    def primitive(self) -> UniPoly:
        """Integer primitive part with positive leading coefficient (rational input)."""
        if self.is_zero():
            return self
        den = reduce(lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        return UniPoly([x // g for x in ints])

    def trailing_zeros(self) -> int:
        for i, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return i
        return 0

    def shift_down(self, k: int) -> UniPoly:
        return UniPoly(self.coeffs[k:])

    # -- display ----------------------------------------------------------
    def to_text(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if _is_zero(c):
                continue
            if i == 0:
                mono = ""
            elif i == 1:
                mono = var
            else:
                mono = f"{var}^{i}"
            text = c.to_text() if hasattr(c, "to_text") else str(c)
            negative = not text.startswith("(") and text.startswith("-")
            mag = text[1:] if negative else text
            if mono and mag == "1":
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = mag
            parts.append(("-" if negative else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"UniPoly({self.to_text()})"

    __str__ = to_text


# ---------------------------------------------------------------------------
# gcd, squarefree decomposition, resultants
# ---------------------------------------------------------------------------

def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over the coefficient field (Euclid)."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    if p.degree <= 0:
        return p.monic()
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g).monic()


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: monic pairwise coprime squarefree ``(factor, multiplicity)``."""
    if p.degree <= 0:
        return []
    out = []
    a = p.monic()
    b = a.derivative()
    c = poly_gcd(a, b)
    w = a.exact_div(c)
    y = b.exact_div(c)
    z = y - w.derivative()
    i = 1
    while w.degree > 0:
        g = poly_gcd(w, z)
        if g.degree > 0:
            out.append((g, i))
        w = w.exact_div(g)
        y = z.exact_div(g)
        z = y - w.derivative()
        i += 1
    return out


def resultant(p: UniPoly, q: UniPoly):
    """Res(p, q) over the coefficient field, via the Euclidean remainder recurrence."""
    if p.is_zero() or q.is_zero():
        return Fraction(0)
    m, n = p.degree, q.degree
    if m == 0:
        return p.lc() ** n
    if n == 0:
        return q.lc() ** m
    r = p % q
    if r.is_zero():
        return Fraction(0)
    sign = -1 if (m * n) % 2 else 1
    k = r.degree
    return sign * q.lc() ** (m - k) * resultant(q, r)


def rational_roots(p: UniPoly) -> list[Fraction]:
    """All distinct rational roots of a polynomial with rational coefficients."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    roots = []
    k = p.trailing_zeros()
    if k:
        roots.append(Fraction(0))
    q = p.shift_down(k).primitive()
    if q.degree <= 0:
        return roots
    a0, an = abs(q.int_coeffs()[0]), abs(q.int_coeffs()[-1])
    for num in _divisors(a0):
        for den in _divisors(an):
            for s in (1, -1):
                r = Fraction(s * num, den)
                if r not in roots and q(r) == 0:
                    roots.append(r)
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def is_reciprocal(p: UniPoly) -> bool:
    """``x^deg p(1/x) == +-p(x)``."""
    if p.is_zero():
        return False
    r = p.reverse()
    return r == p or r == -p


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> UniPoly:
    """The n-th cyclotomic polynomial (cached; UniPoly is immutable)."""
    p = UniPoly.monomial(n) - 1
    for d in range(1, n):
        if n % d == 0:
            p = p.exact_div(cyclotomic(d))
    return p


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def parse_coefficients(text: str, constant_first: bool = False) -> UniPoly:
    """Parse ``"1,-1,0,-1"`` (highest degree first unless ``constant_first``)."""
    parts = [Fraction(s.strip()) for s in text.split(",") if s.strip()]
    if not parts:
        raise ValueError("empty coefficient list")
    return UniPoly(parts) if constant_first else UniPoly(parts[::-1])
