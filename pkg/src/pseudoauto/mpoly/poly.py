"""Sparse multivariate polynomials over Q or Q(sqrt d).

Terms are kept in a dict mapping exponent tuples to nonzero coefficients.
Coefficients are ``Fraction`` or ``QuadExt``; products go through an
integer-pair fast path since that is where almost all the time is spent.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from math import lcm

from ..exactcore.quadext import QuadExt
from ..exactcore.modp import interpolate_mod
from ..exactcore.unipoly import UniPoly

_FIELD = 16
_MASK = (1 << _FIELD) - 1


def _coeff(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


def _parts(c):
    if isinstance(c, QuadExt):
        return c.re, c.im, (c.disc if c.im else None)
    return Fraction(c), Fraction(0), None


def _to_pairs(terms):
    """-> (disc, den, {exp: (A, B)}) with coefficient = (A + B*w)/den."""
    disc = None
    den = 1
    split = []
    for e, c in terms.items():
        r, i, d = _parts(c)
        if d is not None:
            disc = d
        den = lcm(den, r.denominator, i.denominator)
        split.append((e, r, i))
    pairs = {}
    for e, r, i in split:
        pairs[e] = (r.numerator * (den // r.denominator),
                    i.numerator * (den // i.denominator))
    return disc, den, pairs


def _from_pair(a, b, den, disc):
    if disc is None or b == 0:
        return Fraction(a, den)
    return QuadExt(Fraction(a, den), Fraction(b, den), disc)


def _pack(e):
    k = 0
    for x in e:
        k = (k << _FIELD) | x
    return k


def _unpack(k, n):
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = k & _MASK
        k >>= _FIELD
    return tuple(out)


def _grlex_key(e):
    return (sum(e), e)


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars:
                    raise ValueError("exponent length does not match nvars")
                if c != 0:
                    clean[e] = _coeff(c)
        self.terms = clean

    # -- constructors -----------------------------------------------------
    @classmethod
    def var(cls, i: int, nvars: int) -> MultiPoly:
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def const(cls, c, nvars: int) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def gens(cls, nvars: int) -> list[MultiPoly]:
        return [cls.var(i, nvars) for i in range(nvars)]

    # -- properties -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def leading(self):
        """(exponent, coefficient) of the grlex-largest term."""
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def lc(self):
        return self.leading()[1]

    def variables(self) -> list[int]:
        return [i for i in range(self.nvars) if any(e[i] for e in self.terms)]

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, QuadExt)):
            return self == MultiPoly.const(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- arithmetic -------------------------------------------------------
    def _wrap(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("nvars mismatch")
            return other
        return MultiPoly.const(other, self.nvars)

    def __add__(self, other):
        o = self._wrap(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                s = v + c
                if s == 0:
                    del out[e]
                else:
                    out[e] = s
        return _raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return _raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def scale(self, k) -> MultiPoly:
        if k == 0:
            return MultiPoly(self.nvars)
        return _raw(self.nvars, {e: c * k for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(_coeff(other))
        if other.nvars != self.nvars:
            raise ValueError("nvars mismatch")
        if not self.terms or not other.terms:
            return MultiPoly(self.nvars)
        d1, n1, p1 = _to_pairs(self.terms)
        d2, n2, p2 = _to_pairs(other.terms)
        disc = d1 if d1 is not None else d2
        if d1 is not None and d2 is not None and d1 != d2:
            raise ValueError("mixing quadratic fields")
        w = disc or 0
        q1 = [(_pack(e), a, b) for e, (a, b) in p1.items()]
        q2 = [(_pack(e), a, b) for e, (a, b) in p2.items()]
        acc = {}
        get = acc.get
        if w:
            for k1, a1, b1 in q1:
                for k2, a2, b2 in q2:
                    k = k1 + k2
                    cur = get(k)
                    ra = a1 * a2 + w * b1 * b2
                    rb = a1 * b2 + a2 * b1
                    if cur is None:
                        acc[k] = [ra, rb]
                    else:
                        cur[0] += ra
                        cur[1] += rb
        else:
            for k1, a1, _ in q1:
                for k2, a2, _ in q2:
                    k = k1 + k2
                    acc[k] = get(k, 0) + a1 * a2
            acc = {k: [v, 0] for k, v in acc.items()}
        den = n1 * n2
        n = self.nvars
        out = {}
        for k, (a, b) in acc.items():
            if a or b:
                out[_unpack(k, n)] = _from_pair(a, b, den, disc)
        return _raw(n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- division ---------------------------------------------------------
    def divmod_exact(self, other: MultiPoly):
        """Division by a single divisor on grlex leading terms; returns ``(q, r)``.

        ``r`` is zero iff ``other`` divides ``self``.  The loop stops at the
        first leading term that is not divisible, so a nonzero ``r`` is only
        a witness of non-divisibility, not the full remainder.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        n = self.nvars
        le, lcf = other.leading()
        inv = 1 / lcf if not isinstance(lcf, Fraction) else Fraction(1) / lcf
        rem = dict(self.terms)
        heap = [(-sum(e), tuple(-x for x in e)) for e in rem]
        heapq.heapify(heap)
        quot = {}
        oterms = list(other.terms.items())
        while heap:
            _, ne = heapq.heappop(heap)
            e = tuple(-x for x in ne)
            c = rem.get(e)
            if c is None:
                continue
            if any(a < b for a, b in zip(e, le)):
                return _raw(n, quot), _raw(n, rem)
            qe = tuple(a - b for a, b in zip(e, le))
            qc = c * inv
            quot[qe] = qc
            for oe, oc in oterms:
                te = tuple(a + b for a, b in zip(qe, oe))
                v = rem.get(te)
                delta = qc * oc
                if v is None:
                    rem[te] = -delta
                    heapq.heappush(heap, (-sum(te), tuple(-x for x in te)))
                else:
                    s = v - delta
                    if s == 0:
                        del rem[te]
                    else:
                        rem[te] = s
        return _raw(n, quot), _raw(n, rem)

    def exact_div(self, other: MultiPoly) -> MultiPoly:
        q, r = self.divmod_exact(other)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    def try_div(self, other: MultiPoly):
        q, r = self.divmod_exact(other)
        return None if r else q

    def __truediv__(self, k):
        if isinstance(k, MultiPoly):
            return self.exact_div(k)
        return self.scale(1 / _coeff(k))

    # -- substitution / evaluation ----------------------------------------
    def __call__(self, *point):
        return self.evaluate(point)

    def evaluate(self, point):
        """Evaluate at a point whose entries lie in any commutative ring."""
        if len(point) != self.nvars:
            raise ValueError("point has wrong length")
        powers = [dict() for _ in range(self.nvars)]

        def pw(i, k):
            if k == 0:
                return 1
            cache = powers[i]
            v = cache.get(k)
            if v is None:
                v = point[i] if k == 1 else pw(i, k - 1) * point[i]
                cache[k] = v
            return v

        acc = 0
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            acc = term + acc
        return acc

    def substitute(self, images, nvars_out: int | None = None) -> MultiPoly:
        """Replace ``x_i`` by the polynomial ``images[i]``."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        if nvars_out is None:
            nvars_out = images[0].nvars
        cache = [dict() for _ in images]

        def pw(i, k):
            c = cache[i]
            if k not in c:
                if k == 0:
                    c[k] = MultiPoly.const(1, nvars_out)
                elif k == 1:
                    c[k] = images[i]
                else:
                    half = pw(i, k // 2)
                    c[k] = half * half if k % 2 == 0 else half * half * images[i]
            return c[k]

        acc = MultiPoly(nvars_out)
        for e, c in self.terms.items():
            term = MultiPoly.const(c, nvars_out)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            acc = acc + term
        return acc

    def set_var(self, i: int, value) -> MultiPoly:
        """Substitute a constant for ``x_i`` (the variable stays, with exponent 0)."""
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            ne = e[:i] + (0,) + e[i + 1:]
            v = c * (value ** k) if k else c
            if v == 0:
                continue
            s = out.get(ne)
            out[ne] = v if s is None else s + v
        return MultiPoly(self.nvars, out)

    def drop_var(self, i: int) -> MultiPoly:
        """Remove variable ``i`` (which must not occur)."""
        if any(e[i] for e in self.terms):
            raise ValueError(f"variable {i} still occurs")
        return _raw(self.nvars - 1, {e[:i] + e[i + 1:]: c for e, c in self.terms.items()})

    def insert_var(self, i: int) -> MultiPoly:
        """Add a new variable at position ``i`` not occurring in the polynomial."""
        return _raw(self.nvars + 1, {e[:i] + (0,) + e[i:]: c for e, c in self.terms.items()})

    def diff(self, i: int) -> MultiPoly:
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                out[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return _raw(self.nvars, out)

    def restrict_to_line(self, p0, p1) -> UniPoly:
        """``t -> P(p0 + t*p1)`` as a univariate polynomial (exact)."""
        d = self.degree()
        if d < 0:
            return UniPoly()
        ts = list(range(d + 1))
        if all(isinstance(v, int) for v in list(p0) + list(p1)):
            cache = _to_pairs(self.terms)
            values = [fast_eval_int(self, [a + t * b for a, b in zip(p0, p1)], cache)
                      for t in ts]
        else:
            values = [self.evaluate([a + t * b for a, b in zip(p0, p1)]) for t in ts]
        return interpolate(ts, values)

    def field_disc(self) -> int | None:
        for c in self.terms.values():
            if isinstance(c, QuadExt) and c.im != 0:
                return c.disc
        return None

    def reduce_mod(self, red) -> dict:
        """Coefficients mapped into F_p by the reduction ``red``."""
        out = {}
        for e, c in self.terms.items():
            v = red(c)
            if v:
                out[e] = v
        return out

    def restrict_to_line_mod(self, red, p0, p1, reduced=None) -> list[int]:
        """Reduction mod p of ``t -> P(p0 + t*p1)`` (integer line), as a coefficient list."""
        d = self.degree()
        if d < 0:
            return []
        terms = self.reduce_mod(red) if reduced is None else reduced
        p = red.p
        ts = list(range(d + 1))
        vals = [eval_mod(terms, [(a + t * b) % p for a, b in zip(p0, p1)], p, self.nvars)
                for t in ts]
        return interpolate_mod(ts, vals, p)

    def monic(self) -> MultiPoly:
        if self.is_zero():
            return self
        return self.scale(1 / self.lc())

    # -- text -------------------------------------------------------------
    def to_text(self, names=None) -> str:
        if self.is_zero():
            return "0"
        names = names or [f"x{i}" for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                (names[i] if k == 1 else f"{names[i]}^{k}")
                for i, k in enumerate(e) if k)
            text = c.to_text() if isinstance(c, QuadExt) else str(c)
            negative = text.startswith("-")
            mag = text[1:] if negative else text
            if mono:
                body = mono if mag == "1" else f"{mag}*{mono}"
            else:
                body = mag
            parts.append(("-" if negative else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({self.to_text()})"

    __str__ = to_text


def _raw(nvars, terms) -> MultiPoly:
    p = MultiPoly.__new__(MultiPoly)
    p.nvars = nvars
    p.terms = terms
    return p


def eval_mod(terms: dict, point, p: int, nvars: int) -> int:
    maxk = [0] * nvars
    for e in terms:
        for i, k in enumerate(e):
            if k > maxk[i]:
                maxk[i] = k
    pows = []
    for i in range(nvars):
        row = [1]
        x = point[i]
        for _ in range(maxk[i]):
            row.append(row[-1] * x % p)
        pows.append(row)
    acc = 0
    for e, c in terms.items():
        m = c
        for i, k in enumerate(e):
            if k:
                m = m * pows[i][k] % p
        acc += m
    return acc % p


def interpolate(xs, ys) -> UniPoly:
    """Newton interpolation through ``(xs[i], ys[i])``."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = UniPoly([coef[-1]])
    for i in range(n - 2, -1, -1):
        p = p * UniPoly([-xs[i], 1]) + coef[i]
    return p


# ---------------------------------------------------------------------------
# text parser
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_]\w*)|(.))")


def parse_poly(text: str, names, disc: int | None = None) -> MultiPoly:
    """Parse the canonical text form (``w`` denotes sqrt(disc))."""
    names = list(names)
    nvars = len(names)
    tokens = []
    for num, ident, op in _TOKEN.findall(text):
        if num:
            tokens.append(("num", Fraction(num)))
        elif ident:
            tokens.append(("id", ident))
        elif op.strip():
            tokens.append(("op", op))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def atom():
        kind, val = peek()
        if kind == "num":
            take()
            return MultiPoly.const(val, nvars)
        if kind == "id":
            take()
            if val == "w":
                if disc is None:
                    raise ValueError("'w' used without a field discriminant")
                base = MultiPoly.const(QuadExt(0, 1, disc), nvars)
            elif val in names:
                base = MultiPoly.var(names.index(val), nvars)
            else:
                raise ValueError(f"unknown symbol {val!r}")
            if peek() == ("op", "^"):
                take()
                _, k = take()
                base = base ** int(k)
            return base
        if (kind, val) == ("op", "("):
            take()
            inner = expr()
            if take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return inner
        if (kind, val) == ("op", "-"):
            take()
            return -atom()
        raise ValueError(f"unexpected token {val!r}")

    def term():
        acc = atom()
        while peek() in (("op", "*"), ("op", "/")):
            _, op = take()
            rhs = atom()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant():
                    raise ValueError("division by a non-constant")
                acc = acc.scale(1 / rhs.constant_value())
        return acc

    def expr():
        if peek() == ("op", "-"):
            take()
            acc = -term()
        else:
            acc = term()
        while peek() in (("op", "+"), ("op", "-")):
            _, op = take()
            rhs = term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    result = expr()
    if pos != len(tokens):
        raise ValueError("trailing input")
    return result


def common_denominator_ints(p: MultiPoly):
    """Integer-pair view used by fast evaluation: ``(disc, den, pairs)``."""
    return _to_pairs(p.terms)


def fast_eval_int(p: MultiPoly, point_ints, cache=None):
    """Exact value at an integer point, returned as a field element."""
    disc, den, pairs = _to_pairs(p.terms) if cache is None else cache
    n = p.nvars
    pows = [[1] for _ in range(n)]
    maxk = [0] * n
    for e in pairs:
        for i, k in enumerate(e):
            if k > maxk[i]:
                maxk[i] = k
    for i in range(n):
        x = point_ints[i]
        row = pows[i]
        for _ in range(maxk[i]):
            row.append(row[-1] * x)
    sa = sb = 0
    for e, (a, b) in pairs.items():
        m = 1
        for i, k in enumerate(e):
            if k:
                m *= pows[i][k]
        sa += a * m
        sb += b * m
    return _from_pair(sa, sb, den, disc)
