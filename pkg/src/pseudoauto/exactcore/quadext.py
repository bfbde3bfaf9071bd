"""Elements of a quadratic field Q(sqrt(d)) with exact rational parts."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational as _RationalABC


def squarefree_part(n: int) -> tuple[int, int]:
    """Return ``(d, k)`` with ``n == k*k*d`` and ``d`` squarefree (sign kept in ``d``)."""
    if n == 0:
        raise ValueError("zero has no squarefree part")
    sign = -1 if n < 0 else 1
    m = abs(n)
    k = 1
    d = 1
    p = 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        k *= p ** (e // 2)
        if e % 2:
            d *= p
        p += 1
    d *= m
    return sign * d, k


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


class QuadExt:
    """``re + im*sqrt(disc)`` with rational ``re``, ``im``.

    ``disc`` is a squarefree integer other than 0 and 1.  Elements with
    ``im == 0`` are plain rationals and interoperate with any field, so
    ``QuadExt(3, 0, -7) == QuadExt(3, 0, 5) == 3``.
    """

    __slots__ = ("re", "im", "disc")

    def __init__(self, re=0, im=0, disc: int = -1):
        if disc in (0, 1):
            raise ValueError("disc must be squarefree and not 0 or 1")
        self.re = _frac(re)
        self.im = _frac(im)
        self.disc = disc

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other) -> QuadExt | None:
        if isinstance(other, QuadExt):
            if other.disc != self.disc and other.im and self.im:
                raise ValueError(
                    f"mixing Q(sqrt({self.disc})) and Q(sqrt({other.disc}))")
            return other
        if isinstance(other, (int, Fraction, _RationalABC)):
            return QuadExt(other, 0, self.disc)
        return None

    def _field(self, other: QuadExt) -> int:
        if self.im:
            return self.disc
        return other.disc

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.re + o.re, self.im + o.im, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.re, -self.im, self.disc)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.re - o.re, self.im - o.im, self._field(o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._field(o)
        return QuadExt(self.re * o.re + d * self.im * o.im,
                       self.re * o.im + self.im * o.re, d)

    __rmul__ = __mul__

    def conjugate(self) -> QuadExt:
        return QuadExt(self.re, -self.im, self.disc)

    def norm(self) -> Fraction:
        return self.re * self.re - self.disc * self.im * self.im

    def trace(self) -> Fraction:
        return 2 * self.re

    def inverse(self) -> QuadExt:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QuadExt division by zero")
        return QuadExt(self.re / n, -self.im / n, self.disc)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExt(1, 0, self.disc)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- predicates / comparison ------------------------------------------
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return self.im == 0

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if self.im == 0 and other.im == 0:
                return self.re == other.re
            return (self.disc == other.disc and self.re == other.re
                    and self.im == other.im)
        if isinstance(other, (int, Fraction, _RationalABC)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im, self.disc))

    def sign(self) -> int:
        """Exact sign of the real number ``re + im*sqrt(d)`` (requires d > 0)."""
        if self.disc < 0 and self.im:
            raise ValueError("sign is undefined for a non-real element")
        x, y = self.re, self.im
        sx = (x > 0) - (x < 0)
        sy = (y > 0) - (y < 0)
        if sy == 0:
            return sx
        if sx == 0 or sx == sy:
            return sy
        # opposite signs: compare x^2 with d*y^2
        lhs, rhs = x * x, self.disc * y * y
        if lhs == rhs:
            return 0
        return sx if lhs > rhs else sy

    # -- conversion -------------------------------------------------------
    def __complex__(self):
        if self.disc > 0:
            return complex(float(self.re) + float(self.im) * self.disc ** 0.5)
        return complex(float(self.re), float(self.im) * (-self.disc) ** 0.5)

    def __float__(self):
        if self.disc < 0 and self.im:
            raise TypeError("non-real element")
        return complex(self).real

    def __repr__(self):
        return f"QuadExt({self.re}, {self.im}, {self.disc})"

    def to_text(self) -> str:
        """Canonical text form, with ``w`` standing for sqrt(disc)."""
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*w"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}*w)"

    __str__ = to_text


def sqrt_in(disc: int, value: int | Fraction = None) -> QuadExt:
    """Return sqrt(value) as an element of Q(sqrt(disc)); defaults to the generator."""
    if value is None:
        return QuadExt(0, 1, disc)
    value = Fraction(value)
    num_d, num_k = squarefree_part(value.numerator * value.denominator)
    if num_d == 1:
        return QuadExt(Fraction(num_k, value.denominator), 0, disc)
    if num_d != disc:
        raise ValueError(f"sqrt({value}) is not in Q(sqrt({disc}))")
    return QuadExt(0, Fraction(num_k, value.denominator), disc)


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _rational_sqrt(q: Fraction) -> Fraction | None:
    q = Fraction(q)
    if q < 0 or not is_square(q.numerator) or not is_square(q.denominator):
        return None
    return Fraction(isqrt(q.numerator), isqrt(q.denominator))


def sqrt_field(z, disc: int) -> QuadExt | None:
    """A square root of ``z`` inside Q(sqrt(disc)), or None if there is none."""
    z = z if isinstance(z, QuadExt) else QuadExt(z, 0, disc)
    x, y = z.re, z.im
    if y == 0:
        r = _rational_sqrt(x)
        if r is not None:
            return QuadExt(r, 0, disc)
        r = _rational_sqrt(x / disc)
        return None if r is None else QuadExt(0, r, disc)
    # (p + q*w)^2 = x + y*w  gives  p^2 = (x +- sqrt(norm)) / 2,  q = y / (2p)
    n = _rational_sqrt(z.norm())
    if n is None:
        return None
    for p2 in ((x + n) / 2, (x - n) / 2):
        p = _rational_sqrt(p2)
        if p:
            return QuadExt(p, y / (2 * p), disc)
    return None


def quad_field_for_ell(ell: int) -> tuple[QuadExt, QuadExt, int]:
    """Parameters ``(a, c, disc)`` with ``c = 1`` solving ``l*a^2 + (l+1)*a*c + l*c^2 = 0``.

    ``a = (-(l+1) + sqrt(delta)) / (2l)`` with ``delta = -3l^2 + 2l + 1``; the
    ``+`` branch of the square root is used and ``disc`` is the squarefree
    part of ``delta``.
    """
    if not isinstance(ell, int) or ell < 2:
        raise ValueError(
            f"ell must be an integer >= 2 (got {ell!r}); delta_ell = "
            f"-3*ell^2 + 2*ell + 1 is >= 0 there, so a/c would be real "
            f"(for ell = 1, delta_1 = 0 and the field degenerates)")
    delta = -3 * ell * ell + 2 * ell + 1
    disc, k = squarefree_part(delta)
    a = QuadExt(Fraction(-(ell + 1), 2 * ell), Fraction(k, 2 * ell), disc)
    c = QuadExt(1, 0, disc)
    return a, c, disc


def ell_relation(ell: int, a, c):
    """``l*a^2 + (l+1)*a*c + l*c^2``, exactly."""
    return ell * a * a + (ell + 1) * a * c + ell * c * c
