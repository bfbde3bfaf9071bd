"""Rational functions num/den over Q or Q(sqrt d), in affine variables.

Equality is by cross-multiplication, so nothing here depends on a gcd;
``reduced()`` cancels the common factor on request.
"""

from __future__ import annotations

from fractions import Fraction

from ..exactcore.quadext import QuadExt
from .gcd import mgcd
from .poly import MultiPoly

_SCALARS = (int, Fraction, QuadExt)


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.const(1, num.nvars)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.nvars != den.nvars:
            raise ValueError("numerator and denominator live in different rings")
        if den.is_constant():
            num, den = num.scale(1 / den.constant_value()), MultiPoly.const(1, num.nvars)
        self.num = num
        self.den = den

    @property
    def nvars(self) -> int:
        return self.num.nvars

    @classmethod
    def var(cls, i: int, nvars: int) -> RatFunc:
        return cls(MultiPoly.var(i, nvars))

    @classmethod
    def const(cls, c, nvars: int) -> RatFunc:
        return cls(MultiPoly.const(c, nvars))

    def _wrap(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MultiPoly):
            return RatFunc(other)
        if isinstance(other, _SCALARS):
            return RatFunc.const(other, self.nvars)
        return None

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash(self.reduced().num)

    def is_constant(self) -> bool:
        r = self.reduced()
        return r.num.is_constant() and r.den.is_constant()

    def reduced(self) -> RatFunc:
        if self.num.is_zero():
            return RatFunc(self.num)
        g = mgcd(self.num, self.den)
        num, den = self.num, self.den
        if not g.is_constant():
            num, den = num.exact_div(g), den.exact_div(g)
        k = den.lc()
        return RatFunc(num.scale(1 / k), den.scale(1 / k))

    def evaluate(self, point):
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.evaluate(point) / d

    def diff(self, i: int) -> RatFunc:
        return RatFunc(self.num.diff(i) * self.den - self.num * self.den.diff(i),
                       self.den * self.den)

    def to_text(self, names=None) -> str:
        r = self.reduced()
        if r.den.is_constant():
            return r.num.to_text(names)
        return f"({r.num.to_text(names)})/({r.den.to_text(names)})"

    def __repr__(self):
        return f"RatFunc({self.to_text()})"


def substitute(p: MultiPoly, images) -> RatFunc:
    """``p(images)`` for rational-function images of each variable."""
    out = None
    for e, c in p.terms.items():
        term = None
        for img, k in zip(images, e):
            if k:
                f = img ** k
                term = f if term is None else term * f
        term = (term * c) if term is not None else c
        out = term if out is None else out + term
    if out is None:
        return RatFunc.const(0, images[0].nvars)
    return out if isinstance(out, RatFunc) else RatFunc.const(out, images[0].nvars)
