"""Exact real-root counting and isolation, and Schur-Cohn disk counts."""

from __future__ import annotations

from fractions import Fraction

from .unipoly import UniPoly, squarefree_part


class RootAtEndpoint(ValueError):
    """An interval endpoint is a root; perturb it by an exact rational."""


class UnitCircleRoot(ArithmeticError):
    """A Schur-Cohn step degenerated, signalling a root on (or paired across) the unit circle."""


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return [s for s in seq if not s.is_zero()]


def _changes(signs) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _changes_at(seq, x) -> int:
    return _changes(_sign(s(x)) for s in seq)


def _changes_at_inf(seq, positive: bool) -> int:
    out = []
    for s in seq:
        sg = _sign(s.lc())
        if not positive and s.degree % 2:
            sg = -sg
        out.append(sg)
    return _changes(out)


def sturm_count(p: UniPoly, lo=None, hi=None, seq=None) -> int:
    """Number of distinct real roots of ``p`` in the open interval ``(lo, hi)``.

    ``None`` stands for an infinite endpoint.  Finite endpoints must not be
    roots of ``p``.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    if lo is not None:
        lo = Fraction(lo)
        if p(lo) == 0:
            raise RootAtEndpoint(f"{lo} is a root")
    if hi is not None:
        hi = Fraction(hi)
        if p(hi) == 0:
            raise RootAtEndpoint(f"{hi} is a root")
    if lo is not None and hi is not None and not lo < hi:
        raise ValueError("need lo < hi")
    if p.degree <= 0:
        return 0
    seq = seq or sturm_sequence(p)
    v_lo = _changes_at_inf(seq, False) if lo is None else _changes_at(seq, lo)
    v_hi = _changes_at_inf(seq, True) if hi is None else _changes_at(seq, hi)
    return v_lo - v_hi


def cauchy_bound(p: UniPoly) -> Fraction:
    """All complex roots satisfy ``|z| < bound``."""
    lc = abs(p.lc())
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


def isolate_real_roots(p: UniPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open intervals with rational endpoints, one per distinct real root.

    A rational root ``r`` is returned as the degenerate interval ``(r, r)``.
    """
    q = squarefree_part(p)
    if q.degree <= 0:
        return []
    seq = sturm_sequence(q)
    b = cauchy_bound(q)
    out = []
    stack = [(-b, b)]
    while stack:
        lo, hi = stack.pop()
        n = sturm_count(q, lo, hi, seq)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if q(mid) == 0:
            out.append((mid, mid))
            # shrink around the rational root so the halves exclude it
            eps = (hi - lo) / 4
            while (q(mid - eps) == 0 or q(mid + eps) == 0
                   or sturm_count(q, mid - eps, mid + eps, seq) != 1):
                eps /= 2
            stack.append((lo, mid - eps))
            stack.append((mid + eps, hi))
        else:
            stack.append((lo, mid))
            stack.append((mid, hi))
    out.sort()
    return out


def refine_root(p: UniPoly, lo: Fraction, hi: Fraction, eps) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval of a squarefree ``p`` until its width is < eps."""
    lo, hi, eps = Fraction(lo), Fraction(hi), Fraction(eps)
    if lo == hi:
        return lo, hi
    s_lo = _sign(p(lo))
    if s_lo == 0 or _sign(p(hi)) == 0 or s_lo == _sign(p(hi)):
        raise ValueError("interval does not bracket a sign change")
    while hi - lo >= eps:
        mid = (lo + hi) / 2
        s = _sign(p(mid))
        if s == 0:
            return mid, mid
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def real_roots_approx(p: UniPoly, eps=Fraction(1, 10**12)) -> list[tuple[Fraction, Fraction]]:
    """Isolate then refine every real root to width < eps."""
    q = squarefree_part(p)
    out = []
    for lo, hi in isolate_real_roots(q):
        if lo == hi:
            out.append((lo, hi))
            continue
        # make sure the isolating interval brackets a sign change
        out.append(refine_root(q, lo, hi, eps))
    return out


def cauchy_index(num: UniPoly, den: UniPoly) -> int:
    """Cauchy index of ``num/den`` over the whole real line (``deg num < deg den``)."""
    seq = [den, num]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    seq = [s for s in seq if not s.is_zero()]
    return _changes_at_inf(seq, False) - _changes_at_inf(seq, True)


def _to_half_plane(p: UniPoly) -> UniPoly:
    """``(1-w)^n p((1+w)/(1-w))``: the open unit disk goes to ``Re w < 0``."""
    n = p.degree
    one_plus, one_minus = UniPoly([1, 1]), UniPoly([1, -1])
    out = UniPoly()
    for k, c in enumerate(p.coeffs):
        if c != 0:
            out = out + one_plus ** k * one_minus ** (n - k) * c
    return out


def right_half_plane_count(r: UniPoly) -> int:
    """Roots of a real polynomial with ``Re w > 0`` (Routh-Hurwitz via a Cauchy index).

    Raises ``UnitCircleRoot`` if some root lies on the imaginary axis (the
    image of the unit circle under the Moebius map used by the caller).
    """
    n = r.degree
    if r.lc() < 0:
        r = -r
    h = UniPoly([(-1) ** ((n - k) // 2) * r[k] if (n - k) % 2 == 0 else 0
                 for k in range(n + 1)])
    g = UniPoly([(-1) ** ((n - 1 - k) // 2) * r[k] if (n - 1 - k) % 2 == 0 else 0
                 for k in range(n)])
    common = h
    b = g
    while not b.is_zero():
        common, b = b, common % b
    if common.degree > 0 and sturm_count(squarefree_part(common)) > 0:
        raise UnitCircleRoot("root on the imaginary axis")
    if r[0] == 0:
        raise UnitCircleRoot("root at the origin of the half plane")
    ind = cauchy_index(g, h)
    return (n - ind) // 2


def _inside_by_half_plane(p: UniPoly) -> int:
    if p(1) == 0 or p(-1) == 0:
        raise UnitCircleRoot("root at +1 or -1")
    r = _to_half_plane(p)
    return r.degree - right_half_plane_count(r)


def schur_cohn_inside(p: UniPoly) -> int:
    """Number of roots (with multiplicity) strictly inside the unit disk.

    Uses the reduction ``q = a0*p - an*p_rev``: by Rouche, ``N(p) = N(q)`` when
    ``|a0| > |an|`` and ``N(p) = deg p - N(q)`` when ``|an| > |a0|``.  When the
    step degenerates (``|a0| == |an|``, e.g. every unimodular polynomial) the
    current polynomial is counted through the Moebius map to the left half
    plane instead.  ``UnitCircleRoot`` is raised only for a genuine root on
    the unit circle.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    k = p.trailing_zeros()
    if k:
        return k + schur_cohn_inside(p.shift_down(k))
    n = p.degree
    if n == 0:
        return 0
    a0, an = p[0], p.lc()
    m0, mn = abs(a0), abs(an)
    if m0 == mn:
        return _inside_by_half_plane(p)
    q = p * a0 - p.reverse() * an
    inner = schur_cohn_inside(q)
    return inner if m0 > mn else n - inner
