"""Named Picard bases, divisor classes and integer pullback actions."""

from __future__ import annotations

from dataclasses import dataclass

from ..exactcore.intmatrix import IntMatrix


@dataclass(frozen=True)
class Basis:
    name: str
    ell: int
    labels: tuple

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def combo(self, terms: dict) -> list[int]:
        """Integer vector from ``{label: coefficient}``."""
        v = [0] * self.dim
        for k, x in terms.items():
            v[self.index(k)] += x
        return v


def basis_x(ell: int) -> Basis:
    """H, E1^, E2, E3^, P1 .. P_(4l+1): dimension 4l+5."""
    if ell < 1:
        raise ValueError("ell must be positive")
    return Basis("X", ell, ("H", "E1^", "E2", "E3^")
                 + tuple(f"P{j}" for j in range(1, 4 * ell + 2)))


def basis_w(ell: int) -> Basis:
    """L, E1, E2, E3, F1 .. F_l: dimension l+4, intersection form diag(1, -1, ..., -1)."""
    if ell < 1:
        raise ValueError("ell must be positive")
    return Basis("W", ell, ("L", "E1", "E2", "E3") + tuple(f"F{j}" for j in range(1, ell + 1)))


@dataclass(frozen=True)
class DivisorClass:
    basis: Basis
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.basis.dim:
            raise ValueError("coefficient vector does not match the basis")

    @classmethod
    def of(cls, basis: Basis, terms: dict) -> DivisorClass:
        return cls(basis, tuple(basis.combo(terms)))

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.basis, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.basis, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, k):
        return DivisorClass(self.basis, tuple(k * x for x in self.coeffs))

    def to_text(self) -> str:
        parts = []
        for lab, x in zip(self.basis.labels, self.coeffs):
            if x:
                parts.append(f"{x}*{lab}" if x != 1 else lab)
        return " + ".join(parts).replace("+ -", "- ") or "0"


def intersection(basis: Basis, u, v):
    """The form diag(1, -1, ..., -1) on Pic(W); entries may lie in any ring."""
    if basis.name != "W":
        raise ValueError("the intersection form is modelled only on W")
    u = u.coeffs if isinstance(u, DivisorClass) else u
    v = v.coeffs if isinstance(v, DivisorClass) else v
    total = u[0] * v[0]
    for x, y in zip(u[1:], v[1:]):
        total = total - x * y
    return total


@dataclass(frozen=True)
class LatticeAction:
    """Column j of ``matrix`` is the image of basis element j."""

    basis: Basis
    matrix: IntMatrix
    name: str = ""

    @classmethod
    def from_images(cls, basis: Basis, images: dict, name: str = "") -> LatticeAction:
        cols = [basis.combo(images[lab]) for lab in basis.labels]
        return cls(basis, IntMatrix.from_columns(cols), name)

    def __call__(self, cls_: DivisorClass) -> DivisorClass:
        return DivisorClass(self.basis, tuple(self.matrix.apply(list(cls_.coeffs))))

    def image(self, label: str) -> DivisorClass:
        return DivisorClass(self.basis, tuple(self.matrix.column(self.basis.index(label))))

    def charpoly(self):
        return self.matrix.charpoly()
