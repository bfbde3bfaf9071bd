"""Small dense integer matrices with exact determinant, rank, kernel and charpoly."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .unipoly import UniPoly


class IntMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = [tuple(int(x) for x in r) for r in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix must be non-empty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        self.entries = tuple(rows)
        self.rows = len(rows)
        self.cols = width

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> IntMatrix:
        return cls([[0] * c for _ in range(r)])

    @classmethod
    def from_columns(cls, columns) -> IntMatrix:
        cols = [list(c) for c in columns]
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))])

    @classmethod
    def companion(cls, p: UniPoly) -> IntMatrix:
        """Companion matrix of a monic integer polynomial (charpoly equals ``p``)."""
        cs = p.int_coeffs()
        if cs[-1] != 1:
            raise ValueError("companion matrix needs a monic polynomial")
        n = p.degree
        m = [[0] * n for _ in range(n)]
        for i in range(1, n):
            m[i][i - 1] = 1
        for i in range(n):
            m[i][n - 1] = -cs[i]
        return cls(m)

    # -- access -----------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> list[int]:
        return [r[j] for r in self.entries]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"IntMatrix({self.to_lists()})"

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._same_shape(other)
        return IntMatrix([[a + b for a, b in zip(r, s)]
                          for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._same_shape(other)
        return IntMatrix([[a - b for a, b in zip(r, s)]
                          for r, s in zip(self.entries, other.entries)])

    def __neg__(self):
        return IntMatrix([[-a for a in r] for r in self.entries])

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def scale(self, k: int) -> IntMatrix:
        return IntMatrix([[k * a for a in r] for r in self.entries])

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.rows}x{self.cols} "
                                 f"by {other.rows}x{other.cols}")
            cols = list(zip(*other.entries))
            return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols]
                              for r in self.entries])
        return NotImplemented

    __rmul__ = scale

    def apply(self, vec) -> list:
        """Matrix times a column vector (entries may be any ring elements)."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for r in self.entries:
            acc = 0
            for a, v in zip(r, vec):
                if a:
                    acc = acc + a * v
            out.append(acc)
        return out

    def __pow__(self, n: int) -> IntMatrix:
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        if n < 0:
            raise ValueError("negative power; use the inverse action")
        result = IntMatrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def transpose(self) -> IntMatrix:
        return IntMatrix(list(zip(*self.entries)))

    def is_identity(self) -> bool:
        return self.is_square() and self == IntMatrix.identity(self.rows)

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.entries for a in r)

    # -- exact linear algebra ---------------------------------------------
    def det(self) -> int:
        """Bareiss fraction-free elimination."""
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        a = self.to_lists()
        n = self.rows
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def _rref(self):
        m = [[Fraction(x) for x in r] for r in self.entries]
        pivots = []
        row = 0
        for col in range(self.cols):
            piv = next((i for i in range(row, self.rows) if m[i][col] != 0), None)
            if piv is None:
                continue
            m[row], m[piv] = m[piv], m[row]
            inv = 1 / m[row][col]
            m[row] = [x * inv for x in m[row]]
            for i in range(self.rows):
                if i != row and m[i][col] != 0:
                    f = m[i][col]
                    m[i] = [x - f * y for x, y in zip(m[i], m[row])]
            pivots.append(col)
            row += 1
            if row == self.rows:
                break
        return m, pivots

    def rank(self) -> int:
        return len(self._rref()[1])

    def kernel(self) -> list[list[int]]:
        """Basis of the rational kernel, each vector scaled to a primitive integer vector."""
        m, pivots = self._rref()
        free = [j for j in range(self.cols) if j not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -m[r][f]
            den = reduce(lcm, (x.denominator for x in v), 1)
            ints = [int(x * den) for x in v]
            g = reduce(gcd, ints, 0)
            basis.append([x // g for x in ints])
        return basis

    def charpoly(self) -> UniPoly:
        """det(x*I - M) by Berkowitz's division-free algorithm."""
        if not self.is_square():
            raise ValueError("characteristic polynomial of a non-square matrix")
        a = self.entries
        n = self.rows
        # vect holds coefficients highest degree first
        vect = [1, -a[0][0]]
        for r in range(1, n):
            # partition: R = a[r][0:r], C = a[0:r][r], A = leading r x r block
            row_r = a[r][:r]
            col_c = [a[i][r] for i in range(r)]
            # toeplitz entries: 1, -a_rr, -R C, -R A C, -R A^2 C, ...
            t = [1, -a[r][r]]
            vec = col_c
            for _ in range(r):
                t.append(-sum(x * y for x, y in zip(row_r, vec)))
                vec = [sum(a[i][j] * vec[j] for j in range(r)) for i in range(r)]
            new = []
            for i in range(r + 2):
                new.append(sum(t[i - j] * vect[j] for j in range(min(i, r) + 1)
                               if 0 <= i - j < len(t)))
            vect = new
        return UniPoly(vect[::-1])

    def horner_eval(self, p: UniPoly) -> IntMatrix:
        """p(M) by Horner's rule (integer polynomial)."""
        if not self.is_square():
            raise ValueError("non-square matrix")
        n = self.rows
        acc = IntMatrix.zeros(n, n)
        eye = IntMatrix.identity(n)
        for c in reversed(p.int_coeffs()):
            acc = acc * self + eye.scale(c)
        return acc
