"""A complex structure on R^6 commuting with the companion matrix of an admissible sextic.

J acts as multiplication by i on the eigenvectors with Im(lambda) > 0 and by -i on their
conjugates, i.e. as a quarter rotation in each real invariant plane.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
import numpy as np

from ..exactcore.intmatrix import IntMatrix
from .sextic import ReciprocalSextic, admissible


@dataclass
class ComplexStructure:
    J: list[list[float]]
    residual_square: float
    residual_commute: float
    precision: str
    det_companion: int

    def ok(self, tol) -> bool:
        return self.residual_square < float(tol) and self.residual_commute < float(tol)

    def as_dict(self) -> dict:
        return {"J": self.J, "residual_J2_plus_I": self.residual_square,
                "residual_JM_minus_MJ": self.residual_commute, "precision": self.precision,
                "det_companion": self.det_companion}


def companion(s: ReciprocalSextic) -> IntMatrix:
    return IntMatrix.companion(s.poly)


def _residuals(J, M):
    n = M.shape[0]
    return (float(np.linalg.norm(J @ J + np.eye(n), 2)),
            float(np.linalg.norm(J @ M - M @ J, 2)))


def _numpy_J(M):
    w, V = np.linalg.eig(M)
    if np.min(np.abs(w.imag)) < 1e-8:
        raise ArithmeticError("real eigenvalue: no invariant complex structure of this form")
    D = np.diag(np.where(w.imag > 0, 1j, -1j))
    return (V @ D @ np.linalg.inv(V)).real


def _mpmath_J(M, dps=60):
    with mpmath.workdps(dps):
        A = mpmath.matrix(M.tolist())
        w, V = mpmath.eig(A)
        n = A.rows
        D = mpmath.diag([mpmath.mpc(0, 1) if mpmath.im(x) > 0 else mpmath.mpc(0, -1) for x in w])
        J = V * D * mpmath.inverse(V)
        return np.array([[float(mpmath.re(J[i, j])) for j in range(n)] for i in range(n)])


def complex_structure(s: ReciprocalSextic, tol=1e-9) -> ComplexStructure:
    if not admissible(s)[0]:
        raise ValueError(f"sextic {s.as_tuple()} is not admissible")
    C = companion(s)
    M = np.array(C.to_lists(), dtype=float)
    J = _numpy_J(M)
    r2, rc = _residuals(J, M)
    precision = "float64"
    if r2 >= float(tol) or rc >= float(tol):
        J = _mpmath_J(M)
        r2, rc = _residuals(J, M)
        precision = "mpmath-60"
    return ComplexStructure(J.tolist(), r2, rc, precision, C.det())
