"""Exact arithmetic: rationals, quadratic fields, polynomials, matrices, root counts."""

from fractions import Fraction as Rational

from .quadext import (QuadExt, quad_field_for_ell, ell_relation,
                      squarefree_part as squarefree_int, sqrt_in, sqrt_field)
from .unipoly import (UniPoly, poly_gcd, squarefree_part, squarefree_decomposition,
                      resultant, rational_roots, is_reciprocal, cyclotomic, euler_phi,
                      parse_coefficients)
from .roots import (sturm_count, sturm_sequence, isolate_real_roots, refine_root,
                    schur_cohn_inside, cauchy_bound, RootAtEndpoint, UnitCircleRoot)
from .intmatrix import IntMatrix
from .irreducible import is_irreducible, irreducibility_certificate


def charpoly(m: IntMatrix) -> UniPoly:
    return m.charpoly()


__all__ = [
    "Rational", "QuadExt", "quad_field_for_ell", "ell_relation", "squarefree_int", "sqrt_in", "sqrt_field",
    "UniPoly", "poly_gcd", "squarefree_part", "squarefree_decomposition", "resultant",
    "rational_roots", "is_reciprocal", "cyclotomic", "euler_phi", "parse_coefficients",
    "sturm_count", "sturm_sequence", "isolate_real_roots", "refine_root",
    "schur_cohn_inside", "cauchy_bound", "RootAtEndpoint", "UnitCircleRoot",
    "IntMatrix", "charpoly", "is_irreducible", "irreducibility_certificate",
]
