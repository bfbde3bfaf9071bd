"""Sparse multivariate polynomials over Q or Q(sqrt d) and rational maps of projective space."""

from .poly import MultiPoly, parse_poly
from .gcd import mgcd, mgcd_prs
from .maps import (INDETERMINATE, Indeterminate, ProjPoint, RationalMap, compose, evaluate,
                   factor_against, jacobian_det, jacobian_matrix, line_gcd_certificate,
                   reduce_map, restrict_to_plane)
from .factored import FactoredIteration, FactoredMap

__all__ = [
    "MultiPoly", "parse_poly", "mgcd", "mgcd_prs",
    "INDETERMINATE", "Indeterminate", "ProjPoint", "RationalMap", "compose", "evaluate",
    "factor_against", "jacobian_det", "jacobian_matrix", "line_gcd_certificate",
    "reduce_map", "restrict_to_plane", "FactoredIteration", "FactoredMap",
]
