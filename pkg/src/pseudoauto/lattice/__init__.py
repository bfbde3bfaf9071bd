"""Integer Picard-lattice actions of f_X and g_W."""

from .basis import Basis, DivisorClass, LatticeAction, basis_w, basis_x, intersection
from .actions import (SALEM_OCTIC, T_POLY, beta0_class, build_fx_inv_star, build_fx_star,
                      build_gw_star, chi_ell, chi_ell_salem_part, degree_sequence,
                      gamma_class, gamma_fixed, gw_charpoly_closed_form, pisot_factor,
                      satisfies_recurrence, sigma02, u_report, u_self_intersection,
                      u_vector, verify_charpoly, verify_gw)

BasisX = basis_x
BasisW = basis_w

__all__ = [
    "Basis", "BasisX", "BasisW", "DivisorClass", "LatticeAction", "basis_w", "basis_x",
    "intersection", "SALEM_OCTIC", "T_POLY", "beta0_class", "build_fx_inv_star",
    "build_fx_star", "build_gw_star", "chi_ell", "chi_ell_salem_part", "degree_sequence",
    "gamma_class", "gamma_fixed", "gw_charpoly_closed_form", "pisot_factor",
    "satisfies_recurrence", "sigma02", "u_report", "u_self_intersection", "u_vector",
    "verify_charpoly", "verify_gw",
]
