"""Automorphisms of 3-dimensional complex tori from reciprocal integer sextics."""

from .sextic import (ReciprocalSextic, admissible, admissibility_certificate,
                     beta_on_circle, quick_reject, search)
from .spectrum import (FIBERED, KRONECKER, NON_FIBERED, RootDisk, TorusSpectrum,
                       composed_product, fibration_criterion, lambda1_enclosure,
                       lambda1_min_poly, root_disks, spectrum)
from .complex_structure import ComplexStructure, companion, complex_structure

__all__ = [
    "ReciprocalSextic", "admissible", "admissibility_certificate", "beta_on_circle",
    "quick_reject", "search", "FIBERED", "KRONECKER", "NON_FIBERED", "RootDisk",
    "TorusSpectrum", "composed_product", "fibration_criterion", "lambda1_enclosure",
    "lambda1_min_poly", "root_disks", "spectrum", "ComplexStructure", "companion", "complex_structure",
]
