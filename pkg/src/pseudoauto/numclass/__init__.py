"""Salem, Pisot and cyclotomic certification of integer polynomials."""

from .classify import (CYCLOTOMIC_PRODUCT, OTHER, PISOT, QUADRATIC_UNIT, SALEM,
                       ClassifiedNumber, classify, dickson, dominant_root, is_reciprocal,
                       remove_cyclotomic, root_counts, trace_poly, unit_circle_roots)
from .threshold import salem_threshold_check, salem_trend, threshold_enclosure

__all__ = [
    "CYCLOTOMIC_PRODUCT", "OTHER", "PISOT", "QUADRATIC_UNIT", "SALEM", "ClassifiedNumber",
    "classify", "dickson", "dominant_root", "is_reciprocal", "remove_cyclotomic",
    "root_counts", "trace_poly", "unit_circle_roots", "salem_threshold_check",
    "salem_trend", "threshold_enclosure",
]
