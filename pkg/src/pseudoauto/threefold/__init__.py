"""The threefold maps, their charts, the beta-cycle orbit and the surface map g."""

from .maps import (Parameters, cremona_J, f_factored, f_inverse, f_map, g_factored,
                   g_inverse, g_map, lift_F, linear_L, linear_L_inv)
from .charts import ChartPoint, chart_formula_report
from .orbit import (CurveParam, OrbitTrace, REACHED_E0, HIT_INDETERMINACY, REGULAR,
                    beta0_orbit_avoidance, beta_step, ell_condition_holds,
                    random_non_solutions, trace_orbit, translation_report,
                    verify_ell_condition)
from .surface import (e1_chart_dynamics, g_exceptional_report, indeterminacy_points,
                      surface_regression)
from .obstruction import fibration_obstruction
from .omega import omega_invariance

__all__ = [
    "Parameters", "cremona_J", "f_factored", "f_inverse", "f_map", "g_factored",
    "g_inverse", "g_map", "lift_F", "linear_L", "linear_L_inv",
    "ChartPoint", "chart_formula_report",
    "CurveParam", "OrbitTrace", "REACHED_E0", "HIT_INDETERMINACY", "REGULAR",
    "beta0_orbit_avoidance", "beta_step", "ell_condition_holds", "random_non_solutions",
    "trace_orbit", "translation_report", "verify_ell_condition",
    "e1_chart_dynamics", "g_exceptional_report", "indeterminacy_points", "surface_regression",
    "fibration_obstruction", "omega_invariance",
]
