"""Cramer-Rao bounds and robust movable-antenna placement for angle-of-departure estimation.

All angles are in degrees; positions are in wavelengths.
"""

from ._core import (
    ConfigError,
    ConstraintError,
    DomainError,
    EvaluationError,
    ScenarioConfig,
    crb_closed_form,
    crb_general,
    half_power_beamwidth,
    maxvar_apv,
    monte_carlo,
    optimal_precoder,
    optimize_placement,
    position_moment,
    run_command,
    scc,
    scc_feasible,
    steering_derivative,
    steering_vector,
    sweep_region_size,
    symmetric_apv,
    ufa_apv,
    uhw_apv,
    worst_case_crb,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
