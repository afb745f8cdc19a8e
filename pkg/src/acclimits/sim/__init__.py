from .engine import (
    CrashEvent,
    PlatoonState,
    Scenario,
    ScenarioError,
    TrajectoryLog,
    VehicleConfig,
    initial_state,
    run,
    step,
)
from .metrics import MetricsReport, compute_metrics, count_runs, steady_amplitude
from .mixed import ParameterRanges, sample_mixed_platoon
from .profiles import generate_lead, lead_distance, lead_distance_quad

__all__ = [
    "CrashEvent",
    "MetricsReport",
    "ParameterRanges",
    "PlatoonState",
    "Scenario",
    "ScenarioError",
    "TrajectoryLog",
    "VehicleConfig",
    "compute_metrics",
    "count_runs",
    "generate_lead",
    "initial_state",
    "lead_distance",
    "lead_distance_quad",
    "run",
    "sample_mixed_platoon",
    "step",
    "steady_amplitude",
]
