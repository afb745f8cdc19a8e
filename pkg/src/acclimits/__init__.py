"""Linear ACC platoons with speed-dependent acceleration limits."""

from .actuation import PiGains
from .core import AccParams, LeadProfile, LimitModel, VehicleState, equilibrium_spacing
from .sim import Scenario, TrajectoryLog, VehicleConfig, compute_metrics, run

__all__ = [
    "AccParams",
    "LeadProfile",
    "LimitModel",
    "PiGains",
    "Scenario",
    "TrajectoryLog",
    "VehicleConfig",
    "VehicleState",
    "compute_metrics",
    "equilibrium_spacing",
    "run",
]

__version__ = "0.1.0"
