"""Min-range data delivery over a fixed path by energy-limited mobile agents."""

from relay.delivery_model import (
    DeliveryInstance,
    DiagnosticBounds,
    FeasibilitySuite,
    Leg,
    Schedule,
    SolveResult,
    ValidationReport,
    leg_cost,
    relax_instance,
    simulate_feasibility,
    validate_schedule,
)
from relay.graph_core import (
    DistanceTable,
    PathRef,
    WeightedGraph,
    path_offset,
    shortest_distances,
    unit_relaxation,
)

__version__ = "0.1.0"

__all__ = [
    "DeliveryInstance",
    "DiagnosticBounds",
    "DistanceTable",
    "FeasibilitySuite",
    "Leg",
    "PathRef",
    "Schedule",
    "SolveResult",
    "ValidationReport",
    "WeightedGraph",
    "leg_cost",
    "path_offset",
    "relax_instance",
    "shortest_distances",
    "simulate_feasibility",
    "unit_relaxation",
    "validate_schedule",
]
