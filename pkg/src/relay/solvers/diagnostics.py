"""Quantities from the 3-approximation argument, computed on real instances."""

from __future__ import annotations

from dataclasses import dataclass

from relay.delivery_model import DeliveryInstance, SolveResult
from relay.errors import ContradictionError, InfeasibleInstanceError
from relay.solvers.grid import selection_grid
from relay.solvers.matching import bottleneck_matching


@dataclass(frozen=True)
class ProofDiagnostics:
    d_star: int
    b_star: int
    opt_range: int
    d_b: int

    @property
    def chain_holds(self) -> bool:
        """``R* >= d*``, ``R* >= b*`` and ``d* + b* >= d_b``."""
        return (
            self.opt_range >= self.d_star
            and self.opt_range >= self.b_star
            and self.d_star + self.b_star >= self.d_b
        )


def proof_diagnostics(instance: DeliveryInstance, optimal: SolveResult) -> ProofDiagnostics:
    """``d*``, ``b*`` of an optimal schedule and the bottleneck ``d_b`` at ``beta = b*``."""
    if optimal.bounds is None:
        raise ValueError("optimal must come from exact_opt")
    b = optimal.bounds
    grid = selection_grid(instance.path, b.b_star)
    if len(grid) > instance.k:
        raise ContradictionError(
            f"grid at beta=b*={b.b_star} has {len(grid)} points for {instance.k} agents"
        )
    costs = [[instance.fetch[a][p] for p in grid.positions] for a in range(instance.k)]
    try:
        m = bottleneck_matching(costs)
    except InfeasibleInstanceError as exc:
        raise ContradictionError(f"grid at beta=b*={b.b_star} is unsaturable") from exc
    return ProofDiagnostics(b.d_star, b.b_star, b.opt_range, m.bottleneck)
