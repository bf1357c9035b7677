from relay.solvers.diagnostics import ProofDiagnostics, proof_diagnostics
from relay.solvers.exact import exact_decision, exact_opt
from relay.solvers.greedy import greedy1, greedy_beta, highest_index, lowest_index
from relay.solvers.grid import SelectionGrid, beta_range, selection_grid, wk_beta
from relay.solvers.matching import MatchingResult, bottleneck_matching, matching_beta, matching_sweep

__all__ = [
    "MatchingResult",
    "ProofDiagnostics",
    "SelectionGrid",
    "beta_range",
    "bottleneck_matching",
    "exact_decision",
    "exact_opt",
    "greedy1",
    "greedy_beta",
    "highest_index",
    "lowest_index",
    "matching_beta",
    "matching_sweep",
    "proof_diagnostics",
    "selection_grid",
    "wk_beta",
]
