"""Bottleneck bipartite matching and the matching-based solvers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from relay.delivery_model import DeliveryInstance, SolveResult, make_result
from relay.errors import InfeasibleInstanceError, NotEnoughAgentsError, UnsaturableError
from relay.solvers.grid import beta_range, selection_grid

CostTable = Sequence[Sequence["int | None"]]


@dataclass(frozen=True)
class MatchingResult:
    assignment: dict[int, int]  # selection point index -> agent
    bottleneck: int
    rounds: int = 1


def _max_matching(
    allowed: list[list[int]], n_right: int, warm: dict[int, int] | None = None
) -> dict[int, int]:
    """Maximum-cardinality matching of left vertices by augmenting paths.

    ``allowed[i]`` lists right vertices adjacent to left vertex ``i``.
    ``warm`` is a partial matching (left -> right) to start from; it must
    only use allowed edges.
    """
    match_right = [-1] * n_right
    match_left = {}
    if warm:
        for i, r in warm.items():
            match_right[r] = i
            match_left[i] = r

    def augment(i: int, seen: list[bool]) -> bool:
        for r in allowed[i]:
            if seen[r]:
                continue
            seen[r] = True
            if match_right[r] == -1 or augment(match_right[r], seen):
                match_right[r] = i
                match_left[i] = r
                return True
        return False

    for i in range(len(allowed)):
        if i not in match_left:
            augment(i, [False] * n_right)
    return match_left


def bottleneck_matching(costs: CostTable, method: str = "removal") -> MatchingResult:
    """Assign every column (selection point) a distinct row (agent).

    The maximum cost used is minimum over all such assignments. ``costs`` is
    indexed ``costs[agent][point]``; ``None`` marks a forbidden pair.

    ``method="removal"`` repeatedly finds a maximum matching and, while it
    still covers every point, deletes all edges of the current maximum
    weight. ``method="threshold"`` binary-searches the smallest admissible
    weight instead.
    """
    k = len(costs)
    l = len(costs[0]) if k else 0
    if l == 0:
        return MatchingResult({}, 0, 0)
    if l > k:
        raise UnsaturableError(f"{l} selection points but only {k} agents")
    edges = sorted(
        (costs[a][j], j, a) for a in range(k) for j in range(l) if costs[a][j] is not None
    )
    if method == "threshold":
        return _threshold(edges, k, l)
    if method != "removal":
        raise ValueError(f"unknown method {method!r}")

    limit = len(edges)  # edges[:limit] are still present
    rounds = 0
    best = None
    warm = None
    while True:
        allowed: list[list[int]] = [[] for _ in range(l)]
        for _, j, a in edges[:limit]:
            allowed[j].append(a)
        m = _max_matching(allowed, k, warm)
        rounds += 1
        if len(m) < l:
            break
        best = m
        if limit == 0:
            break
        top = edges[limit - 1][0]
        while limit and edges[limit - 1][0] == top:
            limit -= 1
        warm = {j: a for j, a in m.items() if costs[a][j] < top}
    if best is None:
        raise UnsaturableError("no assignment covers every selection point")
    return MatchingResult(dict(sorted(best.items())), max(costs[a][j] for j, a in best.items()), rounds)


def _threshold(edges: list[tuple[int, int, int]], k: int, l: int) -> MatchingResult:
    weights = sorted({w for w, _, _ in edges})
    rounds = 0

    def attempt(cap: int) -> dict[int, int]:
        nonlocal rounds
        rounds += 1
        allowed: list[list[int]] = [[] for _ in range(l)]
        for w, j, a in edges:
            if w > cap:
                break
            allowed[j].append(a)
        return _max_matching(allowed, k)

    if not weights or len(attempt(weights[-1])) < l:
        raise UnsaturableError("no assignment covers every selection point")
    lo, hi = 0, len(weights) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if len(attempt(weights[mid])) == l:
            hi = mid
        else:
            lo = mid + 1
    best = attempt(weights[lo])
    return MatchingResult(dict(sorted(best.items())), weights[lo], rounds)


def _grid_costs(instance: DeliveryInstance, positions: Sequence[int]) -> list[list[int | None]]:
    return [[instance.fetch[a][p] for p in positions] for a in range(instance.k)]


def matching_beta(instance: DeliveryInstance, beta: int, method: str = "removal") -> SolveResult:
    """Fetch to each grid point the agent matched to it by a bottleneck matching."""
    grid = selection_grid(instance.path, beta)
    if len(grid) > instance.k:
        raise NotEnoughAgentsError(
            f"beta={beta} needs {len(grid)} agents, only {instance.k} available"
        )
    m = bottleneck_matching(_grid_costs(instance, grid.positions), method)
    legs = [(m.assignment[j], p, d) for j, (p, d) in enumerate(grid.segments(instance.path))]
    return make_result(instance, legs, "matching_beta", f"beta={beta}")


def matching_sweep(instance: DeliveryInstance, method: str = "removal") -> SolveResult:
    """Best :func:`matching_beta` over every integer spacing in ``ceil(W/k)..W``.

    Ties go to the larger spacing. Spacings that produce an identical grid are
    solved once.
    """
    best: SolveResult | None = None
    by_grid: dict[tuple[int, ...], SolveResult | None] = {}
    for beta in beta_range(instance):
        grid = selection_grid(instance.path, beta)
        if grid.positions not in by_grid:
            try:
                by_grid[grid.positions] = matching_beta(instance, beta, method)
            except InfeasibleInstanceError:
                by_grid[grid.positions] = None
        res = by_grid[grid.positions]
        if res is None:
            continue
        if best is None or res.range <= best.range:
            best = SolveResult(
                res.schedule, res.range, res.per_agent_cost, "matching", f"beta={beta}"
            )
    if best is None:
        raise InfeasibleInstanceError("no spacing admits a covering assignment")
    return best
