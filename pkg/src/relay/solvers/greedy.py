"""Greedy hand-over solvers.

At every hand-over point both solvers fetch the closest agent that has not
carried the data yet. ``greedy1`` hands over at every path vertex;
``greedy_beta`` only at the points of a selection grid.
"""

from __future__ import annotations

from typing import Callable, Sequence

from relay.delivery_model import DeliveryInstance, SolveResult, make_result
from relay.errors import InfeasibleInstanceError, NotEnoughAgentsError
from relay.solvers.grid import selection_grid

TieBreak = Callable[[Sequence[int]], int]


def lowest_index(tied: Sequence[int]) -> int:
    return min(tied)


def highest_index(tied: Sequence[int]) -> int:
    return max(tied)


def _closest_unused(
    instance: DeliveryInstance, position: int, used: set[int], tie_break: TieBreak
) -> int:
    best = None
    tied: list[int] = []
    for a in range(instance.k):
        if a in used:
            continue
        d = instance.fetch[a][position]
        if d is None:
            continue
        if best is None or d < best:
            best, tied = d, [a]
        elif d == best:
            tied.append(a)
    if not tied:
        raise InfeasibleInstanceError(
            f"no unused agent can reach path position {position}"
        )
    return tie_break(tied)


def greedy1(instance: DeliveryInstance, tie_break: TieBreak = lowest_index) -> SolveResult:
    """Hand the data to a fresh closest agent at every path vertex.

    Once every agent has been used, the last one keeps the data up to t.
    """
    path = instance.path
    if path.last < 1:
        raise InfeasibleInstanceError("path has no edge")
    used: set[int] = set()
    legs: list[list[int]] = []
    for i in range(path.last):
        if len(used) == instance.k:
            legs[-1][2] = path.last
            break
        a = _closest_unused(instance, i, used, tie_break)
        used.add(a)
        legs.append([a, i, i + 1])
    return make_result(instance, legs, "greedy1")


def greedy_beta(
    instance: DeliveryInstance, beta: int, tie_break: TieBreak = lowest_index
) -> SolveResult:
    """Greedy selection restricted to the hand-over points of a grid."""
    grid = selection_grid(instance.path, beta)
    if len(grid) > instance.k:
        raise NotEnoughAgentsError(
            f"beta={beta} needs {len(grid)} agents, only {instance.k} available"
        )
    used: set[int] = set()
    legs = []
    for pickup, drop in grid.segments(instance.path):
        a = _closest_unused(instance, pickup, used, tie_break)
        used.add(a)
        legs.append((a, pickup, drop))
    return make_result(instance, legs, "greedy_beta", f"beta={beta}")
