"""Exact optimum by dynamic programming over agent subsets.

``reach[mask]`` is the furthest path position the data can be brought to
using only agents in ``mask``, each paying at most ``R``. An agent added last
picks the data up at any reached position it can afford to walk to and
carries it as far as its remaining energy allows (hand-overs at vertices).
Masks are processed in layers of equal popcount so each layer is one batch
of vectorised numpy updates.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

from relay.delivery_model import DeliveryInstance, DiagnosticBounds, SolveResult, make_result
from relay.errors import InfeasibleInstanceError, OracleCapacityError

DEFAULT_MAX_K = 20
ENV_MAX_K = "RELAY_ORACLE_MAX_K"


def oracle_capacity(max_k: int | None = None) -> int:
    if max_k is not None:
        return max_k
    return int(os.environ.get(ENV_MAX_K, DEFAULT_MAX_K))


def _check_capacity(instance: DeliveryInstance, max_k: int | None) -> None:
    cap = oracle_capacity(max_k)
    if instance.k > cap:
        raise OracleCapacityError(
            f"exact oracle handles at most {cap} agents, instance has {instance.k}"
        )


@lru_cache(maxsize=8)
def _layers(k: int) -> tuple[np.ndarray, ...]:
    masks = np.arange(1 << k, dtype=np.int64)
    pop = np.zeros(1 << k, dtype=np.int64)
    for a in range(k):
        pop += (masks >> a) & 1
    return tuple(masks[pop == p] for p in range(k + 1))


def _fetch_array(instance: DeliveryInstance) -> np.ndarray:
    """Fetch distances with -1 marking unreachable."""
    return np.array(
        [[-1 if d is None else d for d in row] for row in instance.fetch], dtype=np.int64
    ).reshape(instance.k, len(instance.path))


def _extensions(fetch: np.ndarray, offsets: np.ndarray, R: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-agent best drop position for each pickup, and its prefix maximum.

    ``drop[a, i]``: furthest position agent ``a`` reaches after picking up at
    ``i`` (``-1`` if it cannot afford to get there). ``ext[a, j]``: furthest
    position reachable when the data is available up to ``j`` and ``a`` may
    take it over (at least ``j`` itself, i.e. ``a`` stays unused).
    """
    k, P = fetch.shape
    ok = (fetch >= 0) & (fetch <= R)
    limit = offsets[None, :] + (R - fetch)
    drop = np.searchsorted(offsets, limit.ravel(), side="right").reshape(k, P) - 1
    drop = np.where(ok, drop, -1)
    idx = np.arange(P)
    ext = np.maximum.accumulate(np.maximum(drop, idx[None, :]), axis=1)
    return drop, ext


def _reach(ext: np.ndarray, k: int) -> np.ndarray:
    reach = np.zeros(1 << k, dtype=np.int64)
    for layer in _layers(k)[1:]:
        for a in range(k):
            bit = 1 << a
            ms = layer[(layer & bit) != 0]
            reach[ms] = np.maximum(reach[ms], ext[a][reach[ms ^ bit]])
    return reach


def exact_decision(instance: DeliveryInstance, range_: int, *, max_k: int | None = None) -> bool:
    """Whether some valid schedule keeps every agent's cost within ``range_``."""
    _check_capacity(instance, max_k)
    if range_ < 0:
        return False
    offsets = np.asarray(instance.path.offsets, dtype=np.int64)
    _, ext = _extensions(_fetch_array(instance), offsets, range_)
    reach = _reach(ext, instance.k)
    return bool(reach[-1] == instance.path.last)


def _candidates(fetch: np.ndarray, offsets: np.ndarray) -> np.ndarray:
    """Every possible leg cost ``fetch(a, i) + d_P(i, u)`` with ``i < u``."""
    P = len(offsets)
    iu, ju = np.triu_indices(P, k=1)
    span = offsets[ju] - offsets[iu]
    vals = []
    for row in fetch:
        f = row[iu]
        vals.append((f + span)[f >= 0])
    return np.unique(np.concatenate(vals)) if vals else np.empty(0, dtype=np.int64)


def exact_opt(instance: DeliveryInstance, *, max_k: int | None = None) -> SolveResult:
    """Minimum range and one optimal schedule, with its ``d*`` and ``b*``."""
    _check_capacity(instance, max_k)
    path = instance.path
    if path.last < 1:
        raise InfeasibleInstanceError("path has no edge")
    k = instance.k
    offsets = np.asarray(path.offsets, dtype=np.int64)
    fetch = _fetch_array(instance)
    cands = _candidates(fetch, offsets)

    def feasible(R: int) -> tuple[bool, np.ndarray, np.ndarray, np.ndarray]:
        drop, ext = _extensions(fetch, offsets, R)
        reach = _reach(ext, k)
        return bool(reach[-1] == path.last), reach, drop, ext

    if not len(cands) or not feasible(int(cands[-1]))[0]:
        raise InfeasibleInstanceError("no schedule delivers the data to t")
    lo, hi = 0, len(cands) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if feasible(int(cands[mid]))[0]:
            hi = mid
        else:
            lo = mid + 1
    R = int(cands[lo])
    _, reach, drop, ext = feasible(R)

    # smallest agent set that gets the data to t
    mask = next(
        int(hits[0])
        for layer in _layers(k)
        if len(hits := layer[reach[layer] == path.last])
    )
    order: list[tuple[int, int, int]] = []  # (agent, reach before, reach after)
    while reach[mask] > 0:
        members = [a for a in range(k) if mask >> a & 1]
        step = next(
            (a for a in members
             if reach[mask ^ (1 << a)] < reach[mask] and ext[a][reach[mask ^ (1 << a)]] == reach[mask]),
            None,
        )
        if step is None:
            # some member contributes nothing; drop it
            mask ^= 1 << next(a for a in members if reach[mask ^ (1 << a)] == reach[mask])
            continue
        before = int(reach[mask ^ (1 << step)])
        order.append((step, before, int(reach[mask])))
        mask ^= 1 << step
    order.reverse()

    legs: list[list[int]] = []
    for a, before, after in order:
        # earliest pickup: later agents take as much of the path as they can
        pickup = min(i for i in range(before + 1) if drop[a][i] >= after)
        while legs and legs[-1][1] >= pickup:
            legs.pop()
        if legs:
            legs[-1][2] = pickup
        legs.append([a, pickup, after])
    legs[-1][2] = path.last
    result = make_result(instance, legs, "exact")
    d_star = max(leg.fetch for leg in result.schedule)
    b_star = max(path.distance(leg.pickup, leg.drop) for leg in result.schedule)
    bounds = DiagnosticBounds(d_star, b_star, result.range)
    return SolveResult(
        result.schedule, result.range, result.per_agent_cost, "exact", "", bounds
    )
