"""Selection grids: hand-over points spaced ``beta`` apart along the path."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from math import ceil

from relay.delivery_model import DeliveryInstance
from relay.errors import FractionalLandingError, GraphError
from relay.graph_core import PathRef


@dataclass(frozen=True)
class SelectionGrid:
    beta: int
    positions: tuple[int, ...]
    offsets: tuple[int, ...]
    segment_lengths: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.positions)

    def segments(self, path: PathRef) -> list[tuple[int, int]]:
        """``(pickup, drop)`` position pairs, the last one ending at t."""
        ends = self.positions[1:] + (path.last,)
        return list(zip(self.positions, ends))


def selection_grid(path: PathRef, beta: int, *, snap: bool = True) -> SelectionGrid:
    """Grid of hand-over points built backwards from t.

    Points sit at offsets ``W - beta, W - 2*beta, ...`` down to s, so the
    first segment carries ``W mod beta`` (or ``beta`` when it divides ``W``)
    and every later segment carries ``beta``. On paths where such an offset
    falls inside an edge the point snaps forward to the end of that edge,
    which keeps every segment at most ``beta`` long; the only exception is a
    single edge heavier than ``beta``, which then forms its own segment.
    With ``snap=False`` such landings raise :class:`FractionalLandingError`.
    """
    W = path.weight
    if not 1 <= beta <= max(W, 1) or W < 1:
        raise GraphError(f"beta must lie in 1..W (W={W}), got {beta}")
    offsets = path.offsets
    points = []
    cur = path.last
    while cur > 0:
        target = offsets[cur] - beta
        if target <= 0:
            nxt = 0
        else:
            nxt = bisect_left(offsets, target, 0, cur)
            if not snap and offsets[nxt] != target:
                raise FractionalLandingError(
                    f"offset {target} is not a path vertex (beta={beta})"
                )
            nxt = min(nxt, cur - 1)
        points.append(nxt)
        cur = nxt
    points.reverse()
    pos = tuple(points)
    offs = tuple(offsets[p] for p in pos)
    ends = offs[1:] + (W,)
    return SelectionGrid(beta, pos, offs, tuple(e - o for o, e in zip(offs, ends)))


def beta_range(instance: DeliveryInstance) -> range:
    """Integer spacings tried by the matching sweep: ``ceil(W/k)..W``."""
    W = instance.W
    return range(max(1, ceil(W / instance.k)), W + 1)


def wk_beta(instance: DeliveryInstance) -> int:
    """Smallest spacing ``>= ceil(W/k)`` whose grid fits the agents.

    Equal to ``ceil(W/k)`` on unit-weight paths.
    """
    for beta in beta_range(instance):
        if len(selection_grid(instance.path, beta)) <= instance.k:
            return beta
    raise GraphError("path has zero weight")
