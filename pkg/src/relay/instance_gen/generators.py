"""Adversarial and random delivery instances.

The two adversarial families are built so that a greedy solver is led astray
while a good schedule exists. Both check themselves against the solvers on
construction and raise :class:`ReconstructionError` if the intended
behaviour is not reproduced.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from relay.delivery_model import DeliveryInstance
from relay.errors import GraphError, ReconstructionError
from relay.graph_core import PathRef, WeightedGraph


@dataclass(frozen=True)
class GenSpec:
    family: str  # "prop1" | "prop2" | "random"
    W: int = 0
    k: int = 1
    seed: int = 0
    epsilon_scale: int = 1000
    n: int = 8
    extra_edges: int = 0
    max_weight: int = 1

    def __post_init__(self) -> None:
        if self.family not in ("prop1", "prop2", "random"):
            raise GraphError(f"unknown family {self.family!r}")


def generate(spec: GenSpec) -> DeliveryInstance:
    if spec.family == "prop1":
        return gen_prop1(spec.W, spec.k)
    if spec.family == "prop2":
        return gen_prop2(spec.k, spec.W, spec.epsilon_scale)
    return gen_random(spec.n, spec.extra_edges, spec.k, spec.max_weight, spec.seed)


def _unit_path(length: int, weight: int = 1) -> list[tuple[int, int, int]]:
    return [(i, i + 1, weight) for i in range(length)]


def gen_prop1(W: int, k: int) -> DeliveryInstance:
    """Instance on which hand-over-at-every-vertex greed carries ~W alone.

    Path ``v0..vW`` of unit edges. Agent ``i`` (1-based) sits on a hub joined
    at zero cost to ``v(i-1)``, which makes it the nearest candidate there,
    and by a unit edge to ``v((i-1)W/k)``, its spot in an evenly spread
    schedule of range ``W/k + 1``.
    """
    if k < 2 or W % k or W < k * k:
        raise GraphError(f"prop1 needs k >= 2, k | W and W >= k^2 (W={W}, k={k})")
    step = W // k
    edges = _unit_path(W)
    agents = []
    for i in range(1, k + 1):
        hub = W + i
        bait, spot = i - 1, (i - 1) * step
        edges.append((hub, bait, 0))
        if spot != bait:
            edges.append((hub, spot, 1))
        agents.append(hub)
    graph = WeightedGraph(W + k + 1, tuple(edges))
    inst = DeliveryInstance(graph, PathRef.from_graph(graph, range(W + 1)), tuple(agents))

    from relay.solvers import exact_decision, greedy1

    expect_greedy, expect_opt = W - k + 1, step + 1
    got = greedy1(inst).range
    feasible = exact_decision(inst, expect_opt, max_k=max(k, 20))
    if got != expect_greedy or not feasible:
        raise ReconstructionError(
            f"prop1(W={W}, k={k}): greedy1={got} (want {expect_greedy}), "
            f"range {expect_opt} feasible={feasible}"
        )
    return inst


@dataclass(frozen=True)
class Prop2Plan:
    """Edge weights of the prop2 cascade and the ranges they produce.

    ``segment`` is the carried length per grid point (``W/k`` scaled by
    ``epsilon_scale``), ``slack`` the detour every agent needs in the good
    schedule, ``bait[j]`` the weight tying the agent meant for grid point
    ``j + 2`` to point ``j + 1``.
    """

    k: int
    segment: int
    slack: int
    bait: tuple[int, ...]
    greedy_range: int
    opt_range: int

    @property
    def ratio(self) -> float:
        return self.greedy_range / self.opt_range


def prop2_plan(k: int, W: int, epsilon_scale: int) -> Prop2Plan:
    """Smallest slack for which the greedy cascade reaches ratio ``ceil(k/2)``.

    With slack ``x``, point ``j``'s own agent is ``x`` away; greedy instead
    takes the agent of point ``j + 1``, tied at distance ``x + D_j`` with the
    one agent it will be left with at the end (``D_j`` is the distance from
    the first grid point to point ``j``). The leftover agent finally walks
    ``x + D_k``. Each tie edge also shortens the path between neighbours, so
    ``D`` roughly doubles per point.
    """
    if k < 3 or k % 2 == 0 or W % k:
        raise GraphError(f"prop2 needs odd k >= 3 and k | W (W={W}, k={k})")
    if epsilon_scale < k:
        raise GraphError(f"epsilon_scale must be >= k, got {epsilon_scale}")
    seg = (W // k) * epsilon_scale
    target = (k + 1) // 2
    for x in range(1, seg + 1):
        dist, bait = 0, []
        for _ in range(k - 1):
            bait.append(x + dist)
            dist += min(seg, bait[-1] + x)
        greedy, opt = seg + x + dist, seg + x
        if greedy >= target * opt:
            return Prop2Plan(k, seg, x, tuple(bait), greedy, opt)
    raise GraphError("no slack reaches the target ratio")  # pragma: no cover


def gen_prop2(k: int, W: int, epsilon_scale: int = 1000) -> DeliveryInstance:
    """Instance on which greedy with spacing ``W/k`` is ``ceil(k/2)`` times off.

    All weights are multiples of ``epsilon_scale`` except the hub edges, so
    the unit weight plays the role of a small epsilon. The path has ``W``
    edges of weight ``epsilon_scale``; grid points are every ``W/k`` edges.
    Agent order puts the agent of grid point 1 last, so lowest-index
    tie-breaking sends every other agent one grid point early.
    """
    plan = prop2_plan(k, W, epsilon_scale)
    L = W // k
    edges = _unit_path(W, epsilon_scale)
    grid = [j * L for j in range(k)]
    hubs = [W + 1 + j for j in range(k)]  # hubs[j] belongs to grid point j
    edges.append((hubs[0], grid[0], plan.slack))
    for j in range(1, k):
        edges.append((hubs[j], grid[j], plan.slack))
        edges.append((hubs[j], grid[j - 1], plan.bait[j - 1]))
    graph = WeightedGraph(W + 1 + k, tuple(edges))
    agents = tuple(hubs[1:]) + (hubs[0],)
    inst = DeliveryInstance(graph, PathRef.from_graph(graph, range(W + 1)), agents)

    from relay.solvers import exact_decision, greedy_beta

    got = greedy_beta(inst, plan.segment).range
    tight = exact_decision(inst, plan.opt_range) and not exact_decision(inst, plan.opt_range - 1)
    if got != plan.greedy_range or not tight:
        raise ReconstructionError(
            f"prop2(k={k}, W={W}): greedy={got} (want {plan.greedy_range}), "
            f"optimum {plan.opt_range} reproduced={tight}"
        )
    return inst


def _random_simple_path(adj: list[list[int]], s: int, t: int, rng: random.Random) -> list[int]:
    stack = [(s, iter(rng.sample(adj[s], len(adj[s]))))]
    on_path = {s}
    while stack:
        v, it = stack[-1]
        if v == t:
            return [u for u, _ in stack]
        nxt = next((u for u in it if u not in on_path), None)
        if nxt is None:
            stack.pop()
            on_path.discard(v)
        else:
            on_path.add(nxt)
            stack.append((nxt, iter(rng.sample(adj[nxt], len(adj[nxt])))))
    raise GraphError("t is unreachable from s")  # pragma: no cover - graph is connected


def gen_random(n: int, extra_edges: int, k: int, max_weight: int, seed: int) -> DeliveryInstance:
    """Connected random instance, fully determined by its arguments."""
    if n < 3 or k < 1 or max_weight < 1:
        raise GraphError("gen_random needs n >= 3, k >= 1 and max_weight >= 1")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = []
    present = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.append((u, v, rng.randint(1, max_weight)))
        present.add((min(u, v), max(u, v)))
    spare = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present]
    for u, v in rng.sample(spare, min(extra_edges, len(spare))):
        edges.append((u, v, rng.randint(1, max_weight)))
    graph = WeightedGraph(n, tuple(edges))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v, _ in edges:
        adj[u].append(v)
        adj[v].append(u)
    for row in adj:
        row.sort()
    s, t = rng.sample(range(n), 2)
    path = _random_simple_path(adj, s, t, rng)
    agents = tuple(rng.randrange(n) for _ in range(k))
    return DeliveryInstance(graph, PathRef.from_graph(graph, path), agents)
