"""Delivery instances, schedules, cost accounting and schedule validation.

A schedule is an ordered list of legs. Leg ``j`` has agent ``a`` walk from its
start vertex to path position ``pickup`` (the fetch), receive the data there
and carry it along the path to position ``drop``, where the next leg's agent
is waiting. Hand-overs happen at path vertices only; callers wanting
hand-overs inside edges relax the instance first (:func:`relax_instance`).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence, Union

from relay.errors import GraphError, InfeasibleLegError, RelayError, StrandedAgentError
from relay.graph_core import DistanceTable, PathRef, WeightedGraph, relax, shortest_path, subdivide

Budgets = Union[int, tuple[int, ...], None]


@dataclass(frozen=True)
class DeliveryInstance:
    """Graph, fixed s-t path and agent start vertices (plus optional budgets)."""

    graph: WeightedGraph
    path: PathRef
    agents: tuple[int, ...]
    budgets: Budgets = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "agents", tuple(int(a) for a in self.agents))
        if isinstance(self.budgets, (list, tuple)):
            object.__setattr__(self, "budgets", tuple(int(b) for b in self.budgets))
        if not self.agents:
            raise GraphError("an instance needs at least one agent")
        n = self.graph.vertex_count
        for a in self.agents:
            if not 0 <= a < n:
                raise GraphError(f"agent vertex {a} out of range")
        for i, v in enumerate(self.path.vertices):
            if not 0 <= v < n:
                raise GraphError(f"path vertex {v} out of range")
            if i and not self.graph.has_edge(self.path.vertices[i - 1], v):
                raise GraphError(f"path vertices {self.path.vertices[i - 1]} and {v} are not adjacent")
            if i and self.graph.weight(self.path.vertices[i - 1], v) != (
                self.path.offsets[i] - self.path.offsets[i - 1]
            ):
                raise GraphError(f"path offset at position {i} disagrees with edge weight")
        if self.path.source == self.path.target:
            raise GraphError("path endpoints s and t must differ")
        if isinstance(self.budgets, tuple):
            if len(self.budgets) != len(self.agents):
                raise GraphError("per-agent budgets must match the agent count")
            if any(b < 0 for b in self.budgets):
                raise GraphError("budgets must be non-negative")
        elif self.budgets is not None and int(self.budgets) < 0:
            raise GraphError("budget must be non-negative")

    @property
    def k(self) -> int:
        return len(self.agents)

    @property
    def W(self) -> int:
        return self.path.weight

    @cached_property
    def distances(self) -> DistanceTable:
        return DistanceTable(self.graph, set(self.agents))

    @cached_property
    def fetch(self) -> tuple[tuple[int | None, ...], ...]:
        """``fetch[a][i]``: shortest distance from agent ``a`` to path position ``i``."""
        rows = []
        for q in self.agents:
            row = self.distances.row(q)
            rows.append(tuple(row[v] for v in self.path.vertices))
        return tuple(rows)

    def budget_of(self, agent: int) -> int | None:
        if self.budgets is None:
            return None
        if isinstance(self.budgets, tuple):
            return self.budgets[agent]
        return int(self.budgets)

    def with_budgets(self, budgets: Budgets) -> "DeliveryInstance":
        return DeliveryInstance(self.graph, self.path, self.agents, budgets)


@dataclass(frozen=True)
class Leg:
    agent: int
    pickup: int
    drop: int
    fetch: int


@dataclass(frozen=True)
class Schedule:
    legs: tuple[Leg, ...]

    def __iter__(self):
        return iter(self.legs)

    def __len__(self) -> int:
        return len(self.legs)

    @property
    def agents(self) -> tuple[int, ...]:
        return tuple(leg.agent for leg in self.legs)


@dataclass(frozen=True)
class DiagnosticBounds:
    """Maximum fetch ``d_star`` and maximum carried length ``b_star`` of an optimum."""

    d_star: int
    b_star: int
    opt_range: int


@dataclass(frozen=True)
class SolveResult:
    schedule: Schedule
    range: int
    per_agent_cost: dict[int, int] = field(hash=False)
    solver_name: str
    parameters: str = ""
    bounds: DiagnosticBounds | None = None


def leg_cost(instance: DeliveryInstance, leg: Leg) -> int:
    """Fetch distance to the pickup vertex plus the carried path length."""
    if not 0 <= leg.agent < instance.k:
        raise InfeasibleLegError(f"unknown agent {leg.agent}")
    fetch = instance.fetch[leg.agent][leg.pickup]
    if fetch is None:
        raise InfeasibleLegError(
            f"agent {leg.agent} cannot reach path position {leg.pickup}"
        )
    return fetch + instance.path.distance(leg.pickup, leg.drop)


def make_result(
    instance: DeliveryInstance,
    legs: Sequence[tuple[int, int, int]],
    solver_name: str,
    parameters: str = "",
    bounds: DiagnosticBounds | None = None,
) -> SolveResult:
    """Build a :class:`SolveResult` from ``(agent, pickup, drop)`` triples."""
    full = []
    costs: dict[int, int] = {}
    for agent, pickup, drop in legs:
        leg = Leg(agent, pickup, drop, 0)
        cost = leg_cost(instance, leg)
        full.append(Leg(agent, pickup, drop, instance.fetch[agent][pickup]))
        costs[agent] = cost
    return SolveResult(
        Schedule(tuple(full)),
        max(costs.values(), default=0),
        costs,
        solver_name,
        parameters,
        bounds,
    )


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, rule: str, detail: str) -> None:
        self.violations.append(f"{rule}: {detail}")

    def __str__(self) -> str:
        return "OK" if self.ok else "\n".join(self.violations)


def validate_schedule(instance: DeliveryInstance, result: SolveResult) -> ValidationReport:
    """Check a result against every schedule rule; never raises."""
    report = ValidationReport()
    legs = result.schedule.legs
    last = instance.path.last
    if not legs:
        report.add("empty schedule", "no legs")
        return report
    if legs[0].pickup != 0:
        report.add("start not at s", f"first pickup at position {legs[0].pickup}")
    if legs[-1].drop != last:
        report.add("end not at t", f"last drop at position {legs[-1].drop}, t is {last}")
    seen: set[int] = set()
    recomputed: dict[int, int] = {}
    for j, leg in enumerate(legs):
        if not 0 <= leg.agent < instance.k:
            report.add("unknown agent", f"leg {j} uses agent {leg.agent}")
            continue
        if leg.agent in seen:
            report.add("repeated agent", f"agent {leg.agent} carries more than one leg")
        seen.add(leg.agent)
        if not (0 <= leg.pickup <= last and 0 <= leg.drop <= last):
            report.add("bad position", f"leg {j} spans {leg.pickup}..{leg.drop}")
            continue
        if leg.pickup >= leg.drop:
            report.add("empty leg", f"leg {j} picks up at {leg.pickup} and drops at {leg.drop}")
        if j and leg.pickup != legs[j - 1].drop:
            kind = "coverage gap" if leg.pickup > legs[j - 1].drop else "coverage overlap"
            report.add(kind, f"leg {j} picks up at {leg.pickup} but leg {j - 1} dropped at {legs[j - 1].drop}")
        fetch = instance.fetch[leg.agent][leg.pickup]
        if fetch is None:
            report.add("unreachable pickup", f"agent {leg.agent} cannot reach position {leg.pickup}")
            continue
        if leg.fetch != fetch:
            report.add("fetch mismatch", f"leg {j} records {leg.fetch}, shortest is {fetch}")
        cost = fetch + instance.path.distance(leg.pickup, leg.drop)
        recomputed[leg.agent] = cost
        if result.per_agent_cost.get(leg.agent) != cost:
            report.add(
                "cost mismatch",
                f"agent {leg.agent} records {result.per_agent_cost.get(leg.agent)}, recomputed {cost}",
            )
        budget = instance.budget_of(leg.agent)
        if budget is not None and cost > budget:
            report.add("over budget", f"agent {leg.agent} needs {cost} > budget {budget}")
    extra = set(result.per_agent_cost) - seen
    if extra:
        report.add("cost mismatch", f"costs listed for unused agents {sorted(extra)}")
    if recomputed and result.range != max(recomputed.values()):
        report.add("range mismatch", f"reported {result.range}, max leg cost {max(recomputed.values())}")
    return report


@dataclass(frozen=True)
class FeasibilitySuite:
    """Synchronous trajectory certifying a delivery.

    ``positions[i][j]`` and ``energies[i][j]`` give agent ``j``'s vertex and
    remaining energy after step ``i`` on ``graph`` (the subdivided instance
    graph, whose first ``n`` vertex ids are the original ones). ``carrier[i]``
    is the agent holding the data after step ``i``.
    """

    graph: WeightedGraph
    positions: tuple[tuple[int, ...], ...]
    energies: tuple[tuple[int, ...], ...]
    carrier: tuple[int, ...]

    @property
    def steps(self) -> int:
        return len(self.positions) - 1

    @property
    def final_energies(self) -> tuple[int, ...]:
        return self.energies[-1]


def _vertex_name(instance: DeliveryInstance, v: int) -> str:
    if v < instance.graph.vertex_count:
        return instance.graph.label(v)
    return f"~{v} (edge interior)"


def simulate_feasibility(
    instance: DeliveryInstance,
    result: SolveResult,
    budgets: Budgets = None,
) -> FeasibilitySuite:
    """Replay ``result`` as a synchronous step-by-step suite and verify it.

    From step one every used agent walks a shortest route to its pickup
    vertex and waits there. In the same steps the data moves: the agent of
    the current leg carries it along the path as soon as both it and the data
    are at the pickup vertex, and hands it over on arrival at the drop vertex.
    Unused agents never move. Budgets default to those stored on the instance.

    Raises :class:`StrandedAgentError` when an agent cannot pay for its next
    step, and :class:`RelayError` if the finished suite fails the
    connectivity or path-cover conditions.
    """
    if budgets is None:
        budgets = instance.budgets
    if budgets is None:
        raise RelayError("simulate_feasibility needs budgets")
    k = instance.k
    if isinstance(budgets, (list, tuple)):
        energy = [int(b) for b in budgets]
        if len(energy) != k:
            raise RelayError("per-agent budgets must match the agent count")
    else:
        energy = [int(budgets)] * k

    sub = subdivide(instance.graph)
    g = sub.graph
    path = instance.path.vertices
    legs = result.schedule.legs

    def path_walk(i: int, j: int) -> list[int]:
        walk = [path[i]]
        for a, b in zip(path[i:j], path[i + 1 : j + 1]):
            walk.extend(sub.chain(a, b)[1:])
        return walk

    routes: dict[int, list[int]] = {}
    for leg in legs:
        route = shortest_path(g, instance.agents[leg.agent], path[leg.pickup])
        if route is None:
            raise InfeasibleLegError(f"agent {leg.agent} cannot reach position {leg.pickup}")
        routes[leg.agent] = route

    pos = list(instance.agents)
    carrier = -1
    positions = [tuple(pos)]
    energies = [tuple(energy)]
    carriers = [carrier]

    def step(moves: dict[int, int]) -> None:
        for agent, nxt in moves.items():
            w = g.weight(pos[agent], nxt)
            if w is None:
                raise RelayError(f"agent {agent} jumps from {pos[agent]} to non-neighbour {nxt}")
            if energy[agent] < w:
                raise StrandedAgentError(agent, _vertex_name(instance, pos[agent]), len(positions) - 1)
        for agent, nxt in moves.items():
            energy[agent] -= g.weight(pos[agent], nxt)
            pos[agent] = nxt
        positions.append(tuple(pos))
        energies.append(tuple(energy))
        carriers.append(carrier)

    walks = [path_walk(leg.pickup, leg.drop) for leg in legs]
    route_at = {a: 0 for a in routes}
    leg_no, walk_at = 0, 0

    def next_leg(j: int) -> int:
        # skip legs with nothing to carry; the data must be where each leg starts
        while j < len(legs):
            expected = legs[j - 1].drop if j else 0
            if legs[j].pickup != expected:
                raise RelayError(f"data is not at position {legs[j].pickup} for leg {j}")
            if len(walks[j]) > 1:
                break
            j += 1
        return j

    leg_no = next_leg(0)
    while True:
        moves = {}
        for a, r in routes.items():
            if route_at[a] + 1 < len(r):
                route_at[a] += 1
                moves[a] = r[route_at[a]]
        if leg_no < len(legs):
            a = legs[leg_no].agent
            if walk_at or (a not in moves and pos[a] == path[legs[leg_no].pickup]):
                carrier = a
                walk_at += 1
                moves[a] = walks[leg_no][walk_at]
        if not moves:
            if leg_no < len(legs):
                raise RelayError(f"leg {leg_no} never starts")
            break
        step(moves)
        if walk_at and walk_at == len(walks[leg_no]) - 1:
            leg_no, walk_at = next_leg(leg_no + 1), 0

    if carrier == -1 or pos[carrier] != instance.path.target:
        raise RelayError("data never reached t")
    if any(e < 0 for e in energy):
        raise RelayError("final energies are not componentwise non-negative")

    visited = {v for p in positions for v in p}
    full_path = path_walk(0, instance.path.last)
    missing = [v for v in full_path if v not in visited]
    if missing:
        raise RelayError(f"visited vertices do not contain the path (missing {missing[0]})")
    seen = {instance.path.source}
    queue = deque(seen)
    while queue:
        u = queue.popleft()
        for v, _ in g.adjacency[u]:
            if v in visited and v not in seen:
                seen.add(v)
                queue.append(v)
    if instance.path.target not in seen:
        raise RelayError("s and t are not connected through visited vertices")

    return FeasibilitySuite(g, tuple(positions), tuple(energies), tuple(carriers))


def relax_instance(instance: DeliveryInstance) -> DeliveryInstance:
    """The same instance on the unit relaxation of its graph.

    Every positive path edge becomes a chain of unit edges whose interior
    vertices are new hand-over positions; zero-weight edges are contracted.
    """
    path = instance.path.vertices
    r = relax(instance.graph, keep=zip(path, path[1:]))
    walk = [r.vertex_map[path[0]]]
    for a, b in zip(path, path[1:]):
        chain = r.chain(a, b)
        if chain is None:
            raise GraphError(f"path edge {a}-{b} collapses into a loop under contraction")
        for v in chain[1:]:
            if v != walk[-1]:
                walk.append(v)
    if len(set(walk)) != len(walk):
        raise GraphError("contracting zero-weight edges makes the path non-simple")
    new_path = PathRef.from_graph(r.graph, walk)
    agents = tuple(r.vertex_map[q] for q in instance.agents)
    return DeliveryInstance(r.graph, new_path, agents, instance.budgets)
