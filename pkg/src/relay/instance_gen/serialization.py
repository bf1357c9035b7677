"""JSON interchange for instances (``.ddi``) and solutions (``.dds``).

Instance documents carry ``vertices``, ``edges`` (``[u, v, w]`` triples),
``path``, ``agents`` and optionally ``budgets``. Solution documents carry
``legs`` (``[agent, pickup_index, drop_index]``), ``range`` and ``solver``,
plus ``parameters`` and ``relaxed`` when set.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from relay.delivery_model import DeliveryInstance, Leg, Schedule, SolveResult
from relay.errors import GraphError, ParseError
from relay.graph_core import PathRef, WeightedGraph

INSTANCE_SUFFIX = ".ddi"
SOLUTION_SUFFIX = ".dds"


def _dump(doc: dict[str, Any]) -> str:
    lines = [f"  {json.dumps(k)}: {json.dumps(v, separators=(',', ':'))}" for k, v in doc.items()]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def serialize(obj: DeliveryInstance | SolveResult, *, relaxed: bool = False) -> str:
    if isinstance(obj, DeliveryInstance):
        doc: dict[str, Any] = {
            "vertices": obj.graph.vertex_count,
            "edges": [list(e) for e in obj.graph.edges],
            "path": list(obj.path.vertices),
            "agents": list(obj.agents),
        }
        if obj.budgets is not None:
            doc["budgets"] = list(obj.budgets) if isinstance(obj.budgets, tuple) else obj.budgets
        return _dump(doc)
    if isinstance(obj, SolveResult):
        doc = {
            "legs": [[leg.agent, leg.pickup, leg.drop] for leg in obj.schedule],
            "range": obj.range,
            "solver": obj.solver_name,
        }
        if obj.parameters:
            doc["parameters"] = obj.parameters
        if relaxed:
            doc["relaxed"] = True
        return _dump(doc)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _load(text: str) -> dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    return doc


def _field(doc: dict[str, Any], name: str, kind: type | tuple[type, ...]) -> Any:
    if name not in doc:
        raise ParseError(f"missing field {name!r}")
    value = doc[name]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ParseError(f"field {name!r} has the wrong type")
    return value


def _int_list(doc: dict[str, Any], name: str) -> list[int]:
    values = _field(doc, name, list)
    for i, v in enumerate(values):
        if not isinstance(v, int) or isinstance(v, bool):
            raise ParseError(f"field {name!r}[{i}] must be an integer")
    return values


def deserialize_instance(text: str) -> DeliveryInstance:
    doc = _load(text)
    n = _field(doc, "vertices", int)
    raw_edges = _field(doc, "edges", list)
    edges = []
    for i, e in enumerate(raw_edges):
        if (
            not isinstance(e, list)
            or len(e) != 3
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise ParseError(f"field 'edges'[{i}] must be [u, v, w]")
        edges.append(tuple(e))
    path = _int_list(doc, "path")
    agents = _int_list(doc, "agents")
    budgets = doc.get("budgets")
    if isinstance(budgets, list):
        budgets = tuple(_int_list(doc, "budgets"))
    elif budgets is not None and (not isinstance(budgets, int) or isinstance(budgets, bool)):
        raise ParseError("field 'budgets' must be an integer or a list of integers")
    try:
        graph = WeightedGraph(n, tuple(edges))
        return DeliveryInstance(graph, PathRef.from_graph(graph, path), tuple(agents), budgets)
    except GraphError as exc:
        raise ParseError(f"invalid instance: {exc}") from None


def deserialize_result(text: str, instance: DeliveryInstance) -> SolveResult:
    """Read a solution; fetch distances and costs are recomputed from ``instance``.

    Legs that reference unknown agents or positions are kept as given (with
    zero fetch) so that :func:`validate_schedule` can report them.
    """
    doc = _load(text)
    raw = _field(doc, "legs", list)
    rng = _field(doc, "range", int)
    solver = _field(doc, "solver", str)
    params = doc.get("parameters", "")
    legs = []
    costs: dict[int, int] = {}
    for i, leg in enumerate(raw):
        if (
            not isinstance(leg, list)
            or len(leg) != 3
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in leg)
        ):
            raise ParseError(f"field 'legs'[{i}] must be [agent, pickup_index, drop_index]")
        a, p, d = leg
        fetch = 0
        if 0 <= a < instance.k and 0 <= p <= instance.path.last and 0 <= d <= instance.path.last:
            f = instance.fetch[a][p]
            if f is not None:
                fetch = f
                costs[a] = f + instance.path.distance(p, d)
        legs.append(Leg(a, p, d, fetch))
    return SolveResult(Schedule(tuple(legs)), rng, costs, solver, str(params))


def is_relaxed(text: str) -> bool:
    return bool(_load(text).get("relaxed", False))


def write_instance(instance: DeliveryInstance, path: str | Path) -> None:
    Path(path).write_text(serialize(instance), encoding="utf-8")


def read_instance(path: str | Path) -> DeliveryInstance:
    return deserialize_instance(Path(path).read_text(encoding="utf-8"))


def write_result(result: SolveResult, path: str | Path, *, relaxed: bool = False) -> None:
    Path(path).write_text(serialize(result, relaxed=relaxed), encoding="utf-8")


def read_result(path: str | Path, instance: DeliveryInstance) -> SolveResult:
    return deserialize_result(Path(path).read_text(encoding="utf-8"), instance)
