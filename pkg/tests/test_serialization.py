import pytest

from helpers import unit_path
from relay.errors import ParseError
from relay.instance_gen import (
    deserialize_instance,
    deserialize_result,
    gen_random,
    read_instance,
    read_result,
    serialize,
    write_instance,
    write_result,
)
from relay.instance_gen.serialization import is_relaxed
from relay.solvers import exact_opt, matching_sweep


def test_instance_round_trip(tmp_path):
    inst = gen_random(9, 3, 3, 4, seed=1).with_budgets((5, 6, 7))
    f = tmp_path / "x.ddi"
    write_instance(inst, f)
    back = read_instance(f)
    assert back.graph == inst.graph
    assert back.path == inst.path
    assert back.agents == inst.agents
    assert back.budgets == (5, 6, 7)


def test_result_round_trip(tmp_path):
    inst = gen_random(9, 3, 3, 4, seed=2)
    res = matching_sweep(inst)
    f = tmp_path / "x.dds"
    write_result(res, f)
    back = read_result(f, inst)
    assert back.schedule == res.schedule
    assert back.range == res.range
    assert back.per_agent_cost == res.per_agent_cost
    assert back.parameters == res.parameters
    assert not is_relaxed(f.read_text())


def test_relaxed_flag():
    inst = unit_path(3, (0,))
    assert is_relaxed(serialize(exact_opt(inst), relaxed=True))


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[1, 2]",
        '{"edges": [], "path": [0], "agents": [0]}',
        '{"vertices": 2, "edges": [[0, 1]], "path": [0, 1], "agents": [0]}',
        '{"vertices": 2, "edges": [[0, 1, -1]], "path": [0, 1], "agents": [0]}',
        '{"vertices": 2, "edges": [[0, 1, 1]], "path": [0, 1], "agents": ["a"]}',
        '{"vertices": 2, "edges": [[0, 1, 1]], "path": [0, 1], "agents": [0], "budgets": "x"}',
    ],
)
def test_bad_instances(text):
    with pytest.raises(ParseError):
        deserialize_instance(text)


def test_bad_result():
    inst = unit_path(2, (0,))
    with pytest.raises(ParseError):
        deserialize_result('{"legs": [[0, 0]], "range": 2, "solver": "x"}', inst)
    with pytest.raises(ParseError):
        deserialize_result('{"legs": [], "solver": "x"}', inst)
