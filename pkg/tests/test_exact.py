import pytest

from helpers import unit_path, weighted_path
from oracles import brute_exact, random_corpus
from relay import validate_schedule
from relay.errors import InfeasibleInstanceError, OracleCapacityError
from relay.instance_gen import gen_prop1
from relay.solvers import exact_decision, exact_opt, proof_diagnostics
from relay.solvers.exact import ENV_MAX_K, oracle_capacity


def midpoint_instance():
    # W=4 unit path, q1 at s, q2 on a pendant one edge off the midpoint
    return unit_path(4, (0, 5), extra=((2, 5, 1),))


def test_decision_single_agent_boundary():
    inst = unit_path(5, (0,))
    assert exact_decision(inst, 5)
    assert not exact_decision(inst, 4)


def test_decision_midpoint():
    inst = midpoint_instance()
    assert exact_decision(inst, 3)
    assert not exact_decision(inst, 2)


def test_opt_single_agent():
    res = exact_opt(unit_path(5, (0,)))
    assert res.range == 5
    assert (res.bounds.d_star, res.bounds.b_star) == (0, 5)


def test_opt_midpoint():
    inst = midpoint_instance()
    res = exact_opt(inst)
    assert res.range == 3
    assert (res.bounds.d_star, res.bounds.b_star) == (1, 2)
    assert validate_schedule(inst, res).ok


def test_opt_prop1():
    res = exact_opt(gen_prop1(100, 10))
    assert res.range == 11


def test_capacity(monkeypatch):
    inst = unit_path(3, (0,) * 5)
    with pytest.raises(OracleCapacityError):
        exact_opt(inst, max_k=4)
    monkeypatch.setenv(ENV_MAX_K, "3")
    assert oracle_capacity() == 3
    with pytest.raises(OracleCapacityError):
        exact_decision(inst, 3)
    monkeypatch.delenv(ENV_MAX_K)
    assert oracle_capacity() == 20


def test_infeasible():
    from relay import DeliveryInstance, PathRef, WeightedGraph

    g = WeightedGraph(3, ((0, 1, 1),))
    inst = DeliveryInstance(g, PathRef.from_graph(g, [0, 1]), (2,))
    with pytest.raises(InfeasibleInstanceError):
        exact_opt(inst)


def test_zero_weight_path_edges():
    inst = weighted_path((0, 3, 0, 2), (0, 4))
    res = exact_opt(inst)
    assert res.range == brute_exact(inst)
    assert validate_schedule(inst, res).ok


def test_matches_brute_force_and_is_tight():
    for inst in random_corpus(150, seed=11, max_n=9, max_k=4, max_weight=5):
        if len(inst.path) > 7:
            continue
        res = exact_opt(inst)
        assert res.range == brute_exact(inst)
        assert validate_schedule(inst, res).ok
        assert exact_decision(inst, res.range)
        assert not exact_decision(inst, res.range - 1)
        b = res.bounds
        assert max(b.d_star, b.b_star) <= res.range


def test_decision_is_monotone():
    for inst in random_corpus(40, seed=5, max_n=10, max_k=5):
        R = exact_opt(inst).range
        answers = [exact_decision(inst, r) for r in range(0, R + 4)]
        assert answers == [r >= R for r in range(0, R + 4)]


def test_proof_diagnostics_single_agent():
    inst = unit_path(4, (0,))
    diag = proof_diagnostics(inst, exact_opt(inst))
    assert diag.d_b == 0
    assert diag.chain_holds


def test_proof_diagnostics_needs_bounds():
    inst = unit_path(4, (0,))
    from relay.solvers import greedy1

    with pytest.raises(ValueError):
        proof_diagnostics(inst, greedy1(inst))
