import csv
import io
from fractions import Fraction

from relay.bench import HEADER, bench_instance, run_bench, to_csv
from relay.instance_gen import gen_prop1, gen_random
from relay.solvers import exact_opt, greedy1, matching_sweep


def corpus():
    return [(f"r{s}", gen_random(8, 3, 1 + s % 4, 5, s)) for s in range(12)]


def test_header():
    assert ",".join(HEADER) == "instance,W,k,greedy1,greedy_wk,matching,exact,ratio_g1,ratio_gwk,ratio_m"


def test_row_values():
    inst = gen_prop1(25, 5)
    row = bench_instance("p", inst, True)
    assert (row.greedy1, row.greedy_wk, row.matching, row.exact) == (21, 6, 6, 6)
    assert row.ratio("greedy1") == Fraction(21, 6)
    assert row.cells()[7] == "3.500"


def test_csv_reparses_consistently():
    rows = run_bench(corpus())
    parsed = list(csv.DictReader(io.StringIO(to_csv(rows))))
    assert len(parsed) == len(rows)
    for rec, (name, inst) in zip(parsed, corpus()):
        assert rec["instance"] == name
        exact = exact_opt(inst).range
        assert int(rec["exact"]) == exact
        assert int(rec["greedy1"]) == greedy1(inst).range
        assert int(rec["matching"]) == matching_sweep(inst).range
        for col, solver in (("ratio_g1", "greedy1"), ("ratio_m", "matching")):
            assert rec[col] == f"{int(rec[solver]) / exact:.3f}"
            assert float(rec[col]) >= 1
        assert float(rec["ratio_m"]) <= 3


def test_parallel_keeps_order():
    assert run_bench(corpus(), jobs=3) == run_bench(corpus(), jobs=1)


def test_failures_recorded_in_row():
    # agent in another component: every solver is infeasible
    from relay import DeliveryInstance, PathRef, WeightedGraph

    g = WeightedGraph(3, ((0, 1, 1),))
    inst = DeliveryInstance(g, PathRef.from_graph(g, [0, 1]), (2,))
    rows = run_bench([("bad", inst), ("ok", gen_random(6, 1, 2, 3, 0))])
    assert rows[0].greedy1 == "infeasible"
    assert rows[0].ratio("greedy1") is None
    assert isinstance(rows[1].exact, int)


def test_capacity_recorded(monkeypatch):
    monkeypatch.setenv("RELAY_ORACLE_MAX_K", "1")
    row = bench_instance("c", gen_random(6, 1, 3, 3, 0), True)
    assert row.exact == "capacity"
    assert row.cells()[7] == ""
