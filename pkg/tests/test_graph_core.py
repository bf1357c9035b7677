import pytest
from hypothesis import given, settings, strategies as st

from oracles import bfs_unit, floyd_warshall
from relay import PathRef, WeightedGraph, path_offset, shortest_distances, unit_relaxation
from relay.errors import GraphError
from relay.graph_core import dijkstra, relax, shortest_path, subdivide


def triangle():
    # a=0, b=1, c=2
    return WeightedGraph(3, ((0, 1, 1), (1, 2, 2), (0, 2, 5)))


def test_triangle_distance():
    table = shortest_distances(triangle(), [0])
    assert table.dist(0, 2) == 3
    assert table[0, 1] == 1


def test_self_distance_is_zero():
    g = triangle()
    for v in range(3):
        assert shortest_distances(g, [v]).dist(v, v) == 0


def test_disconnected_is_unreachable():
    g = WeightedGraph(2, ())
    assert shortest_distances(g, [0]).dist(0, 1) is None
    assert shortest_path(g, 0, 1) is None


def test_shortest_path_follows_cheap_route():
    assert shortest_path(triangle(), 0, 2) == [0, 1, 2]


def test_zero_weight_edges_are_free():
    g = WeightedGraph(3, ((0, 1, 0), (1, 2, 4)))
    assert dijkstra(g, 0) == [0, 0, 4]


@pytest.mark.parametrize(
    "edges",
    [((0, 0, 1),), ((0, 1, 1), (1, 0, 2)), ((0, 1, -1),), ((0, 5, 1),)],
)
def test_bad_graphs_rejected(edges):
    with pytest.raises(GraphError):
        WeightedGraph(2, edges)


def test_path_offsets():
    g = WeightedGraph(6, tuple((i, i + 1, 1) for i in range(5)))
    p = PathRef.from_graph(g, range(6))
    assert path_offset(p, 4) == 4
    assert path_offset(p, 0) == 0
    g2 = WeightedGraph(3, ((0, 1, 2), (1, 2, 3)))
    assert path_offset(PathRef.from_graph(g2, [0, 1, 2]), 2) == 5
    with pytest.raises(GraphError):
        path_offset(p, 6)


def test_path_must_use_edges_and_be_simple():
    g = triangle()
    with pytest.raises(GraphError):
        PathRef.from_graph(WeightedGraph(3, ((0, 1, 1),)), [0, 2])
    with pytest.raises(GraphError):
        PathRef.from_graph(g, [0, 1, 0])


def test_relaxation_subdivides():
    g, vmap = unit_relaxation(WeightedGraph(2, ((0, 1, 3),)))
    assert g.vertex_count == 4
    assert all(w == 1 for _, _, w in g.edges)
    assert bfs_unit(g, vmap[0])[vmap[1]] == 3


def test_relaxation_contracts_zero_edges():
    g, vmap = unit_relaxation(WeightedGraph(2, ((0, 1, 0),)))
    assert g.vertex_count == 1
    assert vmap[0] == vmap[1]


def test_relaxation_fixed_point_on_unit_graph():
    g = WeightedGraph(4, ((0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)))
    r, vmap = unit_relaxation(g)
    assert vmap == (0, 1, 2, 3)
    assert sorted(r.edges) == sorted(g.edges)


def test_relax_keeps_requested_parallel_edge():
    # 0-1 (0) contracts, making 0-2 (3) and 1-2 (1) parallel
    g = WeightedGraph(3, ((0, 1, 0), (0, 2, 3), (1, 2, 1)))
    r = relax(g, keep=[(0, 2)])
    assert len(r.chain(0, 2)) == 4
    assert len(r.chain(1, 2)) == 2


def test_subdivide_preserves_ids_and_zero_edges():
    g = WeightedGraph(3, ((0, 1, 0), (1, 2, 2)))
    s = subdivide(g).graph
    assert s.vertex_count == 4
    assert s.weight(0, 1) == 0
    assert dijkstra(s, 0)[2] == 2


@st.composite
def graphs(draw, max_n=10, max_w=6):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return WeightedGraph(n, tuple((u, v, draw(st.integers(0, max_w))) for u, v in chosen))


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_dijkstra_matches_floyd(g):
    fw = floyd_warshall(g)
    for s in range(g.vertex_count):
        got = [float("inf") if d is None else d for d in dijkstra(g, s)]
        assert got == fw[s]


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_unit_relaxation_preserves_distances(g):
    r, vmap = unit_relaxation(g)
    fw = floyd_warshall(g)
    for u in range(g.vertex_count):
        hops = bfs_unit(r, vmap[u])
        assert [hops[vmap[v]] for v in range(g.vertex_count)] == fw[u]
