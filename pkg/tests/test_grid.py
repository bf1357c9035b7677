import pytest
from hypothesis import given, settings, strategies as st

from helpers import unit_path, weighted_path
from relay.errors import FractionalLandingError, GraphError
from relay.solvers import selection_grid, wk_beta
from relay.solvers.grid import beta_range


@pytest.mark.parametrize(
    "W, beta, offsets, segments",
    [
        (6, 2, (0, 2, 4), (2, 2, 2)),
        (7, 2, (0, 1, 3, 5), (1, 2, 2, 2)),
        (5, 5, (0,), (5,)),
        (5, 1, (0, 1, 2, 3, 4), (1, 1, 1, 1, 1)),
    ],
)
def test_unit_grids(W, beta, offsets, segments):
    g = selection_grid(unit_path(W, (0,)).path, beta)
    assert g.offsets == offsets
    assert g.segment_lengths == segments


def test_beta_out_of_range():
    path = unit_path(4, (0,)).path
    for beta in (0, 5):
        with pytest.raises(GraphError):
            selection_grid(path, beta)


def test_weighted_snaps_forward():
    # offsets 0,3,4,7 ; beta 3 from t=7: target 4 is a vertex, then 1 -> snaps to 3
    path = weighted_path((3, 1, 3), (0,)).path
    g = selection_grid(path, 3)
    assert g.offsets == (0, 3, 4)
    assert max(g.segment_lengths) <= 3
    with pytest.raises(FractionalLandingError):
        selection_grid(path, 3, snap=False)


def test_heavy_edge_is_own_segment():
    path = weighted_path((1, 5, 1), (0,)).path
    g = selection_grid(path, 2)
    assert g.offsets == (0, 1, 6)
    assert g.segment_lengths == (1, 5, 1)


def test_segments_end_at_t():
    inst = unit_path(7, (0,))
    g = selection_grid(inst.path, 3)
    assert g.segments(inst.path) == [(0, 1), (1, 4), (4, 7)]


def test_beta_range_and_wk():
    inst = unit_path(10, (0, 0, 0))
    assert list(beta_range(inst)) == list(range(4, 11))
    assert wk_beta(inst) == 4
    # weighted: ceil(8/3)=3 needs four points here, 4 fits
    inst = weighted_path((2, 2, 2, 2), (0, 0, 0))
    assert wk_beta(inst) == 4


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=1, max_size=12), st.data())
def test_grid_invariants(weights, data):
    inst = weighted_path(weights, (0,))
    W = inst.W
    if W == 0:
        return
    beta = data.draw(st.integers(1, W))
    g = selection_grid(inst.path, beta)
    assert g.positions[0] == 0
    assert list(g.positions) == sorted(set(g.positions))
    assert sum(g.segment_lengths) == W
    for (p, d), length in zip(g.segments(inst.path), g.segment_lengths):
        # longer than beta only when a single edge is
        assert length <= beta or d == p + 1
    if all(w == 1 for w in weights):
        assert len(g) == -(-W // beta)
        assert g.segment_lengths[1:] == (beta,) * (len(g) - 1)
        assert g.segment_lengths[0] == (W % beta or beta)
