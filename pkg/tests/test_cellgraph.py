import pytest
from hypothesis import given, strategies as st

from stokesgraph.cellgraph import (
    IN,
    OUT,
    CellGraph,
    bounded_faces,
    to_cell_graph,
    to_standard,
    validate_cell,
)
from stokesgraph.config import SectorConfig
from stokesgraph.graph import GraphError, bounded_face_count, star

from conftest import CORPUS


def core_doubles(cg):
    return [e for e in cg.double_edges() if set(e) & cg.core]


def test_star_cell_graph():
    cfg = SectorConfig(6, {0, 3})
    cg = to_cell_graph(star(cfg), 2)
    assert validate_cell(cg) == []
    assert cg.window == 2
    assert len(cg.vertices) == 1 + 6 * 2
    # rays 2 and 5 are double all the way out: one bounded face per window step
    assert bounded_faces(cg) == 4
    assert len(core_doubles(cg)) == 2 == bounded_face_count(star(cfg))


def test_half_edges_follow_label_order():
    cg = to_cell_graph(star(SectorConfig(6, ())), 1)
    hs = cg.half_edges(0)
    assert [(k, d) for k, d, _ in hs] == [(k, d) for k in range(6) for d in (OUT, IN)]


def test_window_must_be_positive():
    with pytest.raises(ValueError):
        to_cell_graph(star(SectorConfig(6, {0, 3})), 0)


def test_duplicate_out_edge_rejected():
    cfg = SectorConfig(5, ())
    with pytest.raises(GraphError):
        CellGraph(cfg, [0, 1, 2], [(0, 1, 1), (0, 2, 1)], range(5), [[1]] * 5)


def test_bad_face_assignment_is_reported():
    cg = to_cell_graph(star(SectorConfig(6, {0, 3})), 1)
    bad = CellGraph(cg.config, cg.vertices, cg.edges, (3, 1, 2, 0, 4, 5), cg.rays)
    assert any(v.kind == "face assignment" for v in validate_cell(bad))


def test_to_standard_needs_standard_order():
    cg = to_cell_graph(star(SectorConfig(6, ())), 1)
    swapped = CellGraph(cg.config, cg.vertices, cg.edges, (1, 0, 2, 3, 4, 5), cg.rays)
    with pytest.raises(GraphError):
        to_standard(swapped)


@given(st.data())
def test_round_trip_and_face_count(corpus, data):
    cfg = data.draw(st.sampled_from(CORPUS))
    g = data.draw(st.sampled_from(corpus[cfg]))
    w = data.draw(st.integers(1, 3))
    cg = to_cell_graph(g, w)
    assert validate_cell(cg) == []
    assert to_standard(cg) == g
    assert len(core_doubles(cg)) == bounded_face_count(g)
    if cfg.is_alternating:
        assert bounded_faces(cg) == bounded_face_count(g)
    # one outgoing and one incoming half-edge per dominant label at deep ray poles
    if w >= 2:
        mid = cg.rays[0][0]
        labels = {k for k, _, _ in cg.half_edges(mid)}
        assert labels <= set(cfg.dominant)
