import pytest
from hypothesis import given, strategies as st

from stokesgraph.config import SectorConfig
from stokesgraph.graph import (
    GraphError,
    Ray,
    StandardGraph,
    bounded_face_count,
    canonicalize,
    find_structure,
    from_edges,
    is_ivy,
    junctions,
    normalize_rotation,
    relabeled,
    star,
    structures,
    u_metric,
    validate_standard,
    y_junctions,
)

from conftest import CORPUS, mixed_graph


def kinds(g):
    return {v.kind for v in validate_standard(g)}


class TestFig4:
    def test_valid(self, mixed):
        assert validate_standard(mixed) == []

    def test_structure_inventory(self, mixed):
        s = structures(mixed)
        assert sorted(s) == [1, 2, 4, 5]
        assert (s[1].kind, s[1].junction) == ("I", 1)
        assert (s[2].kind, s[2].junction) == ("V", 1)
        assert (s[4].kind, s[4].junction) == ("I", 0)
        assert (s[5].kind, s[5].junction, s[5].y_junction) == ("Y", 0, 2)

    def test_junctions_and_ivy(self, mixed):
        assert junctions(mixed) == [0, 1, 2]
        assert y_junctions(mixed) == {2}
        assert not is_ivy(mixed)

    def test_faces(self, mixed):
        # dart u -> v separates S_1 (left) from S_4 (right)
        assert mixed.sides(0, 1) == (4, 1)
        assert mixed.sides(1, 0) == (1, 4)
        assert mixed.is_double(0, 1)

    def test_metric(self, mixed):
        assert u_metric(mixed, 0) == 2 * 1 + 1 * 1
        assert u_metric(mixed, 1) == 1 * 1 + 1 * 2
        with pytest.raises(GraphError):
            u_metric(mixed, 99)


def test_star_basics():
    g = star(SectorConfig(6, {0, 3}))
    assert validate_standard(g) == []
    assert junctions(g) == [0]
    assert is_ivy(g)
    assert bounded_face_count(g) == 2  # ray stubs 2 and 5 have two dominant sides
    assert g.max_chain() == 0


def test_no_structure_without_consecutive_rays():
    cfg = SectorConfig(6, {0, 3})
    # rays 3 and 4 on different junctions: label 2 has no structure
    g = StandardGraph(cfg, {0: [1, Ray(0), Ray(1), Ray(2), Ray(3)], 1: [0, Ray(4), Ray(5)]})
    assert validate_standard(g) == []
    assert find_structure(g, 2) is None


class TestViolations:
    def test_side_rule(self):
        cfg = SectorConfig(6, {0, 3})
        # chord separating S_0 from S_3
        g = StandardGraph(cfg, {0: [1, Ray(1), Ray(2), Ray(3)], 1: [0, Ray(4), Ray(5), Ray(0)]})
        assert kinds(g) == {"side rule"}

    def test_adjacent_subdominant(self):
        g = star(SectorConfig(6, {2, 3}))
        assert "config" in kinds(g)

    def test_cyclic_order(self):
        cfg = SectorConfig(6, ())
        g = StandardGraph(cfg, {0: [Ray(0), Ray(2), Ray(1), Ray(3), Ray(4), Ray(5)]})
        assert kinds(g) == {"cyclic ray order"}

    def test_missing_ray(self):
        g = StandardGraph(SectorConfig(6, ()), {0: [Ray(i) for i in range(5)]})
        assert kinds(g) == {"structure"}

    def test_cycle(self):
        cfg = SectorConfig(6, ())
        g = StandardGraph(
            cfg,
            {0: [1, 2, Ray(0), Ray(1)], 1: [2, 0, Ray(2), Ray(3)], 2: [0, 1, Ray(4), Ray(5)]},
        )
        assert "tree" in kinds(g)

    def test_unpruned_vertex(self):
        cfg = SectorConfig(6, ())
        g = StandardGraph(cfg, {0: [1, Ray(1), Ray(2), Ray(3), Ray(4), Ray(5)], 1: [Ray(0), 0]})
        assert kinds(g) == {"normalization"}
        fixed = StandardGraph(cfg, normalize_rotation({v: list(es) for v, es in g.rotation.items()}))
        assert fixed == star(cfg)


def test_from_edges_recovers_embedding(mixed):
    unembedded = {v: sorted(es, key=repr) for v, es in mixed.rotation.items()}
    assert from_edges(mixed.config, unembedded) == mixed


def test_canonical_ignores_vertex_names(mixed):
    renamed = StandardGraph(
        mixed.config,
        {10 + v: [e if isinstance(e, Ray) else 10 + e for e in es] for v, es in mixed.rotation.items()},
    )
    assert canonicalize(renamed) == canonicalize(mixed)
    assert renamed == mixed and hash(renamed) == hash(mixed)


def test_canonical_separates_embeddings():
    cfg = SectorConfig(6, ())
    a = from_edges(cfg, {0: [1, Ray(0), Ray(1), Ray(2)], 1: [0, Ray(3), Ray(4), Ray(5)]})
    b = from_edges(cfg, {0: [1, Ray(5), Ray(0), Ray(1)], 1: [0, Ray(2), Ray(3), Ray(4)]})
    assert a != b


@given(st.data())
def test_corpus_graph_invariants(corpus, data):
    cfg = data.draw(st.sampled_from(CORPUS))
    g = data.draw(st.sampled_from(corpus[cfg]))
    assert relabeled(g) == g
    for j, s in structures(g).items():
        assert s.j == j
        assert g.degree(s.junction) >= 3
        if s.kind == "Y":
            assert g.degree(s.y_junction) == 3
    # side rule: every core edge or stub has a dominant side
    for v, es in g.rotation.items():
        for e in es:
            assert any(cfg.is_dominant(f) for f in g.sides(v, e))
