import pytest
from hypothesis import given, strategies as st

from stokesgraph.actions import BraidWord, apply_word
from stokesgraph.config import SectorConfig
from stokesgraph.contraction import (
    ContractionError,
    Trace,
    canonical_form,
    exchange_YV,
    merge_YY,
    to_ivy,
    to_one_y,
    to_single_junction,
    y_to_v_with_I,
)
from stokesgraph.graph import (
    find_structure,
    is_ivy,
    junctions,
    star,
    structures,
    u_metric,
    validate_standard,
)

from conftest import CORPUS


def lemma_sites(g, kinds):
    """(vertex, j) with structures j_- and j at one vertex of the given kinds."""
    cfg = g.config
    out = []
    for j in cfg.dominant:
        jm = cfg.prev_dominant(j)
        a, b = find_structure(g, jm), find_structure(g, j)
        if a and b and a.junction == b.junction and sorted((a.kind, b.kind)) == sorted(kinds):
            out.append((a.junction, j))
    return out


def test_star_needs_nothing():
    g = star(SectorConfig(6, {0, 3}))
    w, h = to_ivy(g)
    assert len(w) == 0 and h == g
    w, h = to_single_junction(g)
    assert len(w) == 0 and h == g


def test_mixed_to_ivy(mixed):
    assert not is_ivy(mixed)
    tr = Trace()
    w, h = to_ivy(mixed, tr)
    assert len(w) > 0
    assert is_ivy(h)
    assert apply_word(mixed, w) == h
    assert tr.metrics == sorted(tr.metrics, reverse=True)


def test_mixed_to_star(mixed):
    w, h = to_single_junction(mixed)
    assert h == star(mixed.config)
    assert apply_word(mixed, w) == h


def test_lemma_requires_shared_junction(mixed):
    with pytest.raises(ContractionError):
        exchange_YV(mixed, 0, 1)


def test_lemma_requires_kinds(mixed):
    # labels 4 and 5 are an I and a Y at vertex 0
    with pytest.raises(ContractionError, match="lacks a V"):
        exchange_YV(mixed, 0, 5)
    with pytest.raises(ContractionError, match="two Y"):
        merge_YY(mixed, 0, 5)


def test_y_to_v_on_mixed(mixed):
    w, h = y_to_v_with_I(mixed, 0, 5)
    assert find_structure(h, 5).kind == "V"
    assert len(junctions(h)) == len(junctions(mixed)) - 1
    assert apply_word(mixed, w) == h


@pytest.mark.parametrize("cfg", CORPUS, ids=str)
def test_lemmas_on_corpus(cfg, corpus):
    seen = {"YV": 0, "IY": 0, "YY": 0}
    for g in corpus[cfg]:
        n0 = len(junctions(g))
        for u, j in lemma_sites(g, "YV"):
            w, h = exchange_YV(g, u, j)
            jm = cfg.prev_dominant(j)
            kinds = {find_structure(g, jm).kind, find_structure(g, j).kind}
            assert kinds == {find_structure(h, jm).kind, find_structure(h, j).kind}
            assert find_structure(h, jm).kind != find_structure(g, jm).kind
            assert len(junctions(h)) == n0
            assert apply_word(g, w) == h
            seen["YV"] += 1
        for u, j in lemma_sites(g, "IY"):
            w, h = y_to_v_with_I(g, u, j)
            assert len(junctions(h)) == n0 - 1
            assert apply_word(g, w) == h
            seen["IY"] += 1
        for u, j in lemma_sites(g, "YY"):
            w, h = merge_YY(g, u, j)
            assert len(junctions(h)) == n0 - 1
            assert validate_standard(h) == []
            seen["YY"] += 1
    assert sum(seen.values()) > 0


@pytest.mark.parametrize("cfg", CORPUS, ids=str)
def test_ivy_on_corpus(cfg, corpus):
    for g in corpus[cfg]:
        tr = Trace()
        w, h = to_ivy(g, tr)
        assert all(b < a for a, b in zip(tr.metrics, tr.metrics[1:]))
        assert apply_word(g, w) == h
        assert not junctions(h) or is_ivy(h)
        assert tr.max_vertices >= len(g.vertices)


def test_single_junction_rejects_alternating():
    cfg = SectorConfig(6, {0, 2, 4})
    with pytest.raises(ContractionError, match="no adjacent dominant pair"):
        to_single_junction(star(cfg))


def test_one_y_rejects_adjacent_dominant(mixed):
    with pytest.raises(ContractionError):
        to_one_y(mixed)


def test_one_y_outputs(corpus):
    cfg = SectorConfig(6, {0, 2, 4})
    for g in corpus[cfg]:
        w, h = to_one_y(g)
        assert apply_word(g, w) == h
        ys = [s for s in structures(h).values() if s.kind == "Y"]
        assert len(ys) <= 1
        if ys:
            assert ys[0].j == min(cfg.dominant)
        assert len(junctions(h)) <= 2


@pytest.mark.parametrize("cfg", [SectorConfig(6, {0, 3}), SectorConfig(5, {0, 2})], ids=str)
def test_everything_contracts_to_star(cfg, corpus):
    for g in corpus[cfg]:
        w, h = to_single_junction(g)
        assert h == star(cfg)
        assert apply_word(g, w) == h
        # the inverse word rebuilds the input
        assert apply_word(h, w.inverse()) == g
        assert canonical_form(g) == h


@given(st.data())
def test_metric_zero_iff_single_junction(corpus, data):
    cfg = data.draw(st.sampled_from(CORPUS))
    g = data.draw(st.sampled_from(corpus[cfg]))
    for u in junctions(g):
        assert (u_metric(g, u) == 0) == (len(junctions(g)) == 1)
