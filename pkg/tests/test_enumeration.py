import itertools
from functools import lru_cache

import pytest

from stokesgraph.config import SectorConfig
from stokesgraph.enumeration import (
    ChordDiagram,
    enum_chord_diagrams,
    enum_junction_trees,
    enum_standard_graphs,
    graph_from_diagram,
    junction_tree,
    schroeder,
)
from stokesgraph.graph import junctions, validate_standard
from stokesgraph.verify import _junction_tree_oracle

from conftest import CORPUS


@lru_cache(maxsize=None)
def bracketings(k: int) -> int:
    """Brute force: bracketings of k+1 letters, any arity at least two."""
    if k == 0:
        return 1
    total = 0
    # split k+1 leaves into an ordered sequence of at least two nonempty blocks
    n = k + 1
    for cuts in range(1, n):
        for pos in itertools.combinations(range(1, n), cuts):
            sizes = [b - a for a, b in zip((0, *pos), (*pos, n))]
            p = 1
            for s in sizes:
                p *= bracketings(s - 1)
            total += p
    return total


def test_schroeder_sequence():
    assert [schroeder(k) for k in range(8)] == [1, 1, 3, 11, 45, 197, 903, 4279]


def test_schroeder_matches_bracketings():
    for k in range(7):
        assert schroeder(k) == bracketings(k)


def test_schroeder_negative():
    with pytest.raises(ValueError):
        schroeder(-1)


@pytest.mark.parametrize("m", range(3, 10))
def test_dissection_count(m):
    assert len(enum_chord_diagrams(m)) == schroeder(m - 2)


def test_dissections_are_valid_and_distinct():
    ds = enum_chord_diagrams(7)
    assert len(set(ds)) == len(ds)
    assert all(d.violations() == [] for d in ds)


def test_chord_violations():
    assert ChordDiagram(6, [(0, 1)]).violations() == ["chord (0, 1) joins adjacent vertices"]
    assert ChordDiagram(6, [(0, 3), (1, 4)]).violations() == ["chords (0, 3) and (1, 4) cross"]
    assert "joins subdominant faces" in ChordDiagram(6, [(0, 3)]).violations(SectorConfig(6, {0, 3}))[0]


def test_regions_partition_polygon():
    d = ChordDiagram(6, [(0, 2), (2, 5)])
    regions = d.regions()
    assert len(regions) == 3
    assert sum(len(r) - 2 for r in regions) == 6 - 2


@pytest.mark.parametrize("cfg", CORPUS, ids=str)
def test_junction_trees_match_oracle(cfg):
    assert len(enum_junction_trees(cfg)) == _junction_tree_oracle(cfg.n, cfg.subdominant)


def test_junction_trees_six_two_opposite():
    assert len(enum_junction_trees(SectorConfig(6, {0, 3}))) == 36


GOLDEN = {
    (6, (0, 3)): (1, 36, 165),
    (5, (0, 2)): (1, 8, 21),
    (6, (0, 2, 4)): (1, 20, 81),
}


@pytest.mark.parametrize("key", GOLDEN, ids=str)
def test_standard_graph_counts(key):
    cfg = SectorConfig(*key)
    assert tuple(len(enum_standard_graphs(cfg, b)) for b in range(3)) == GOLDEN[key]


@pytest.mark.parametrize("cfg", CORPUS, ids=str)
def test_enumerated_graphs_valid_and_bounded(cfg):
    for b in (0, 1, 2):
        gs = enum_standard_graphs(cfg, b)
        assert len({g.canonical for g in gs}) == len(gs)
        for g in gs:
            assert validate_standard(g) == []
            assert g.max_chain() <= b


@pytest.mark.parametrize("cfg", CORPUS, ids=str)
def test_tree_round_trip(cfg):
    for d in enum_junction_trees(cfg):
        g = graph_from_diagram(cfg, d)
        assert validate_standard(g) == []
        assert junction_tree(g) == d
        assert len(junctions(g)) == len(d.chords) + 1


def test_bound_zero_is_star():
    (g,) = enum_standard_graphs(SectorConfig(6, {0, 3}), 0)
    assert g.vertices == (0,) and g.degree(0) == 6
