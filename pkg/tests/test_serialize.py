from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from stokesgraph.actions import BraidWord
from stokesgraph.cellgraph import to_cell_graph
from stokesgraph.config import SectorConfig
from stokesgraph.enumeration import ChordDiagram, enum_junction_trees
from stokesgraph.graph import StandardGraph, validate_standard
from stokesgraph.loops import LoopSystem, word_action
from stokesgraph.serialize import ParseError, dumps, dumps_all, load, load_all, loads, loads_all, save

from conftest import CORPUS

DATA = Path(__file__).parent / "data"


def test_golden_mixed_graph(mixed):
    assert load(DATA / "mixed.sgraph") == mixed
    body = [l for l in (DATA / "mixed.sgraph").read_text().splitlines() if not l.startswith("#")]
    assert dumps(mixed).splitlines() == body


@pytest.mark.parametrize("cfg", CORPUS, ids=str)
def test_corpus_round_trip(cfg, corpus, tmp_path):
    gs = corpus[cfg]
    assert loads_all(dumps_all(gs)) == gs
    save(tmp_path / "c.sgraph", gs)
    assert load_all(tmp_path / "c.sgraph", "sgraph") == gs


def test_cell_round_trip(mixed):
    cg = to_cell_graph(mixed, 3)
    assert loads(dumps(cg), "cgraph") == cg


def test_other_kinds_round_trip():
    d = enum_junction_trees(SectorConfig(6, {0, 3}))[5]
    assert loads(dumps(d)) == d
    w = BraidWord.parse("1^+2,2^-1")
    assert loads(dumps(w)) == w
    sys = word_action(LoopSystem.initial(SectorConfig(6, {0, 3})), BraidWord.parse("1^+1,4^-1"))
    assert loads(dumps(sys)) == sys


def test_errors_name_line_and_field(mixed):
    text = dumps(mixed).replace("rotation 1 : 0 R2 R3 R4", "rotation 1 : 0 Rx R3 R4")
    with pytest.raises(ParseError) as ei:
        loads(text)
    assert ei.value.line == 6 and ei.value.field == "rotation"
    with pytest.raises(ParseError) as ei:
        loads(dumps(mixed).replace("n 6", "size 6"))
    assert ei.value.line == 2 and ei.value.field == "size"


def test_version_and_kind_checked(mixed):
    with pytest.raises(ParseError, match="unsupported version"):
        loads(dumps(mixed).replace("sgraph 1", "sgraph 2"))
    with pytest.raises(ParseError, match="expected a word"):
        loads(dumps(mixed), "word")
    with pytest.raises(ParseError, match="one document"):
        loads(dumps_all([mixed, mixed]))


def test_rays_field_must_agree(mixed):
    with pytest.raises(ParseError, match="ray 5"):
        loads(dumps(mixed).replace("5@0", "5@1"))


def test_parse_keeps_semantics_separate():
    # two adjacent subdominant sectors: syntactically fine, rejected by validation
    text = "format sgraph 1\nn 6\nsubdominant 0 1\nvertices 0\nrotation 0 : R0 R1 R2 R3 R4 R5\n"
    g = loads(text)
    assert isinstance(g, StandardGraph)
    assert validate_standard(g)


def test_chords_parse_without_validation():
    d = loads("format chords 1\nm 6\nchord 0 3\nchord 1 4\n")
    assert d == ChordDiagram(6, [(0, 3), (1, 4)])
    assert d.violations()


def _edits(text: str):
    lines = text.splitlines()
    for i, line in enumerate(lines):
        yield "\n".join(lines[:i] + lines[i + 1 :])
        toks = line.split()
        for k in range(len(toks)):
            for repl in ("", "9", "-1", "R9", "x", toks[k] + toks[k]):
                t = toks[:k] + ([repl] if repl else []) + toks[k + 1 :]
                yield "\n".join(lines[:i] + [" ".join(t)] + lines[i + 1 :])


def test_single_edit_corruptions(mixed):
    # every corruption either parses or raises ParseError, never anything else
    outcomes = {"parsed": 0, "rejected": 0}
    for text in _edits(dumps(mixed)):
        try:
            g = loads(text)
        except ParseError:
            outcomes["rejected"] += 1
        else:
            outcomes["parsed"] += 1
            if isinstance(g, StandardGraph):
                validate_standard(g)
    assert outcomes["rejected"] > 0 and outcomes["parsed"] > 0


@given(st.text(alphabet="format sgraph1\n:R0-@#", max_size=60))
def test_random_text_only_raises_parse_error(text):
    try:
        loads_all(text)
    except ParseError:
        pass
