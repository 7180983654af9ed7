"""Acceptance suites shared by the CLI and the test-suite."""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable

from stokesgraph.actions import BraidWord, act_basic, act_squared, apply_word
from stokesgraph.cellgraph import TruncationError, to_cell_graph, to_standard
from stokesgraph.config import SectorConfig
from stokesgraph.contraction import Trace, to_ivy, to_one_y, to_single_junction
from stokesgraph.enumeration import enum_chord_diagrams, enum_junction_trees, enum_standard_graphs
from stokesgraph.graph import bounded_face_count, find_structure, is_ivy, junctions, star, validate_standard
from stokesgraph.loops import LoopSystem, format_word, verify_commutation, word_action
from stokesgraph.orbits import classify_components
from stokesgraph.serialize import dumps, loads

CORPUS_CONFIGS = ((5, (0, 2)), (6, (0, 3)), (6, (0, 2, 4)))


@dataclass
class Result:
    name: str
    ok: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}: {self.detail} ({self.seconds:.2f}s)"


def _corpus(max_chain: int = 1):
    for n, sub in CORPUS_CONFIGS:
        cfg = SectorConfig(n, sub)
        yield cfg, enum_standard_graphs(cfg, max_chain)


def check_schroeder() -> Result:
    expected = {4: 1, 5: 3, 6: 11, 7: 45, 8: 197}
    got = {m: len(enum_chord_diagrams(m)) for m in expected}
    ok = got == expected
    detail = f"counts for m=4..8: {list(got.values())}, expected {list(expected.values())}"
    return Result("schroeder-counts", ok, detail)


def check_action_oracle(window: int = 3) -> Result:
    checked = 0
    for cfg, graphs in _corpus(1):
        for g in graphs:
            for j in cfg.dominant:
                for sign in (1, -1):
                    cg = to_cell_graph(g, window)
                    try:
                        twice = to_standard(act_basic(act_basic(cg, j, sign), j, sign))
                    except TruncationError as e:
                        return Result("action-oracle", False, f"{cfg} j={j}: {e}")
                    fast = act_squared(g, j, sign)
                    if twice != fast:
                        return Result("action-oracle", False, f"{cfg} j={j} sign={sign}: {g!r}")
                    if (fast == g) != (find_structure(g, j) is None):
                        return Result("action-oracle", False, f"{cfg} j={j}: identity iff no structure fails on {g!r}")
                    checked += 1
    return Result("action-oracle", True, f"{checked} (graph, label, sign) cases agree")


def check_contraction() -> Result:
    runs = 0
    for cfg, graphs in _corpus(1):
        for g in graphs:
            tr = Trace()
            w, h = to_ivy(g, tr)
            steps = tr.metrics
            if any(b >= a for a, b in zip(steps, steps[1:])):
                return Result("contraction", False, f"metric not strictly decreasing on {g!r}: {steps}")
            if len(w) != max(len(steps) - 1, 0) or apply_word(g, w) != h:
                return Result("contraction", False, f"word does not replay on {g!r}")
            if junctions(h) and not is_ivy(h):
                return Result("contraction", False, f"not ivy: {h!r}")
            runs += 1
    cfg = SectorConfig(6, (0, 3))
    forms = set()
    for g in enum_standard_graphs(cfg, 1):
        w, h = to_single_junction(g)
        if apply_word(g, w) != h or len(junctions(h)) != 1:
            return Result("contraction", False, f"single-junction contraction fails on {g!r}")
        forms.add(h.canonical)
    if len(forms) != 1:
        return Result("contraction", False, f"{len(forms)} single-junction forms for {cfg}")
    return Result("contraction", True, f"{runs} ivy contractions certified; {cfg} contracts to one class")


def check_components() -> Result:
    cfg = SectorConfig(6, (0, 2, 4))
    notes = []
    for b in (0, 1, 2):
        graphs = enum_standard_graphs(cfg, b)
        for g in graphs:
            c = bounded_face_count(g)
            for j in cfg.dominant:
                for sign in (1, -1):
                    if bounded_face_count(act_squared(g, j, sign)) != c:
                        return Result("components", False, f"count changes under {j}^{2 * sign:+d} on {g!r}")
        report = classify_components(cfg, b)
        keys = [c.key[0] for c in report.classes]
        if len(set(keys)) != len(keys):
            return Result("components", False, f"max_chain={b}: two classes share a face count")
        for c in report.classes:
            if any(bounded_face_count(g) != c.key[0] for g in c.members):
                return Result("components", False, f"max_chain={b}: class {c.key[0]} mixes counts")
        if sorted(keys) != sorted({bounded_face_count(g) for g in graphs}):
            return Result("components", False, f"max_chain={b}: classes do not cover every count")
        zero = [c for c in report.classes if c.key[0] == 0]
        if len(zero) != 1 or zero[0].key[1] != star(cfg).canonical:
            return Result("components", False, f"max_chain={b}: count-0 class is not represented by the star")
        notes.append(f"b={b}: {len(keys)} classes")
    return Result("components", True, "; ".join(notes))


def check_loops() -> Result:
    full = LoopSystem.initial(SectorConfig(6))
    got = str(word_action(full, BraidWord.parse("3^-1,2^+1,3^+1")))
    want = "(a, b, ceC, cEdeC, c, f)"
    if got != want:
        return Result("loop-algebra", False, f"B_3^-1 B_2 B_3 gives {got}, want {want}")
    five = word_action(full, BraidWord.parse("0^-1,5^+1,0^+1"))
    if format_word(five[0]) != "fBabF" or format_word(five[1]) != "f" or format_word(five[5]) != "fbF":
        return Result("loop-algebra", False, f"B_0^-1 B_5 B_0 gives {five}")
    for j in range(6):
        jm = (j - 1) % 6
        left = word_action(full, BraidWord([(j, -1), (jm, 1), (j, 1)]))
        right = word_action(full, BraidWord([(jm, 1), (j, 1), (jm, -1)]))
        if left != right:
            return Result("loop-algebra", False, f"braid relation fails at j={j}")
    for j in SectorConfig(6, (0, 3)).dominant:
        if not verify_commutation(6, (0, 3), j):
            return Result("loop-algebra", False, f"commutation fails at j={j}")
    return Result("loop-algebra", True, "conjugated-letter outputs, braid relation and projection commutation hold")


def _junction_tree_oracle(n: int, sub) -> int:
    # subsets of admissible diagonals, checked pairwise for crossings
    diags = [
        (a, b)
        for a, b in itertools.combinations(range(n), 2)
        if (b - a) % n not in (1, n - 1) and not (a in sub and b in sub)
    ]
    count = 0
    for r in range(len(diags) + 1):
        for subset in itertools.combinations(diags, r):
            if all(not (a < c < b < d or c < a < d < b) for (a, b), (c, d) in itertools.combinations(subset, 2)):
                count += 1
    return count


def check_corpus() -> Result:
    total = 0
    for n, sub in CORPUS_CONFIGS:
        cfg = SectorConfig(n, sub)
        for b in (0, 1, 2):
            graphs = enum_standard_graphs(cfg, b)
            keys = [g.canonical for g in graphs]
            if len(set(keys)) != len(keys):
                return Result("corpus", False, f"{cfg} b={b}: repeated canonical strings")
            for g in graphs:
                if validate_standard(g):
                    return Result("corpus", False, f"invalid graph {g!r}")
                if loads(dumps(g)) != g:
                    return Result("corpus", False, f"round trip fails for {g!r}")
            total += len(graphs)
    trees = len(enum_junction_trees(SectorConfig(6, (0, 3))))
    oracle = _junction_tree_oracle(6, {0, 3})
    if trees != 36 or oracle != 36:
        return Result("corpus", False, f"junction trees for (6,{{0,3}}): {trees}, oracle {oracle}, expected 36")
    return Result("corpus", True, f"{total} graphs pass validation and round-trip with distinct keys; 36 junction trees")


SUITES: dict[str, Callable[[], Result]] = {
    "schroeder": check_schroeder,
    "oracle": check_action_oracle,
    "contraction": check_contraction,
    "components": check_components,
    "loops": check_loops,
    "corpus": check_corpus,
}


def run(name: str) -> list[Result]:
    names = list(SUITES) if name == "all" else [name]
    out = []
    for nm in names:
        if nm not in SUITES:
            raise KeyError(f"unknown suite {nm!r}; choose from all, {', '.join(SUITES)}")
        t = time.perf_counter()
        r = SUITES[nm]()
        r.seconds = time.perf_counter() - t
        out.append(r)
    return out
