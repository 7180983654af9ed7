"""Monodromy actions on graphs.

``act_basic`` is the half-twist ``A_j^{+-1}`` on cell graphs: it swaps the
face labels ``j`` and ``j_+`` and rebuilds one label class by lifting the
new loop, written as a word in the old loops, edge by edge:

* ``A_j``:    new ``j``-edges are the old ``j_+``-edges; the new ``j_+``-edge
  from ``v`` follows old ``j_+`` backwards, then old ``j``, then old ``j_+``;
* ``A_j^-1``: new ``j_+``-edges are the old ``j``-edges; the new ``j``-edge
  from ``v`` follows old ``j``, then old ``j_+``, then old ``j`` backwards.

A missing edge means the lift is a loop at the current pole, so the walk
stays put; a walk ending where it started yields no edge.

``act_squared`` is the full twist on standard graphs, implemented as a
tree surgery: the branch holding the structure at the ``j``-junction is
re-attached one pole further along the ``j``-edges (or back along the
``j_+``-edges for the inverse).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from stokesgraph.cellgraph import CellGraph, TruncationError
from stokesgraph.graph import (
    Entry,
    GraphError,
    Ray,
    StandardGraph,
    find_structure,
    normalize_rotation,
)

# walks from real poles reach at most three steps out; walks from the first
# virtual poles are needed to see edges coming back into the window
_EXTENSION = 8
_WALK_FROM = 5
_CHECK = 3


def act_basic(cg: CellGraph, j: int, sign: int) -> CellGraph:
    """Apply ``A_j`` (``sign=+1``) or ``A_j^{-1}`` (``sign=-1``) to a cell graph."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    cfg = cg.config
    cfg.require_dominant(j)
    jp = cfg.next_dominant(j)
    n = cfg.n

    out = dict(cg.out)
    virtual: list[list[int]] = []
    nxt = max(cg.vertices) + 1
    for i, r in enumerate(cg.rays):
        outward, inward = cg.tail_labels(i)
        chain = [r[-1]] + list(range(nxt, nxt + _EXTENSION))
        nxt += _EXTENSION
        for p, q in zip(chain, chain[1:]):
            if outward is not None:
                out[(p, outward)] = q
            if inward is not None:
                out[(q, inward)] = p
        virtual.append(chain[1:])
    inc = {(v, k): u for (u, k), v in out.items()}

    def fwd(v, k):
        return out.get((v, k), v)

    def back(v, k):
        return inc.get((v, k), v)

    if sign > 0:
        kept, rebuilt = jp, jp

        def walk(v):
            return fwd(fwd(back(v, jp), j), jp)
    else:
        kept, rebuilt = j, j

        def walk(v):
            return back(fwd(fwd(v, j), jp), j)

    starts = set(cg.vertices) | {v for ch in virtual for v in ch[:_WALK_FROM]}
    new_out: dict[tuple[int, int], int] = {}
    for (u, k), v in out.items():
        if k not in (j, jp) and (u in starts or v in starts):
            new_out[(u, k)] = v
    relabel = {jp: j, j: jp}
    for (u, k), v in out.items():
        if k == kept and (u in starts or v in starts):
            new_out[(u, relabel[k])] = v
    for v in starts:
        w = walk(v)
        if w != v:
            new_out[(v, rebuilt)] = w

    faces = tuple(relabel.get(lab, lab) for lab in cg.faces)
    _check_tails(cg, faces, virtual, new_out)
    real = cg.vertices
    edges = [(u, v, k) for (u, k), v in new_out.items() if u in real and v in real]
    return CellGraph(cfg, real, edges, faces, cg.rays)


def _check_tails(cg: CellGraph, faces, virtual, new_out) -> None:
    n = cg.n
    watched = {}
    for i, ch in enumerate(virtual):
        for v in ch[:_CHECK]:
            watched[v] = i
    got = {}
    for (u, k), v in new_out.items():
        for x in (u, v):
            if x in watched:
                got.setdefault(x, set()).add((u, v, k))
    for i, ch in enumerate(virtual):
        a, b = faces[i], faces[(i - 1) % n]
        outward = a if cg.config.is_dominant(a) else None
        inward = b if cg.config.is_dominant(b) else None
        line = [cg.rays[i][-1]] + ch
        for idx in range(1, _CHECK + 1):
            v = line[idx]
            want = set()
            for p, q in ((line[idx - 1], v), (v, line[idx + 1])):
                if outward is not None:
                    want.add((p, q, outward))
                if inward is not None:
                    want.add((q, p, inward))
            if got.get(v, set()) != want:
                raise TruncationError(
                    f"action reaches the truncation boundary on ray {i}; re-materialize with a larger window"
                )


# ----------------------------------------------------------------------
# squared action on standard graphs


def act_squared(g: StandardGraph, j: int, sign: int) -> StandardGraph:
    """Apply ``A_j^{2}`` (``sign=+1``) or ``A_j^{-2}`` (``sign=-1``)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    s = find_structure(g, j)
    if s is None:
        return g
    rot: dict[int, list[Entry]] = {v: list(es) for v, es in g.rotation.items()}
    u = s.junction
    branch = list(s.branch)
    es = rot[u]
    if sign > 0:
        x = es[(es.index(branch[0]) - 1) % len(es)]
    else:
        x = es[(es.index(branch[-1]) + 1) % len(es)]
    if isinstance(x, Ray):
        w = max(rot) + 1
        rot[u] = [w if e == x else e for e in rot[u]]
        rot[w] = [u, x]
        x = w
    rot[u] = [e for e in rot[u] if e not in branch]
    xs = rot[x]
    k = xs.index(u)
    at = k if sign > 0 else k + 1
    rot[x] = xs[:at] + branch + xs[at:]
    for e in branch:
        if isinstance(e, int):
            rot[e] = [x if f == u else f for f in rot[e]]
    return StandardGraph(g.config, normalize_rotation(rot))


def structure_target(g: StandardGraph, j: int, sign: int) -> int | None:
    """Pole the ``j``-structure moves to under ``A_j^{2*sign}`` (``None`` if it
    moves onto a ray, i.e. onto a pole not yet in the core)."""
    s = find_structure(g, j)
    if s is None:
        return None
    es = g.rotation[s.junction]
    if sign > 0:
        x = es[(es.index(s.branch[0]) - 1) % len(es)]
    else:
        x = es[(es.index(s.branch[-1]) + 1) % len(es)]
    return None if isinstance(x, Ray) else x


# ----------------------------------------------------------------------
# braid words


_TOKEN = re.compile(r"^\s*(\d+)\s*\^\s*([+-]?[12])\s*$")


@dataclass(frozen=True)
class BraidWord:
    """Sequence of ``(label, exponent)`` letters, applied left to right."""

    letters: tuple[tuple[int, int], ...] = ()

    def __init__(self, letters: Iterable[tuple[int, int]] = ()):
        lets = tuple((int(j), int(e)) for j, e in letters)
        for j, e in lets:
            if e not in (1, -1, 2, -2):
                raise ValueError(f"exponent {e} not in {{+1, -1, +2, -2}}")
        object.__setattr__(self, "letters", lets)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord((j, -e) for j, e in reversed(self.letters))

    def is_squared(self) -> bool:
        return all(abs(e) == 2 for _, e in self.letters)

    def __str__(self) -> str:
        return ",".join(f"{j}^{e:+d}" for j, e in self.letters)

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        text = text.strip()
        if not text:
            return cls()
        letters = []
        for pos, tok in enumerate(text.split(",")):
            m = _TOKEN.match(tok)
            if not m:
                raise ValueError(f"bad braid token {tok!r} at position {pos}")
            letters.append((int(m.group(1)), int(m.group(2))))
        return cls(letters)


def check_labels(word: BraidWord, cfg) -> None:
    for j, _ in word:
        cfg.require_dominant(j)


def apply_word(g: StandardGraph, word: BraidWord | Sequence[tuple[int, int]]) -> StandardGraph:
    """Compose squared actions left to right."""
    word = word if isinstance(word, BraidWord) else BraidWord(word)
    if not word.is_squared():
        raise GraphError("odd exponents leave the standard order; use act_basic on a CellGraph")
    check_labels(word, g.config)
    for j, e in word:
        g = act_squared(g, j, 1 if e > 0 else -1)
    return g


def apply_word_cell(cg: CellGraph, word: BraidWord) -> CellGraph:
    """Compose basic actions left to right; squares count as two letters."""
    for j, e in word:
        for _ in range(abs(e)):
            cg = act_basic(cg, j, 1 if e > 0 else -1)
    return cg
