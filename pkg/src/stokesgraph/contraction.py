"""Contraction of standard graphs to canonical forms.

Every routine returns ``(word, graph)`` where ``word`` only uses squared
letters and ``apply_word(input, word) == graph``.  Structures are moved
one pole at a time with :func:`act_squared`; the number of steps is the
tree distance between the structure's junction and its destination.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from stokesgraph.actions import BraidWord, act_squared
from stokesgraph.graph import (
    GraphError,
    StandardGraph,
    Structure,
    canonical_order,
    find_structure,
    junctions,
    structures,
    u_metric,
    y_junctions,
)


class ContractionError(GraphError):
    """A lemma's precondition does not hold."""


@dataclass
class Trace:
    """Bookkeeping of one contraction run."""

    metrics: list[int] = field(default_factory=list)
    max_vertices: int = 0

    def see(self, g: StandardGraph) -> None:
        self.max_vertices = max(self.max_vertices, len(g.rotation))


class _Run:
    def __init__(self, g: StandardGraph, trace: Optional[Trace] = None):
        self.g = g
        self.letters: list[tuple[int, int]] = []
        self.trace = trace if trace is not None else Trace()
        self.trace.see(g)

    def act(self, j: int, sign: int) -> None:
        self.g = act_squared(self.g, j, sign)
        self.letters.append((j, 2 * sign))
        self.trace.see(self.g)

    def result(self) -> tuple[BraidWord, StandardGraph]:
        return BraidWord(self.letters), self.g


# ----------------------------------------------------------------------
# moving one structure


def _dist(g: StandardGraph, a: int, b: int) -> int:
    return len(g.path(a, b)) - 1


def _shuttle(run: _Run, j: int, target: int) -> tuple[int, int]:
    """Move the ``j``-structure until its junction is ``target``; returns
    the sign used and the number of steps."""
    s = find_structure(run.g, j)
    if s is None:
        raise ContractionError(f"no structure at label {j}")
    if target not in run.g.rotation:
        raise ContractionError(f"vertex {target} is not in the graph")
    k = _dist(run.g, s.junction, target)
    if k == 0:
        return 1, 0
    for sign in (1, -1):
        h = act_squared(run.g, j, sign)
        t = find_structure(h, j)
        if target in h.rotation and _dist(h, t.junction, target) == k - 1:
            break
    else:
        raise ContractionError(f"the {j}-structure cannot move toward vertex {target}")
    for _ in range(k):
        run.act(j, sign)
    s = find_structure(run.g, j)
    if s.junction != target:
        raise ContractionError(f"the {j}-structure did not arrive at vertex {target}")
    return sign, k


def _repeat(run: _Run, j: int, sign: int, k: int) -> None:
    # the way back: the partner label, same direction, same number of steps
    if find_structure(run.g, j) is None:
        raise ContractionError(f"no structure at label {j}")
    for _ in range(k):
        run.act(j, sign)


def _pair(g: StandardGraph, u0: int, j: int) -> tuple[int, Structure, Structure]:
    cfg = g.config
    cfg.require_dominant(j)
    jm = cfg.prev_dominant(j)
    a, b = find_structure(g, jm), find_structure(g, j)
    for lab, s in ((jm, a), (j, b)):
        if s is None or s.junction != u0:
            raise ContractionError(f"vertex {u0} is not a {lab}-junction")
    return jm, a, b


# ----------------------------------------------------------------------
# lemmas


def exchange_YV(g: StandardGraph, u0: int, j: int) -> tuple[BraidWord, StandardGraph]:
    """Swap a Y- and a V-structure at the ``j_-``- and ``j``-junction ``u0``."""
    run = _Run(g)
    _exchange(run, u0, j)
    return run.result()


def _exchange(run: _Run, u0: int, j: int) -> None:
    jm, a, b = _pair(run.g, u0, j)
    kinds = {a.kind, b.kind}
    if kinds != {"Y", "V"}:
        missing = "V" if "V" not in kinds else "Y"
        raise ContractionError(f"vertex {u0} lacks a {missing}-structure at labels {jm}, {j}")
    (ylab, ys), vlab = ((jm, a), j) if a.kind == "Y" else ((j, b), jm)
    sign, k = _shuttle(run, vlab, ys.y_junction)
    _repeat(run, ylab, sign, k)
    home = find_structure(run.g, ylab).junction
    _expect(run.g, home, {ylab: "V", vlab: "Y"})


def y_to_v_with_I(g: StandardGraph, u0: int, j: int) -> tuple[BraidWord, StandardGraph]:
    """Turn the Y-structure next to an I-structure at ``u0`` into a V-structure."""
    run = _Run(g)
    _absorb(run, u0, j, "I")
    return run.result()


def merge_YY(g: StandardGraph, u0: int, j: int) -> tuple[BraidWord, StandardGraph]:
    """Turn one of two adjacent Y-structures at ``u0`` into a V-structure."""
    run = _Run(g)
    _absorb(run, u0, j, "Y")
    return run.result()


def _absorb(run: _Run, u0: int, j: int, partner: str) -> None:
    # the partner structure is shuttled to the Y-junction, which then holds a
    # V-structure; that V is shuttled back and the old Y-junction dies
    jm, a, b = _pair(run.g, u0, j)
    if partner == "I":
        if {a.kind, b.kind} != {"I", "Y"}:
            raise ContractionError(f"vertex {u0} needs adjacent I- and Y-structures at labels {jm}, {j}")
        (ylab, ys), plab = ((jm, a), j) if a.kind == "Y" else ((j, b), jm)
    else:
        if a.kind != "Y" or b.kind != "Y":
            raise ContractionError(f"vertex {u0} needs two Y-structures at labels {jm}, {j}")
        (ylab, ys), plab = (j, b), jm
    before = len(junctions(run.g))
    sign, k = _shuttle(run, plab, ys.y_junction)
    _repeat(run, ylab, sign, k)
    after = find_structure(run.g, ylab)
    if after.kind != "V" or len(junctions(run.g)) != before - 1:
        raise ContractionError("conversion did not remove the Y-junction")


def _expect(g: StandardGraph, u0: int, kinds: dict[int, str]) -> None:
    for lab, kind in kinds.items():
        s = find_structure(g, lab)
        if s is None or s.junction != u0 or s.kind != kind:
            raise ContractionError(f"expected a {kind}-structure at label {lab} on vertex {u0}")


# ----------------------------------------------------------------------
# ivy form


def choose_root(g: StandardGraph) -> int:
    """Root of a maximal pair of non-Y junctions, nearest to ray 0."""
    ys = y_junctions(g)
    us = [u for u in junctions(g) if u not in ys] or [g.ray_attachment[0]]
    rank = {v: i for i, v in enumerate(canonical_order(g))}
    dist = {u: g.distances_from(u) for u in us}
    diam = max(dist[a][b] for a in us for b in us)
    ends = [a for a in us if any(dist[a][b] == diam for b in us)]
    home = g.distances_from(g.ray_attachment[0])
    return min(ends, key=lambda u: (home[u], rank[u]))


def to_ivy(g: StandardGraph, trace: Optional[Trace] = None) -> tuple[BraidWord, StandardGraph]:
    """Pull every non-Y junction into one root; the root metric drops each step."""
    run = _Run(g, trace)
    if not junctions(g):
        return run.result()
    u0 = choose_root(g)
    _to_ivy(run, u0)
    return run.result()


def _to_ivy(run: _Run, u0: int) -> None:
    metric = u_metric(run.g, u0)
    run.trace.metrics.append(metric)
    while True:
        g = run.g
        ys = y_junctions(g)
        free = [u for u in junctions(g) if u not in ys]
        if len(free) <= 1:
            return
        us = [u for u in free if u != u0]
        dist = g.distances_from(u0)
        rank = {v: i for i, v in enumerate(canonical_order(g))}
        u1 = max(us, key=lambda u: (dist[u], -rank[u]))
        v = g.path(u1, u0)[1]
        cfg = g.config
        left, right = g.sides(u1, v)
        moves = []
        if cfg.is_dominant(left):
            moves.append((left, 1))
        if cfg.is_dominant(right):
            moves.append((cfg.prev_dominant(right), -1))
        for j, sign in moves:
            s = find_structure(g, j)
            if s is None or s.junction != u1:
                continue
            h = act_squared(g, j, sign)
            m = u_metric(h, u0)
            if m < metric:
                run.act(j, sign)
                metric = m
                run.trace.metrics.append(metric)
                break
        else:
            raise ContractionError(f"no action pulls junction {u1} toward {u0}")


def root_of(g: StandardGraph) -> int:
    ys = y_junctions(g)
    us = [u for u in junctions(g) if u not in ys]
    if len(us) != 1:
        raise ContractionError("graph is not in ivy form")
    return us[0]


def _root_structures(g: StandardGraph, u0: int) -> list[tuple[int, str]]:
    out = []
    for j, s in sorted(structures(g).items()):
        if s.junction == u0:
            out.append((j, s.kind))
    return out


def _bring_next_to(run: _Run, u0: int, kinds: set[str]) -> Optional[tuple[int, int]]:
    """Exchange a Y past V-structures until it sits next to a structure of
    one of ``kinds``; returns the adjacent labels ``(j_-, j)``."""
    order = _root_structures(run.g, u0)
    cfg = run.g.config
    if len(order) != len(cfg.dominant):
        raise ContractionError(f"root {u0} does not carry a structure for every label")
    m = len(order)
    best = None
    for p, (_, kp) in enumerate(order):
        if kp not in kinds:
            continue
        for step in (1, -1):
            q = (p + step) % m
            gap = 0
            while order[q][1] == "V" and q != p:
                q = (q + step) % m
                gap += 1
            if q != p and order[q][1] == "Y":
                cand = (gap, p, q, step)
                if best is None or cand < best:
                    best = cand
    if best is None:
        return None
    gap, p, q, step = best
    # walk the Y at q toward p through the V's in between
    while (q - p) % m != step % m:
        nq = (q - step) % m
        hi = q if step == 1 else nq
        lo = nq if step == 1 else q
        _exchange(run, u0, order[hi][0])
        order[lo], order[hi] = (order[lo][0], order[hi][1]), (order[hi][0], order[lo][1])
        q = nq
    lo, hi = (p, q) if step == 1 else (q, p)
    return order[lo][0], order[hi][0]


def to_single_junction(g: StandardGraph, trace: Optional[Trace] = None) -> tuple[BraidWord, StandardGraph]:
    """Contract to the star; needs two adjacent dominant faces."""
    if not g.config.has_adjacent_dominant:
        raise ContractionError("no adjacent dominant pair")
    run = _Run(g, trace)
    if junctions(g):
        _to_ivy(run, choose_root(g))
    while len(junctions(run.g)) > 1:
        u0 = root_of(run.g)
        pair = _bring_next_to(run, u0, {"I"})
        if pair is None:
            raise ContractionError("no Y-structure can reach an I-structure")
        _absorb(run, u0, pair[1], "I")
    return run.result()


def to_one_y(g: StandardGraph, trace: Optional[Trace] = None) -> tuple[BraidWord, StandardGraph]:
    """Contract to ivy form with at most one Y-structure, placed at the
    smallest dominant label; needs no two adjacent dominant faces."""
    if g.config.has_adjacent_dominant:
        raise ContractionError("two dominant faces are adjacent")
    run = _Run(g, trace)
    if junctions(g):
        _to_ivy(run, choose_root(g))
    while len(junctions(run.g)) > 2:
        u0 = root_of(run.g)
        pair = _bring_next_to(run, u0, {"Y"})
        if pair is None:
            raise ContractionError("no two Y-structures can be made adjacent")
        _absorb(run, u0, pair[1], "Y")
    if len(junctions(run.g)) == 2:
        u0 = root_of(run.g)
        target = min(run.g.config.dominant)
        order = _root_structures(run.g, u0)
        labels = [j for j, _ in order]
        q = next(i for i, (_, k) in enumerate(order) if k == "Y")
        p = labels.index(target)
        m = len(order)
        # shortest way round the root
        step = 1 if (q - p) % m <= (p - q) % m else -1
        while q != p:
            nq = (q - step) % m
            hi = q if step == 1 else nq
            _exchange(run, u0, labels[hi])
            q = nq
    return run.result()


def canonical_form(g: StandardGraph) -> StandardGraph:
    """Contraction target dictated by the configuration."""
    if g.config.has_adjacent_dominant:
        return to_single_junction(g)[1]
    return to_one_y(g)[1]
