"""Directed, edge-labelled cell graphs over a finite truncation window.

Every pole looks locally like the loop system at infinity: for each
dominant label ``k`` it has one outgoing and one incoming ``k``-half-edge,
and going counterclockwise around the pole the half-edges come in the
order ``out_0, in_0, out_1, in_1, ...``.  Loops (a ``k``-edge returning
to its start) are dropped, so some half-edges are absent.  Because this
local order depends only on labels, no embedding has to be stored.

Beyond the window every ray ``i`` is a uniform tail: the label of sector
``S_{i-1}`` runs inward and the label of ``S_i`` runs outward.  The tail
is implicit and attached to the outermost materialized vertex.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Sequence, Union

from stokesgraph.config import SectorConfig
from stokesgraph.graph import (
    GraphError,
    Ray,
    StandardGraph,
    Violation,
    normalize_rotation,
)

OUT, IN = 0, 1


class TruncationError(RuntimeError):
    """An operation needed vertices beyond the truncation window."""


@dataclass(frozen=True)
class Beyond:
    ray: int


Target = Union[int, Beyond]


class CellGraph:
    """Finite window of the directed graph of a cell decomposition (immutable)."""

    __slots__ = ("config", "vertices", "out", "faces", "rays", "__dict__")

    def __init__(
        self,
        config: SectorConfig,
        vertices: Iterable[int],
        edges: Iterable[tuple[int, int, int]],
        faces: Sequence[int],
        rays: Sequence[Sequence[int]],
    ):
        self.config = config
        self.vertices = frozenset(vertices)
        out: dict[tuple[int, int], int] = {}
        for u, v, k in edges:
            if (u, k) in out:
                raise GraphError(f"two outgoing {k}-edges at vertex {u}")
            out[(u, k)] = v
        self.out = MappingProxyType(out)
        self.faces = tuple(faces)
        self.rays = tuple(tuple(r) for r in rays)
        if len(self.faces) != config.n or len(self.rays) != config.n:
            raise GraphError("need one face label and one ray per sector")
        if any(not r for r in self.rays):
            raise GraphError("every ray needs at least one materialized vertex")

    @property
    def n(self) -> int:
        return self.config.n

    @property
    def window(self) -> int:
        return min(len(r) for r in self.rays)

    @cached_property
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(sorted((u, v, k) for (u, k), v in self.out.items()))

    @cached_property
    def inc(self) -> Mapping[tuple[int, int], int]:
        m: dict[tuple[int, int], int] = {}
        for (u, k), v in self.out.items():
            m.setdefault((v, k), u)
        return MappingProxyType(m)

    @cached_property
    def core(self) -> frozenset[int]:
        on_rays = {v for r in self.rays for v in r}
        return self.vertices - on_rays

    @cached_property
    def frontier(self) -> Mapping[int, int]:
        return MappingProxyType({r[-1]: i for i, r in enumerate(self.rays)})

    def is_standard_order(self) -> bool:
        return self.faces == tuple(range(self.n))

    def label_dominant(self, k: int) -> bool:
        return self.config.is_dominant(k)

    def tail_labels(self, i: int) -> tuple[Optional[int], Optional[int]]:
        """(outward label, inward label) carried by the tail of ray ``i``."""
        a, b = self.faces[i], self.faces[(i - 1) % self.n]
        return (a if self.label_dominant(a) else None, b if self.label_dominant(b) else None)

    def half_edges(self, v: int) -> list[tuple[int, int, Target]]:
        """Half-edges at ``v`` as ``(label, OUT|IN, other end)``, counterclockwise."""
        hs: list[tuple[int, int, Target]] = []
        for k in self.config.dominant:
            if (v, k) in self.out:
                hs.append((k, OUT, self.out[(v, k)]))
            if (v, k) in self.inc:
                hs.append((k, IN, self.inc[(v, k)]))
        if v in self.frontier:
            i = self.frontier[v]
            outward, inward = self.tail_labels(i)
            if outward is not None:
                hs.append((outward, OUT, Beyond(i)))
            if inward is not None:
                hs.append((inward, IN, Beyond(i)))
        hs.sort(key=lambda h: (h[0], h[1]))
        return hs

    def double_edges(self) -> list[tuple[int, int]]:
        """Unordered vertex pairs joined by two directed edges."""
        count: dict[frozenset, int] = {}
        for u, v, _ in self.edges:
            key = frozenset((u, v))
            count[key] = count.get(key, 0) + 1
        return sorted(tuple(sorted(k)) for k, c in count.items() if c == 2)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CellGraph):
            return NotImplemented
        return (
            self.config == other.config
            and self.vertices == other.vertices
            and dict(self.out) == dict(other.out)
            and self.faces == other.faces
            and self.rays == other.rays
        )

    def __hash__(self) -> int:
        return hash((self.config, self.vertices, self.edges, self.faces, self.rays))

    def __repr__(self) -> str:
        return f"CellGraph({self.config!r}, {len(self.vertices)} vertices, {len(self.out)} edges, faces={self.faces})"


def to_cell_graph(g: StandardGraph, window: int) -> CellGraph:
    """Materialize ``window`` poles along each ray and emit labelled edges.

    The darts of the core carry an ``a``-edge in their own direction when
    their left face ``S_a`` is dominant.
    """
    if window < 1:
        raise ValueError("window must be at least 1: a ray stub cannot carry its edges otherwise")
    cfg = g.config
    nxt = max(g.rotation) + 1
    rays = []
    for i in range(cfg.n):
        rays.append(list(range(nxt, nxt + window)))
        nxt += window

    def target(e):
        return rays[e.index][0] if isinstance(e, Ray) else e

    edges = []
    for v, es in g.rotation.items():
        for e in es:
            a = g.left_face(v, e)
            if cfg.is_dominant(a):
                edges.append((v, target(e), a))
            if isinstance(e, Ray):
                b = g.right_face(v, e)
                if cfg.is_dominant(b):
                    edges.append((target(e), v, b))
    for i, r in enumerate(rays):
        for p, q in zip(r, r[1:]):
            if cfg.is_dominant(i):
                edges.append((p, q, i))
            if cfg.is_dominant(i - 1):
                edges.append((q, p, (i - 1) % cfg.n))
    vertices = set(g.rotation) | {v for r in rays for v in r}
    return CellGraph(cfg, vertices, edges, tuple(range(cfg.n)), rays)


# ----------------------------------------------------------------------
# faces and validation


def trace_faces(cg: CellGraph) -> list[tuple[bool, list[tuple[int, int, int, int]]]]:
    """Faces as ``(bounded, darts)``; a dart is ``(start, label, dir, end)``.

    Each face keeps itself on the left, so bounded faces are traversed
    counterclockwise.  A face touching a ray tail is unbounded.
    """
    rot = {v: cg.half_edges(v) for v in cg.vertices}
    pos = {(v, h[0], h[1]): idx for v, hs in rot.items() for idx, h in enumerate(hs)}
    seen = set()
    faces = []
    for v in sorted(cg.vertices):
        for k, d, _ in rot[v]:
            if (v, k, d) in seen:
                continue
            bounded = True
            darts = []
            cur = (v, k, d)
            while cur not in seen:
                seen.add(cur)
                x, lab, dr = cur
                other = cg.out.get((x, lab)) if dr == OUT else cg.inc.get((x, lab))
                if other is None:
                    bounded = False
                    break
                darts.append((x, lab, dr, other))
                arrive = (other, lab, IN if dr == OUT else OUT)
                hs = rot[other]
                nk, nd, _ = hs[(pos[arrive] - 1) % len(hs)]
                cur = (other, nk, nd)
            if cur in seen and darts and cur != (v, k, d):
                bounded = False
            faces.append((bounded, darts))
    return faces


def validate_cell(cg: CellGraph) -> list[Violation]:
    cfg = cg.config
    out: list[Violation] = []
    heads: dict[tuple[int, int], int] = {}
    for u, v, k in cg.edges:
        if u not in cg.vertices or v not in cg.vertices:
            out.append(Violation("structure", (u, v, k), "edge endpoint not a vertex"))
        if u == v:
            out.append(Violation("structure", (u, v, k), "loop edge"))
        if not cfg.is_dominant(k):
            out.append(Violation("subdominant label", (u, v, k), f"label {k} is subdominant"))
        if (v, k) in heads:
            out.append(Violation("label multiplicity", v, f"two incoming {k}-edges"))
        heads[(v, k)] = u
    if sorted(cg.faces) != list(range(cg.n)) or any(cg.faces[s] != s for s in cfg.subdominant):
        out.append(Violation("face assignment", cg.faces, "not a permutation fixing subdominant sectors"))
    if out:
        return out
    for v in sorted(cg.vertices):
        if len(cg.half_edges(v)) % 2:
            out.append(Violation("parity", v, "odd degree"))
    for bounded, darts in trace_faces(cg):
        if not bounded:
            continue
        if any(d != IN for _, _, d, _ in darts):
            out.append(Violation("bounded face", darts[0][0], "boundary edge not directed clockwise"))
            continue
        labels = [lab for _, lab, _, _ in reversed(darts)]
        if len(set(labels)) != len(labels):
            out.append(Violation("bounded face", darts[0][0], f"repeated label in {labels}"))
        elif sum(1 for a, b in zip(labels, labels[1:] + labels[:1]) if b < a) > 1:
            out.append(Violation("bounded face", darts[0][0], f"labels {labels} not increasing clockwise"))
    return out


def bounded_faces(cg: CellGraph) -> int:
    return sum(1 for bounded, _ in trace_faces(cg) if bounded)


# ----------------------------------------------------------------------
# back to the tree


def collapse_rotation(cg: CellGraph) -> dict[int, list]:
    """Undirected rotation system of ``T_Gamma``, double edges merged."""
    rot: dict[int, list] = {}
    for v in cg.vertices:
        seq = []
        for _, _, t in cg.half_edges(v):
            seq.append(Ray(t.ray) if isinstance(t, Beyond) else t)
        while len(seq) > 1 and seq[0] == seq[-1]:
            seq.insert(0, seq.pop())
        merged = [x for i, x in enumerate(seq) if i == 0 or x != seq[i - 1]]
        if len(merged) != len(set(merged)):
            raise GraphError(f"vertex {v}: parallel edges are not consecutive; not a tree")
        rot[v] = merged
    return rot


def to_standard(cg: CellGraph) -> StandardGraph:
    """Collapse a standard-order cell graph to its normalized core."""
    if not cg.is_standard_order():
        raise GraphError("cell graph is not in standard order; its tree form is undefined")
    rot = normalize_rotation(collapse_rotation(cg))
    g = StandardGraph(cg.config, rot)
    n_edges = sum(len(g.neighbors(v)) for v in rot) // 2
    if n_edges != len(rot) - 1 or len(g.distances_from(next(iter(rot)))) != len(rot):
        raise GraphError("collapsed graph is not a tree")
    return g
