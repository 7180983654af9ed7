"""Finite encoding of standard graphs.

A standard graph is stored as its normalized core: a plane tree whose
vertices are poles, together with ``n`` ray stubs standing for the
infinite branches.  The embedding is a rotation system: for each core
vertex, the counterclockwise cyclic tuple of its neighbours, where a
neighbour is either another core vertex (``int``) or a :class:`Ray`.

Conventions used throughout the package:

* unbounded face ``S_i`` lies between ray ``i`` and ray ``i+1``;
* the face on the left of the dart ``v -> e`` is read off the corner of
  ``v`` between ``e`` and the next entry counterclockwise;
* a ``j``-edge runs counterclockwise around the face ``S_j``, i.e. along
  every dart whose left face is ``S_j``.  An edge with two dominant sides
  is a double edge and bounds one bounded face of the directed graph.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence, Union

from stokesgraph.config import SectorConfig


class Ray(NamedTuple):
    index: int

    def __repr__(self) -> str:
        return f"R{self.index}"


Entry = Union[int, Ray]


class GraphError(ValueError):
    """Raised when an operation receives a graph it cannot act on."""


@dataclass(frozen=True)
class Violation:
    kind: str
    where: object
    message: str

    def __str__(self) -> str:
        return f"{self.kind} at {self.where}: {self.message}"


class StandardGraph:
    """Normalized core of a standard graph (immutable)."""

    __slots__ = ("config", "rotation", "__dict__")

    def __init__(self, config: SectorConfig, rotation: Mapping[int, Sequence[Entry]]):
        self.config = config
        self.rotation = MappingProxyType(
            {int(v): tuple(_entry(e) for e in es) for v, es in rotation.items()}
        )

    # -- basic queries -------------------------------------------------
    @property
    def n(self) -> int:
        return self.config.n

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.rotation))

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def neighbors(self, v: int) -> list[int]:
        return [e for e in self.rotation[v] if isinstance(e, int)]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted({tuple(sorted((v, w))) for v in self.rotation for w in self.neighbors(v)}))

    @cached_property
    def ray_attachment(self) -> Mapping[int, int]:
        out = {}
        for v, es in self.rotation.items():
            for e in es:
                if isinstance(e, Ray):
                    out[e.index] = v
        return MappingProxyType(out)

    def next_ccw(self, v: int, e: Entry) -> Entry:
        es = self.rotation[v]
        return es[(es.index(e) + 1) % len(es)]

    def prev_ccw(self, v: int, e: Entry) -> Entry:
        es = self.rotation[v]
        return es[(es.index(e) - 1) % len(es)]

    # -- faces ---------------------------------------------------------
    @cached_property
    def _branch_rays(self) -> dict[tuple[int, Entry], tuple[int, ...]]:
        memo: dict[tuple[int, Entry], tuple[int, ...]] = {}

        def rays(v: int, e: Entry) -> tuple[int, ...]:
            key = (v, e)
            if key in memo:
                return memo[key]
            if isinstance(e, Ray):
                memo[key] = (e.index,)
                return memo[key]
            es = self.rotation[e]
            k = es.index(v)
            acc: list[int] = []
            for f in es[k + 1:] + es[:k]:
                acc.extend(rays(e, f))
            memo[key] = tuple(acc)
            return memo[key]

        for v, es in self.rotation.items():
            for e in es:
                rays(v, e)
        return memo

    def branch_rays(self, v: int, e: Entry) -> tuple[int, ...]:
        """Rays beyond the dart ``v -> e``, in counterclockwise order."""
        return self._branch_rays[(v, e)]

    def left_face(self, v: int, e: Entry) -> int:
        return self.branch_rays(v, e)[-1]

    def right_face(self, v: int, e: Entry) -> int:
        return (self.branch_rays(v, e)[0] - 1) % self.n

    def corner_face(self, v: int, e: Entry) -> int:
        """Face in the corner of ``v`` between ``e`` and its ccw successor."""
        return self.left_face(v, e)

    def sides(self, v: int, e: Entry) -> tuple[int, int]:
        """(left face, right face) of the dart ``v -> e``."""
        return self.left_face(v, e), self.right_face(v, e)

    def is_double(self, v: int, e: Entry) -> bool:
        a, b = self.sides(v, e)
        return self.config.is_dominant(a) and self.config.is_dominant(b)

    # -- structure -----------------------------------------------------
    def distances_from(self, u0: int) -> dict[int, int]:
        dist = {u0: 0}
        queue = deque([u0])
        while queue:
            v = queue.popleft()
            for w in self.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return dist

    def path(self, a: int, b: int) -> list[int]:
        """Vertices of the tree path from ``a`` to ``b``."""
        parent = {a: a}
        queue = deque([a])
        while queue:
            v = queue.popleft()
            if v == b:
                break
            for w in self.neighbors(v):
                if w not in parent:
                    parent[w] = v
                    queue.append(w)
        if b not in parent:
            raise GraphError(f"no path from {a} to {b}")
        out = [b]
        while out[-1] != a:
            out.append(parent[out[-1]])
        return out[::-1]

    def chains(self) -> list[tuple[int, ...]]:
        """Maximal paths between junctions (vertex sequences, junction ends)."""
        js = set(junctions(self))
        seen = set()
        out = []
        for u in sorted(js):
            for w in self.neighbors(u):
                if (u, w) in seen:
                    continue
                chain = [u, w]
                while chain[-1] not in js:
                    a, b = chain[-2], chain[-1]
                    chain.append(next(x for x in self.neighbors(b) if x != a))
                seen.add((chain[0], chain[1]))
                seen.add((chain[-1], chain[-2]))
                out.append(tuple(chain))
        return out

    def max_chain(self) -> int:
        """Longest junction-to-junction chain, counted in tree edges."""
        return max((len(c) - 1 for c in self.chains()), default=0)

    # -- identity --------------------------------------------------------
    @cached_property
    def canonical(self) -> bytes:
        return canonicalize(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StandardGraph):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash(self.canonical)

    def __repr__(self) -> str:
        body = "; ".join(f"{v}: {' '.join(map(repr, es))}" for v, es in sorted(self.rotation.items()))
        return f"StandardGraph({self.config!r}, {{{body}}})"


def _entry(e: object) -> Entry:
    if isinstance(e, Ray):
        return e
    if isinstance(e, int):
        return e
    raise TypeError(f"rotation entry must be int or Ray, got {e!r}")


def star(config: SectorConfig) -> StandardGraph:
    """The one-vertex standard graph with all ``n`` rays at one pole."""
    return StandardGraph(config, {0: [Ray(i) for i in range(config.n)]})


# ----------------------------------------------------------------------
# validation


def _structural(g: StandardGraph) -> list[Violation]:
    out = []
    rot = g.rotation
    if not rot:
        return [Violation("structure", None, "empty core")]
    seen_rays: dict[int, int] = {}
    for v, es in rot.items():
        if len(set(es)) != len(es):
            out.append(Violation("structure", v, "repeated rotation entry"))
        for e in es:
            if isinstance(e, Ray):
                if not 0 <= e.index < g.n:
                    out.append(Violation("structure", v, f"ray {e.index} out of range"))
                elif e.index in seen_rays:
                    out.append(Violation("structure", v, f"ray {e.index} attached twice"))
                seen_rays[e.index] = v
            elif e not in rot:
                out.append(Violation("structure", v, f"unknown neighbour {e}"))
            elif v not in rot[e]:
                out.append(Violation("structure", (v, e), "asymmetric adjacency"))
    missing = sorted(set(range(g.n)) - set(seen_rays))
    if missing:
        out.append(Violation("structure", None, f"missing rays {missing}"))
    if out:
        return out
    n_edges = sum(len(g.neighbors(v)) for v in rot) // 2
    reach = g.distances_from(next(iter(rot)))
    if len(reach) != len(rot):
        out.append(Violation("tree", None, "core is disconnected"))
    elif n_edges != len(rot) - 1:
        out.append(Violation("tree", None, "core contains a cycle"))
    return out


def _ray_order(g: StandardGraph) -> list[int]:
    root = next(iter(sorted(g.rotation)))
    order: list[int] = []
    for e in g.rotation[root]:
        order.extend(g.branch_rays(root, e))
    return order


def validate_standard(g: StandardGraph) -> list[Violation]:
    """Every violated standard-graph invariant; an empty list means valid."""
    out = [Violation("config", g.config.subdominant, p) for p in g.config.violations()]
    structural = _structural(g)
    if structural:
        return out + structural
    order = _ray_order(g)
    k = order.index(0)
    if order[k:] + order[:k] != list(range(g.n)):
        out.append(Violation("cyclic ray order", tuple(order), "rays are not in counterclockwise order 0..n-1"))
        return out
    single = len(g.rotation) == 1
    for v, es in sorted(g.rotation.items()):
        d = len(es)
        if d == 1 and not single:
            out.append(Violation("normalization", v, "degree-1 core vertex"))
        elif d == 2 and any(isinstance(e, Ray) for e in es):
            out.append(Violation("normalization", v, "degree-2 vertex between a junction and a ray"))
        faces = [g.corner_face(v, e) for e in es]
        if d >= 3 and not _cyclically_increasing(faces, g.n):
            out.append(Violation("face order", v, f"faces {faces} not cyclically increasing"))
    darts = [(v, e) for v, es in sorted(g.rotation.items()) for e in es if isinstance(e, Ray) or v < e]
    for v, e in darts:
        a, b = g.sides(v, e)
        if not g.config.is_dominant(a) and not g.config.is_dominant(b):
            out.append(Violation("side rule", (v, e), f"edge between subdominant faces {a} and {b}"))
    return out


def _cyclically_increasing(seq: Sequence[int], n: int) -> bool:
    steps = [(b - a) % n for a, b in zip(seq, list(seq[1:]) + [seq[0]])]
    return all(s > 0 for s in steps) and sum(steps) == n


def is_valid(g: StandardGraph) -> bool:
    return not validate_standard(g)


# ----------------------------------------------------------------------
# normalization


def normalize_rotation(rotation: dict[int, list[Entry]]) -> dict[int, list[Entry]]:
    """Push degree-2 vertices adjacent to a ray into that ray (in place)."""
    changed = True
    while changed:
        changed = False
        for v in list(rotation):
            es = rotation[v]
            if len(es) != 2 or len(rotation) == 1:
                continue
            rays = [e for e in es if isinstance(e, Ray)]
            if len(rays) != 1:
                continue
            (w,) = [e for e in es if not isinstance(e, Ray)]
            rotation[w] = [rays[0] if x == v else x for x in rotation[w]]
            del rotation[v]
            changed = True
    return rotation


# ----------------------------------------------------------------------
# derived counts and structures


def junctions(g: StandardGraph) -> list[int]:
    return [v for v in g.vertices if g.degree(v) >= 3]


def bounded_face_count(g: StandardGraph) -> int:
    """Double edges of the core: tree edges and ray stubs with two dominant sides."""
    count = 0
    for v, es in g.rotation.items():
        for e in es:
            if (isinstance(e, Ray) or v < e) and g.is_double(v, e):
                count += 1
    return count


@dataclass(frozen=True)
class Structure:
    kind: str  # "I", "V" or "Y"
    junction: int
    j: int
    y_junction: Optional[int] = None
    branch: tuple[Entry, ...] = ()


def find_structure(g: StandardGraph, j: int) -> Optional[Structure]:
    """Locate the structure at the ``j``-junction, or ``None`` if there is none."""
    cfg = g.config
    cfg.require_dominant(j)
    jp = cfg.next_dominant(j)
    att = g.ray_attachment
    a = (j + 1) % g.n
    if jp == a:
        u = att[a]
        return Structure("I", u, j, None, (Ray(a),))
    b = jp
    y = att[a]
    if att[b] != y or g.next_ccw(y, Ray(a)) != Ray(b):
        return None
    if g.degree(y) >= 4:
        return Structure("V", y, j, None, (Ray(a), Ray(b)))
    prev, cur = y, next(e for e in g.rotation[y] if not isinstance(e, Ray))
    while g.degree(cur) == 2:
        prev, cur = cur, next(x for x in g.neighbors(cur) if x != prev)
    return Structure("Y", cur, j, y, (prev,))


def structures(g: StandardGraph) -> dict[int, Structure]:
    out = {}
    for j in g.config.dominant:
        s = find_structure(g, j)
        if s is not None:
            out[j] = s
    return out


def y_junctions(g: StandardGraph) -> set[int]:
    return {s.y_junction for s in structures(g).values() if s.kind == "Y"}


def is_ivy(g: StandardGraph) -> bool:
    ys = y_junctions(g)
    return len([u for u in junctions(g) if u not in ys]) == 1


def u_metric(g: StandardGraph, u0: int) -> int:
    """Sum of ``(deg(v) - 2) * dist(v, u0)`` over core vertices."""
    if u0 not in g.rotation:
        raise GraphError(f"vertex {u0} is not in the graph")
    dist = g.distances_from(u0)
    return sum((g.degree(v) - 2) * d for v, d in dist.items())


# ----------------------------------------------------------------------
# canonical form


def canonical_order(g: StandardGraph) -> list[int]:
    """Breadth-first vertex order rooted at the attachment of ray 0."""
    root = g.ray_attachment[0]
    order = [root]
    parent = {root: None}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for e in _rotated(g, v, parent[v]):
            if isinstance(e, int) and e not in parent:
                parent[e] = v
                order.append(e)
                queue.append(e)
    return order


def _rotated(g: StandardGraph, v: int, start: Optional[int]) -> tuple[Entry, ...]:
    es = g.rotation[v]
    k = es.index(Ray(0) if start is None else start)
    return es[k:] + es[:k]


def canonicalize(g: StandardGraph) -> bytes:
    """Deterministic serialization; rays pin the embedding so no search is needed."""
    order = canonical_order(g)
    index = {v: i for i, v in enumerate(order)}
    parent = {order[0]: None}
    for v in order:
        for w in g.neighbors(v):
            parent.setdefault(w, v)
    parts = []
    for v in order:
        toks = [f"R{e.index}" if isinstance(e, Ray) else str(index[e]) for e in _rotated(g, v, parent[v])]
        parts.append(",".join(toks))
    sub = ",".join(map(str, sorted(g.config.subdominant)))
    return f"n={g.n};sub={sub};{'|'.join(parts)}".encode()


def equals(g1: StandardGraph, g2: StandardGraph) -> bool:
    return canonicalize(g1) == canonicalize(g2)


def relabeled(g: StandardGraph) -> StandardGraph:
    """Copy with vertices renumbered in canonical order."""
    order = canonical_order(g)
    index = {v: i for i, v in enumerate(order)}
    return StandardGraph(
        g.config,
        {index[v]: [e if isinstance(e, Ray) else index[e] for e in g.rotation[v]] for v in order},
    )


def iter_darts(g: StandardGraph) -> Iterator[tuple[int, Entry]]:
    for v, es in sorted(g.rotation.items()):
        for e in es:
            yield v, e


def from_edges(config: SectorConfig, adjacency: Mapping[int, Iterable[Entry]]) -> StandardGraph:
    """Build a graph from an unembedded tree; rays pin the embedding."""
    adj = {v: list(es) for v, es in adjacency.items()}
    rot = _embed(config.n, adj)
    return StandardGraph(config, rot)


def _embed(n: int, adj: dict[int, list[Entry]]) -> dict[int, list[Entry]]:
    # each branch at a vertex carries a cyclic interval of rays; sort branches by it
    memo: dict[tuple[int, Entry], list[int]] = {}

    def rays(v: int, e: Entry) -> list[int]:
        if isinstance(e, Ray):
            return [e.index]
        if (v, e) not in memo:
            acc: list[int] = []
            for f in adj[e]:
                if f != v:
                    acc.extend(rays(e, f))
            memo[(v, e)] = acc
        return memo[(v, e)]

    out = {}
    for v, es in adj.items():
        sets = [(e, set(rays(v, e))) for e in es]
        keyed = []
        for e, rs in sets:
            # first ray of a cyclic interval: the one whose predecessor is outside it
            first = min((r for r in rs if (r - 1) % n not in rs), default=min(rs))
            keyed.append((first, e))
        keyed.sort(key=lambda t: t[0])
        out[v] = [e for _, e in keyed]
    return out
