"""Finite universes: chord diagrams, junction trees and standard graphs.

Polygon vertices are identified with sectors: vertex ``i`` is the face
``S_i``, the polygon side between ``i`` and ``i+1`` is ray ``i+1``, and a
chord ``{a, b}`` is a core chain separating ``S_a`` from ``S_b``.  Each
region of the dissected polygon is one junction.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from stokesgraph.config import SectorConfig
from stokesgraph.graph import Ray, StandardGraph, from_edges, validate_standard


@lru_cache(maxsize=None)
def schroeder(k: int) -> int:
    """Small Schröder number ``s(k)``: 1, 1, 3, 11, 45, 197, ..."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k < 2:
        return 1
    # (k+1) s(k) = (6k-3) s(k-1) - (k-2) s(k-2)
    num = (6 * k - 3) * schroeder(k - 1) - (k - 2) * schroeder(k - 2)
    assert num % (k + 1) == 0
    return num // (k + 1)


def _crosses(c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    a, b = c1
    c, d = c2
    return (a < c < b < d) or (c < a < d < b)


@dataclass(frozen=True, order=True)
class ChordDiagram:
    m: int
    chords: tuple[tuple[int, int], ...]

    def __init__(self, m: int, chords=()):
        cs = tuple(sorted(tuple(sorted((int(a), int(b)))) for a, b in chords))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "chords", cs)

    def violations(self, config: Optional[SectorConfig] = None) -> list[str]:
        out = []
        if len(set(self.chords)) != len(self.chords):
            out.append("repeated chord")
        for a, b in self.chords:
            if not (0 <= a < b < self.m):
                out.append(f"chord {(a, b)} out of range")
            elif (b - a) % self.m in (1, self.m - 1):
                out.append(f"chord {(a, b)} joins adjacent vertices")
            elif config is not None and a in config.subdominant and b in config.subdominant:
                out.append(f"chord {(a, b)} joins subdominant faces")
        for c1, c2 in itertools.combinations(self.chords, 2):
            if _crosses(c1, c2):
                out.append(f"chords {c1} and {c2} cross")
        return out

    def regions(self) -> list[tuple[int, ...]]:
        """Polygon vertices of each region, counterclockwise."""
        regions = [tuple(range(self.m))]
        for a, b in self.chords:
            for idx, r in enumerate(regions):
                if a in r and b in r:
                    ia, ib = r.index(a), r.index(b)
                    if ia > ib:
                        ia, ib = ib, ia
                    regions[idx : idx + 1] = [r[ia : ib + 1], r[ib:] + r[: ia + 1]]
                    break
        return regions


def enum_chord_diagrams(m: int) -> list[ChordDiagram]:
    """All dissections of an ``m``-gon by non-crossing diagonals."""
    if m < 3:
        raise ValueError("need m >= 3")
    diagonals = [(a, b) for a in range(m) for b in range(a + 2, m) if not (a == 0 and b == m - 1)]
    out: list[ChordDiagram] = []

    def extend(start: int, chosen: list[tuple[int, int]]) -> None:
        out.append(ChordDiagram(m, chosen))
        for i in range(start, len(diagonals)):
            d = diagonals[i]
            if all(not _crosses(d, c) for c in chosen):
                chosen.append(d)
                extend(i + 1, chosen)
                chosen.pop()

    extend(0, [])
    return sorted(out)


def enum_junction_trees(config: SectorConfig) -> list[ChordDiagram]:
    sub = config.subdominant
    return [
        d
        for d in enum_chord_diagrams(config.n)
        if not any(a in sub and b in sub for a, b in d.chords)
    ]


def graph_from_diagram(config: SectorConfig, diagram: ChordDiagram, lengths=None) -> StandardGraph:
    """Standard graph dual to ``diagram``; ``lengths[c]`` edges along chord ``c``."""
    lengths = dict(lengths or {})
    regions = diagram.regions()
    adj: dict[int, list] = {r: [] for r in range(len(regions))}
    m = diagram.m
    for r, verts in enumerate(regions):
        for a, b in zip(verts, verts[1:] + verts[:1]):
            if (b - a) % m == 1:
                adj[r].append(Ray(b))
    nxt = len(regions)
    for c in diagram.chords:
        r1, r2 = [r for r, vs in enumerate(regions) if c[0] in vs and c[1] in vs]
        chain = [r1] + list(range(nxt, nxt + lengths.get(c, 1) - 1)) + [r2]
        nxt += len(chain) - 2
        for p, q in zip(chain, chain[1:]):
            adj.setdefault(p, []).append(q)
            adj.setdefault(q, []).append(p)
    return from_edges(config, adj)


def junction_tree(g: StandardGraph) -> ChordDiagram:
    """Dual chord diagram of the junction tree of ``g``."""
    chords = []
    for chain in g.chains():
        u, w = chain[0], chain[1]
        chords.append((g.left_face(u, w), g.right_face(u, w)))
    return ChordDiagram(g.n, chords)


def iter_standard_graphs(config: SectorConfig, max_chain: int) -> Iterator[StandardGraph]:
    if max_chain < 0:
        raise ValueError("max_chain must be non-negative")
    seen = set()
    for d in enum_junction_trees(config):
        for lens in itertools.product(range(1, max_chain + 1), repeat=len(d.chords)):
            g = graph_from_diagram(config, d, dict(zip(d.chords, lens)))
            key = g.canonical
            if key not in seen:
                seen.add(key)
                yield g


def enum_standard_graphs(config: SectorConfig, max_chain: int) -> list[StandardGraph]:
    """All valid normalized standard graphs with chains of at most ``max_chain`` edges."""
    out = []
    for g in iter_standard_graphs(config, max_chain):
        problems = validate_standard(g)
        if problems:
            raise AssertionError(f"enumerated an invalid graph: {problems[0]}")
        out.append(g)
    return sorted(out, key=lambda g: g.canonical)
