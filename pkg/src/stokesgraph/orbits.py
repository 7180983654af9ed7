"""Monodromy orbits and the component classification."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from stokesgraph.actions import act_squared
from stokesgraph.config import ConfigError, SectorConfig
from stokesgraph.contraction import Trace, to_one_y, to_single_junction
from stokesgraph.enumeration import enum_standard_graphs
from stokesgraph.graph import StandardGraph, bounded_face_count


def neighbours(g: StandardGraph):
    for j in g.config.dominant:
        for sign in (1, -1):
            yield act_squared(g, j, sign)


def orbit_bfs(g: StandardGraph, max_chain: int) -> set[bytes]:
    """Canonical strings reachable from ``g`` through graphs whose chains
    have at most ``max_chain`` edges."""
    seen = {g.canonical}
    queue = deque([g])
    while queue:
        h = queue.popleft()
        for k in neighbours(h):
            if k.canonical in seen or k.max_chain() > max_chain:
                continue
            seen.add(k.canonical)
            queue.append(k)
    return seen


def contraction_key(g: StandardGraph, trace: Trace | None = None) -> tuple:
    """Class key: the canonical contraction form (and face count when alternating)."""
    if g.config.has_adjacent_dominant:
        _, h = to_single_junction(g, trace)
        return (h.canonical,)
    _, h = to_one_y(g, trace)
    return (bounded_face_count(h), h.canonical)


@dataclass
class ComponentClass:
    key: tuple
    members: list[StandardGraph]

    @property
    def representative(self) -> StandardGraph:
        return self.members[0]


@dataclass
class ComponentReport:
    config: SectorConfig
    max_chain: int
    classes: list[ComponentClass]
    max_vertices: int = 0

    def lines(self) -> list[str]:
        out = []
        for c in self.classes:
            key = ",".join(str(k) if isinstance(k, int) else k.decode() for k in c.key)
            out.append(f"{key}\t{len(c.members)}\t{c.representative.canonical.decode()}")
        return out


def classify_components(config: SectorConfig, max_chain: int) -> ComponentReport:
    config.check()
    groups: dict[tuple, list[StandardGraph]] = {}
    biggest = 0
    for g in enum_standard_graphs(config, max_chain):
        tr = Trace()
        groups.setdefault(contraction_key(g, tr), []).append(g)
        biggest = max(biggest, tr.max_vertices)
    classes = [ComponentClass(k, v) for k, v in sorted(groups.items())]
    return ComponentReport(config, max_chain, classes, biggest)


def zeros_of_eigenfunction(g: StandardGraph) -> int:
    """Number of zeros of the eigenfunction: one per bounded face."""
    if not g.config.is_alternating:
        raise ConfigError("zero count is defined for alternating subdominant sectors only")
    return bounded_face_count(g)
