"""Graphviz export.  Layout is advisory; nothing parses this output back."""
from __future__ import annotations

from stokesgraph.cellgraph import CellGraph
from stokesgraph.graph import Ray, StandardGraph, structures

STYLE = {"I": "dotted", "V": "dashed", "Y": "dashed,bold"}


def _structure_edges(g: StandardGraph) -> dict[frozenset, str]:
    """Undirected edges of each structure, mapped to their kind."""
    out: dict[frozenset, str] = {}
    for s in structures(g).values():
        if s.kind in ("I", "V"):
            for r in s.branch:
                out[frozenset((s.junction, r))] = s.kind
        else:
            chain = g.path(s.junction, s.y_junction)
            for a, b in zip(chain, chain[1:]):
                out[frozenset((a, b))] = "Y"
            for e in g.rotation[s.y_junction]:
                if isinstance(e, Ray):
                    out[frozenset((s.y_junction, e))] = "Y"
    return out


def _node(e) -> str:
    return f"R{e.index}" if isinstance(e, Ray) else f"v{e}"


def export_standard(g: StandardGraph) -> str:
    cfg = g.config
    lines = [
        "digraph standard {",
        f'  label="n={cfg.n} subdominant={{{",".join(map(str, sorted(cfg.subdominant)))}}}";',
        "  node [shape=circle];",
    ]
    for i in range(cfg.n):
        kind = "dominant" if cfg.is_dominant(i) else "subdominant"
        lines.append(f"  // face S{i}: {kind}, between R{i} and R{(i + 1) % cfg.n}")
    for v in g.vertices:
        lines.append(f'  v{v} [label="{v}"];')
    for i in range(cfg.n):
        lines.append(f'  R{i} [shape=plaintext, label="R{i}"];')
    styled = _structure_edges(g)
    for v in g.vertices:
        for e in g.rotation[v]:
            left, right = g.sides(v, e)
            kind = styled.get(frozenset((v, e)))
            attrs = f', style="{STYLE[kind]}"' if kind else ""
            if cfg.is_dominant(left):
                lines.append(f'  {_node(v)} -> {_node(e)} [label="{left}"{attrs}];')
            if isinstance(e, Ray) and cfg.is_dominant(right):
                lines.append(f'  {_node(e)} -> {_node(v)} [label="{right}"{attrs}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_cell(cg: CellGraph) -> str:
    lines = [
        "digraph cell {",
        f'  label="faces {" ".join(map(str, cg.faces))}";',
        "  node [shape=circle];",
    ]
    for v in sorted(cg.vertices):
        lines.append(f'  v{v} [label="{v}"];')
    for i, r in enumerate(cg.rays):
        lines.append(f'  tail{i} [shape=plaintext, label="ray {i}"];')
        outward, inward = cg.tail_labels(i)
        if outward is not None:
            lines.append(f'  v{r[-1]} -> tail{i} [label="{outward}", style=dotted];')
        if inward is not None:
            lines.append(f'  tail{i} -> v{r[-1]} [label="{inward}", style=dotted];')
    for u, v, k in cg.edges:
        lines.append(f'  v{u} -> v{v} [label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(x) -> str:
    if isinstance(x, StandardGraph):
        return export_standard(x)
    if isinstance(x, CellGraph):
        return export_cell(x)
    raise TypeError(f"cannot export {type(x).__name__}")
