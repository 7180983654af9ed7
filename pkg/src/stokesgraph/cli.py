"""Command-line entry point ``stokesgraph``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from stokesgraph.actions import BraidWord, apply_word, apply_word_cell
from stokesgraph.cellgraph import CellGraph, to_cell_graph
from stokesgraph.config import SectorConfig
from stokesgraph.contraction import Trace, to_ivy, to_one_y, to_single_junction
from stokesgraph.dot import export_dot
from stokesgraph.enumeration import enum_standard_graphs, schroeder
from stokesgraph.graph import StandardGraph, validate_standard
from stokesgraph.loops import LoopSystem, project, word_action
from stokesgraph.orbits import classify_components, orbit_bfs
from stokesgraph.serialize import ParseError, dumps, dumps_all, loads

CORPUS_ENV = "STOKESGRAPH_CORPUS"


def corpus_dir() -> Path | None:
    d = os.environ.get(CORPUS_ENV)
    return Path(d) if d else None


def _resolve(name: str) -> Path:
    p = Path(name)
    if not p.exists() and not p.is_absolute() and corpus_dir() is not None:
        alt = corpus_dir() / p
        if alt.exists():
            return alt
    return p


def _read_text(name: str) -> str:
    if name == "-":
        return sys.stdin.read()
    return _resolve(name).read_text()


def _config(args) -> SectorConfig:
    sub = [int(s) for s in args.sub.split(",") if s.strip()] if args.sub else []
    return SectorConfig(args.n, sub)


def _word(text: str) -> BraidWord:
    if text.endswith(".word") and _resolve(text).exists():
        return loads(_read_text(text), "word")
    return BraidWord.parse(text)


def _graph(name: str) -> StandardGraph | CellGraph:
    g = loads(_read_text(name))
    if not isinstance(g, (StandardGraph, CellGraph)):
        raise ParseError(f"{name} does not hold a graph")
    return g


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args) -> int:
    cfg = _config(args)
    graphs = enum_standard_graphs(cfg, args.max_chain)
    out = args.output
    if out is None and corpus_dir() is not None:
        sub = "-".join(map(str, sorted(cfg.subdominant))) or "none"
        corpus_dir().mkdir(parents=True, exist_ok=True)
        out = str(corpus_dir() / f"n{cfg.n}_sub{sub}_b{args.max_chain}.sgraph")
    _emit(dumps_all(graphs), out)
    if out:
        print(f"{len(graphs)} graphs written to {out}", file=sys.stderr)
    return 0


def cmd_act(args) -> int:
    g = _graph(args.graph)
    w = _word(args.word)
    if isinstance(g, CellGraph):
        _emit(dumps(apply_word_cell(g, w)), args.output)
    elif w.is_squared():
        _emit(dumps(apply_word(g, w)), args.output)
    else:
        _emit(dumps(apply_word_cell(to_cell_graph(g, args.window), w)), args.output)
    return 0


def cmd_contract(args) -> int:
    g = _graph(args.graph)
    fn = {"ivy": to_ivy, "single-junction": to_single_junction, "one-y": to_one_y}[args.target]
    tr = Trace()
    w, h = fn(g, tr)
    _emit(f"# word {w}\n# max intermediate vertices {tr.max_vertices}\n" + dumps(h), args.output)
    return 0


def cmd_orbit(args) -> int:
    g = _graph(args.graph)
    for key in sorted(orbit_bfs(g, args.bound)):
        print(key.decode())
    return 0


def cmd_components(args) -> int:
    report = classify_components(_config(args), args.bound)
    print(f"# {len(report.classes)} classes; max intermediate vertices {report.max_vertices}")
    for line in report.lines():
        print(line)
    return 0


def cmd_schroeder(args) -> int:
    print(schroeder(args.k))
    return 0


def cmd_loops(args) -> int:
    sys_ = LoopSystem.initial(_config(args))
    sys_ = word_action(sys_, _word(args.word))
    if args.project:
        sys_ = project(sys_, [int(s) for s in args.project.split(",")])
    print(sys_)
    return 0


def cmd_verify(args) -> int:
    from stokesgraph.verify import run

    results = run(args.suite)
    if args.json:
        print(json.dumps([r.__dict__ for r in results], indent=2))
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.ok for r in results) else 1


def cmd_export(args) -> int:
    _emit(export_dot(_graph(args.graph)), args.output)
    return 0


def cmd_validate(args) -> int:
    g = _graph(args.graph)
    if not isinstance(g, StandardGraph):
        print("only standard graphs are validated here", file=sys.stderr)
        return 2
    problems = validate_standard(g)
    for p in problems:
        print(p)
    return 1 if problems else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stokesgraph", description="Standard graphs and their monodromy actions.")
    sub = p.add_subparsers(dest="command", required=True)

    def config_flags(sp):
        sp.add_argument("--n", type=int, required=True, help="number of sectors")
        sp.add_argument("--sub", default="", help="comma-separated subdominant sectors")

    sp = sub.add_parser("enumerate", help="write all standard graphs up to a chain bound")
    config_flags(sp)
    sp.add_argument("--max-chain", type=int, default=1)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("act", help="apply a braid word (left to right)")
    sp.add_argument("graph")
    sp.add_argument("word", help="e.g. 1^+2,2^-2 or a .word file")
    sp.add_argument("--window", type=int, default=4, help="ray window for odd exponents")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_act)

    sp = sub.add_parser("contract", help="contract to a canonical form")
    sp.add_argument("graph")
    sp.add_argument("--target", choices=["ivy", "single-junction", "one-y"], default="ivy")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_contract)

    sp = sub.add_parser("orbit", help="bounded breadth-first orbit")
    sp.add_argument("graph")
    sp.add_argument("--bound", type=int, default=1)
    sp.set_defaults(func=cmd_orbit)

    sp = sub.add_parser("components", help="classify enumerated graphs into orbit classes")
    config_flags(sp)
    sp.add_argument("--bound", type=int, default=1)
    sp.set_defaults(func=cmd_components)

    sp = sub.add_parser("schroeder", help="small Schroeder number s(k)")
    sp.add_argument("k", type=int)
    sp.set_defaults(func=cmd_schroeder)

    sp = sub.add_parser("loops", help="act on the initial loop system")
    config_flags(sp)
    sp.add_argument("word")
    sp.add_argument("--project", help="comma-separated loops to delete afterwards")
    sp.set_defaults(func=cmd_loops)

    sp = sub.add_parser("verify", help="run an acceptance suite")
    sp.add_argument("suite", nargs="?", default="all")
    sp.add_argument("--json", action="store_true", help="machine-readable report")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("export", help="Graphviz DOT of a graph")
    sp.add_argument("graph")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_export)

    sp = sub.add_parser("validate", help="list violated invariants of a standard graph")
    sp.add_argument("graph")
    sp.set_defaults(func=cmd_validate)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
