"""Versioned line-based text formats.

Every document starts with ``format <kind> <version>`` and continues with
one ``field value`` pair per line.  Several documents may share a file,
separated by lines holding ``---``.  Blank lines and ``#`` comments are
ignored.  Parsing checks syntax and internal consistency only; semantic
validity (for instance the side rule) is left to the validators.

File suffixes: ``.sgraph``, ``.cgraph``, ``.chords``, ``.word``, ``.loops``.
"""
from __future__ import annotations

from pathlib import Path
from typing import Callable, Iterable, Union

from stokesgraph.actions import BraidWord
from stokesgraph.cellgraph import CellGraph
from stokesgraph.config import ConfigError, SectorConfig
from stokesgraph.enumeration import ChordDiagram
from stokesgraph.graph import Ray, StandardGraph
from stokesgraph.loops import LoopSystem, format_word, parse_word

VERSION = 1

Value = Union[StandardGraph, CellGraph, ChordDiagram, BraidWord, LoopSystem]

SUFFIX = {
    "sgraph": ".sgraph",
    "cgraph": ".cgraph",
    "chords": ".chords",
    "word": ".word",
    "loops": ".loops",
}


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


# ----------------------------------------------------------------------
# writing


def _config_lines(cfg: SectorConfig) -> list[str]:
    return [f"n {cfg.n}", "subdominant " + " ".join(map(str, sorted(cfg.subdominant)))]


def _entry(e) -> str:
    return f"R{e.index}" if isinstance(e, Ray) else str(e)


def dumps(value: Value) -> str:
    if isinstance(value, StandardGraph):
        lines = ["format sgraph 1", *_config_lines(value.config)]
        lines.append("vertices " + " ".join(map(str, value.vertices)))
        for v in value.vertices:
            lines.append(f"rotation {v} : " + " ".join(_entry(e) for e in value.rotation[v]))
        att = value.ray_attachment
        lines.append("rays " + " ".join(f"{i}@{att[i]}" for i in sorted(att)))
    elif isinstance(value, CellGraph):
        lines = ["format cgraph 1", *_config_lines(value.config)]
        lines.append("faces " + " ".join(map(str, value.faces)))
        lines.append("vertices " + " ".join(map(str, sorted(value.vertices))))
        for i, r in enumerate(value.rays):
            lines.append(f"ray {i} : " + " ".join(map(str, r)))
        for u, v, k in value.edges:
            lines.append(f"edge {u} {v} {k}")
    elif isinstance(value, ChordDiagram):
        lines = ["format chords 1", f"m {value.m}"]
        lines += [f"chord {a} {b}" for a, b in value.chords]
    elif isinstance(value, BraidWord):
        lines = ["format word 1", f"word {value}"]
    elif isinstance(value, LoopSystem):
        lines = ["format loops 1", *_config_lines(value.config)]
        lines += [f"loop {j} : {format_word(w)}" for j, w in value.entries.items()]
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")
    return "\n".join(lines) + "\n"


def dumps_all(values: Iterable[Value]) -> str:
    return "---\n".join(dumps(v) for v in values)


def save(path: str | Path, values: Union[Value, Iterable[Value]]) -> None:
    if isinstance(values, (StandardGraph, CellGraph, ChordDiagram, BraidWord, LoopSystem)):
        text = dumps(values)
    else:
        text = dumps_all(values)
    Path(path).write_text(text)


# ----------------------------------------------------------------------
# reading


class _Doc:
    def __init__(self, lines: list[tuple[int, str]]):
        self.lines = lines

    @property
    def last_line(self) -> int | None:
        return self.lines[-1][0] if self.lines else None

    def fields(self) -> Iterable[tuple[int, str, str]]:
        for no, text in self.lines:
            key, _, rest = text.partition(" ")
            yield no, key, rest.strip()


def _int(text: str, no: int, field: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}", no, field) from None


def _ints(text: str, no: int, field: str) -> list[int]:
    return [_int(t, no, field) for t in text.split()]


def _split_colon(rest: str, no: int, field: str) -> tuple[str, str]:
    head, sep, tail = rest.partition(":")
    if not sep:
        raise ParseError("expected '<key> : <values>'", no, field)
    return head.strip(), tail.strip()


def _config(values: dict, doc: _Doc) -> SectorConfig:
    for f in ("n", "subdominant"):
        if f not in values:
            raise ParseError("missing field", doc.last_line, f)
    n_no, n = values["n"]
    s_no, sub = values["subdominant"]
    try:
        return SectorConfig(_int(n, n_no, "n"), _ints(sub, s_no, "subdominant"))
    except ConfigError as e:
        raise ParseError(str(e), n_no, "n") from None


def _single(doc: _Doc, allowed: set[str], repeated: set[str] = frozenset()):
    values: dict[str, tuple[int, str]] = {}
    multi: dict[str, list[tuple[int, str]]] = {k: [] for k in repeated}
    for no, key, rest in doc.fields():
        if key in repeated:
            multi[key].append((no, rest))
        elif key in allowed:
            if key in values:
                raise ParseError("field given twice", no, key)
            values[key] = (no, rest)
        else:
            raise ParseError("unknown field", no, key)
    return values, multi


def _parse_entry(tok: str, no: int) -> object:
    if tok.startswith("R"):
        return Ray(_int(tok[1:], no, "rotation"))
    return _int(tok, no, "rotation")


def _read_sgraph(doc: _Doc) -> StandardGraph:
    values, multi = _single(doc, {"n", "subdominant", "vertices", "rays"}, {"rotation"})
    cfg = _config(values, doc)
    if "vertices" not in values:
        raise ParseError("missing field", doc.last_line, "vertices")
    v_no, vs = values["vertices"]
    verts = _ints(vs, v_no, "vertices")
    rot: dict[int, list] = {}
    for no, rest in multi["rotation"]:
        head, tail = _split_colon(rest, no, "rotation")
        v = _int(head, no, "rotation")
        if v in rot:
            raise ParseError(f"vertex {v} rotated twice", no, "rotation")
        if v not in verts:
            raise ParseError(f"vertex {v} not listed in vertices", no, "rotation")
        rot[v] = [_parse_entry(t, no) for t in tail.split()]
    missing = sorted(set(verts) - set(rot))
    if missing:
        raise ParseError(f"no rotation for vertices {missing}", v_no, "rotation")
    g = StandardGraph(cfg, rot)
    if "rays" in values:
        r_no, rs = values["rays"]
        for tok in rs.split():
            i, sep, v = tok.partition("@")
            if not sep:
                raise ParseError(f"expected '<ray>@<vertex>', got {tok!r}", r_no, "rays")
            i, v = _int(i, r_no, "rays"), _int(v, r_no, "rays")
            if g.ray_attachment.get(i) != v:
                raise ParseError(f"ray {i} is not attached at vertex {v} in the rotation", r_no, "rays")
    return g


def _read_cgraph(doc: _Doc) -> CellGraph:
    values, multi = _single(doc, {"n", "subdominant", "faces", "vertices"}, {"ray", "edge"})
    cfg = _config(values, doc)
    for f in ("faces", "vertices"):
        if f not in values:
            raise ParseError("missing field", doc.last_line, f)
    faces = _ints(values["faces"][1], values["faces"][0], "faces")
    verts = _ints(values["vertices"][1], values["vertices"][0], "vertices")
    rays: dict[int, list[int]] = {}
    for no, rest in multi["ray"]:
        head, tail = _split_colon(rest, no, "ray")
        rays[_int(head, no, "ray")] = _ints(tail, no, "ray")
    if sorted(rays) != list(range(cfg.n)):
        raise ParseError(f"need rays 0..{cfg.n - 1}, got {sorted(rays)}", doc.last_line, "ray")
    edges = []
    for no, rest in multi["edge"]:
        parts = _ints(rest, no, "edge")
        if len(parts) != 3:
            raise ParseError("expected '<tail> <head> <label>'", no, "edge")
        edges.append(tuple(parts))
    try:
        return CellGraph(cfg, verts, edges, faces, [rays[i] for i in range(cfg.n)])
    except ValueError as e:
        raise ParseError(str(e), doc.last_line) from None


def _read_chords(doc: _Doc) -> ChordDiagram:
    values, multi = _single(doc, {"m"}, {"chord"})
    if "m" not in values:
        raise ParseError("missing field", doc.last_line, "m")
    m = _int(values["m"][1], values["m"][0], "m")
    chords = []
    for no, rest in multi["chord"]:
        parts = _ints(rest, no, "chord")
        if len(parts) != 2:
            raise ParseError("expected two polygon vertices", no, "chord")
        chords.append(tuple(parts))
    return ChordDiagram(m, chords)


def _read_word(doc: _Doc) -> BraidWord:
    values, _ = _single(doc, {"word"})
    if "word" not in values:
        raise ParseError("missing field", doc.last_line, "word")
    no, text = values["word"]
    try:
        return BraidWord.parse(text)
    except ValueError as e:
        raise ParseError(str(e), no, "word") from None


def _read_loops(doc: _Doc) -> LoopSystem:
    values, multi = _single(doc, {"n", "subdominant"}, {"loop"})
    cfg = _config(values, doc)
    entries = {}
    for no, rest in multi["loop"]:
        head, tail = _split_colon(rest, no, "loop")
        try:
            entries[_int(head, no, "loop")] = parse_word(tail)
        except ValueError as e:
            raise ParseError(str(e), no, "loop") from None
    try:
        return LoopSystem(cfg, entries)
    except ConfigError as e:
        raise ParseError(str(e), doc.last_line, "loop") from None


_READERS: dict[str, Callable[[_Doc], Value]] = {
    "sgraph": _read_sgraph,
    "cgraph": _read_cgraph,
    "chords": _read_chords,
    "word": _read_word,
    "loops": _read_loops,
}


def _documents(text: str) -> list[list[tuple[int, str]]]:
    docs: list[list[tuple[int, str]]] = [[]]
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "---":
            docs.append([])
            continue
        docs[-1].append((no, line))
    return [d for d in docs if d]


def _read(lines: list[tuple[int, str]], expect: str | None) -> Value:
    no, first = lines[0]
    parts = first.split()
    if len(parts) != 3 or parts[0] != "format":
        raise ParseError("expected 'format <kind> <version>'", no, "format")
    kind, version = parts[1], parts[2]
    if kind not in _READERS:
        raise ParseError(f"unknown kind {kind!r}", no, "format")
    if version != str(VERSION):
        raise ParseError(f"unsupported version {version!r}", no, "format")
    if expect is not None and kind != expect:
        raise ParseError(f"expected a {expect} document, got {kind}", no, "format")
    return _READERS[kind](_Doc(lines[1:]))


def loads(text: str, expect: str | None = None) -> Value:
    docs = _documents(text)
    if len(docs) != 1:
        raise ParseError(f"expected one document, found {len(docs)}")
    return _read(docs[0], expect)


def loads_all(text: str, expect: str | None = None) -> list[Value]:
    return [_read(d, expect) for d in _documents(text)]


def load(path: str | Path, expect: str | None = None) -> Value:
    return loads(Path(path).read_text(), expect)


def load_all(path: str | Path, expect: str | None = None) -> list[Value]:
    return loads_all(Path(path).read_text(), expect)
