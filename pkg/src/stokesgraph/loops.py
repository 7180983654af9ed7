"""Loop systems in the free group and the braid actions on them.

A word is a tuple of non-zero integers: ``i + 1`` is the generator ``g_i``
and ``-(i + 1)`` its inverse.  In text, ``g_i`` is the ``i``-th lowercase
letter and its inverse the uppercase one; the empty word is ``1``.
"""
from __future__ import annotations

import string
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from stokesgraph.actions import BraidWord
from stokesgraph.config import ConfigError, SectorConfig

Word = tuple[int, ...]


def reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for x in word:
        if x == 0:
            raise ValueError("0 is not a letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def mul(*words: Sequence[int]) -> Word:
    return reduce(x for w in words for x in w)


def gen(i: int) -> Word:
    return (i + 1,)


def cyclic_reduce(word: Sequence[int]) -> Word:
    w = reduce(word)
    while len(w) > 1 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


def conjugate(u: Sequence[int], v: Sequence[int]) -> bool:
    """Whether ``u`` and ``v`` are conjugate in the free group."""
    a, b = cyclic_reduce(u), cyclic_reduce(v)
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = a + a
    return any(doubled[k : k + len(a)] == b for k in range(len(a)))


def format_word(word: Sequence[int]) -> str:
    if not word:
        return "1"
    if max(abs(x) for x in word) > 26:
        raise ValueError("letter syntax only covers 26 generators")
    return "".join(
        string.ascii_lowercase[x - 1] if x > 0 else string.ascii_uppercase[-x - 1] for x in word
    )


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for pos, ch in enumerate(text):
        if ch in string.ascii_lowercase:
            out.append(string.ascii_lowercase.index(ch) + 1)
        elif ch in string.ascii_uppercase:
            out.append(-(string.ascii_uppercase.index(ch) + 1))
        else:
            raise ValueError(f"bad letter {ch!r} at position {pos} in {text!r}")
    return reduce(out)


@dataclass(frozen=True)
class LoopSystem:
    """One reduced word per dominant sector."""

    config: SectorConfig
    entries: Mapping[int, Word]

    def __init__(self, config: SectorConfig, entries: Mapping[int, Iterable[int]]):
        keys = set(entries)
        if keys != set(config.dominant):
            raise ConfigError(f"entries {sorted(keys)} do not match dominant sectors {list(config.dominant)}")
        object.__setattr__(self, "config", config)
        object.__setattr__(
            self, "entries", MappingProxyType({j: reduce(entries[j]) for j in sorted(keys)})
        )

    @classmethod
    def initial(cls, config: SectorConfig) -> "LoopSystem":
        return cls(config, {j: gen(j) for j in config.dominant})

    def __getitem__(self, j: int) -> Word:
        return self.entries[j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LoopSystem):
            return NotImplemented
        return self.config == other.config and dict(self.entries) == dict(other.entries)

    def __hash__(self) -> int:
        return hash((self.config, tuple(self.entries.items())))

    def as_tuple(self) -> tuple[Word, ...]:
        return tuple(self.entries[j] for j in self.config.dominant)

    def product(self) -> Word:
        return mul(*self.as_tuple())

    def __str__(self) -> str:
        return "(" + ", ".join(format_word(w) for w in self.as_tuple()) + ")"


def b_action(sys: LoopSystem, j: int, sign: int) -> LoopSystem:
    """``A_j`` (``sign=+1``) or its inverse on the loops; ``j_+`` skips
    subdominant sectors of ``sys.config``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    cfg = sys.config
    cfg.require_dominant(j)
    jp = cfg.next_dominant(j)
    e = dict(sys.entries)
    a, b = e[j], e[jp]
    if sign > 0:
        e[j], e[jp] = mul(a, b, inverse(a)), a
    else:
        e[j], e[jp] = b, mul(inverse(b), a, b)
    return LoopSystem(cfg, e)


def word_action(sys: LoopSystem, word: BraidWord) -> LoopSystem:
    """Apply the letters left to right; ``j^+2`` counts as two letters."""
    for j, e in word:
        for _ in range(abs(e)):
            sys = b_action(sys, j, 1 if e > 0 else -1)
    return sys


def project(sys: LoopSystem, removed: Iterable[int]) -> LoopSystem:
    """Drop the loops in ``removed`` and erase their generators."""
    removed = frozenset(removed)
    cfg = SectorConfig(sys.config.n, sys.config.subdominant | removed)
    drop = {i + 1 for i in removed}
    e = {j: reduce(x for x in w if abs(x) not in drop) for j, w in sys.entries.items() if j not in removed}
    return LoopSystem(cfg, e)


def lifted(n: int, removed: Iterable[int], j: int) -> BraidWord:
    """Word on the full system whose projection realizes ``A_j``."""
    removed = set(removed)
    if (j + 1) % n in removed:
        k = (j + 1) % n
        return BraidWord([(k, -1), (j, 1), (k, 1)])
    return BraidWord([(j, 1)])


def verify_commutation(n: int, removed: Iterable[int], j: int) -> bool:
    """Check ``project(lift(A_j)(initial)) == A_j(project(initial))``."""
    removed = frozenset(removed)
    full = LoopSystem.initial(SectorConfig(n))
    small = project(full, removed)
    small.config.check()
    small.config.require_dominant(j)
    left = project(word_action(full, lifted(n, removed, j)), removed)
    right = b_action(small, j, 1)
    return left == right
