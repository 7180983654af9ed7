"""Stokes sector configurations.

A configuration records the number ``n`` of Stokes sectors and which of
them are subdominant (asymptotic value zero).  Sectors are indexed
``0 .. n-1`` counterclockwise; every index arithmetic is modulo ``n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class ConfigError(ValueError):
    """Raised for sector configurations that cannot be represented."""


@dataclass(frozen=True)
class SectorConfig:
    n: int
    subdominant: frozenset[int]

    def __init__(self, n: int, subdominant: Iterable[int] = ()) -> None:
        if n < 5:
            raise ConfigError(f"need at least 5 sectors, got n={n}")
        sub = frozenset(int(s) for s in subdominant)
        bad = sorted(s for s in sub if not 0 <= s < n)
        if bad:
            raise ConfigError(f"subdominant indices out of range for n={n}: {bad}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "subdominant", sub)

    def __repr__(self) -> str:
        return f"SectorConfig({self.n}, {{{','.join(map(str, sorted(self.subdominant)))}}})"

    @property
    def dominant(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if i not in self.subdominant)

    def is_dominant(self, i: int) -> bool:
        return (i % self.n) not in self.subdominant

    def violations(self) -> list[str]:
        """Problems that make the configuration unusable for the calculus."""
        out = []
        for s in sorted(self.subdominant):
            if (s + 1) % self.n in self.subdominant:
                out.append(f"adjacent subdominant sectors {s} and {(s + 1) % self.n}")
        if len(self.dominant) < 2 or (not self.subdominant and len(self.dominant) < 3):
            out.append("fewer than three distinct asymptotic values")
        return out

    def check(self) -> None:
        problems = self.violations()
        if problems:
            raise ConfigError("; ".join(problems))

    def next_dominant(self, j: int) -> int:
        """The successor ``j_+``: the next dominant index after ``j``."""
        for k in (1, 2):
            if self.is_dominant(j + k):
                return (j + k) % self.n
        raise ConfigError(f"no dominant sector within two steps after {j}")

    def prev_dominant(self, j: int) -> int:
        for k in (1, 2):
            if self.is_dominant(j - k):
                return (j - k) % self.n
        raise ConfigError(f"no dominant sector within two steps before {j}")

    def require_dominant(self, j: int) -> None:
        if not 0 <= j < self.n:
            raise ConfigError(f"label {j} out of range for n={self.n}")
        if j in self.subdominant:
            raise ConfigError(f"label {j} is subdominant")

    @property
    def is_alternating(self) -> bool:
        """Every other sector subdominant (the ``k = n/2`` case)."""
        return self.n % 2 == 0 and len(self.subdominant) == self.n // 2

    @property
    def has_adjacent_dominant(self) -> bool:
        return any(self.is_dominant(i) and self.is_dominant(i + 1) for i in range(self.n))
