"""Bead-sets and s-abaci.

A bead-set is a finite set of non-negative integers; members are beads and
every other position is a spacer.  Laid out on ``s`` runners, position
``(i, j)`` (runner ``i``, row ``j``, both from 0, row 0 at the bottom)
carries the value ``i + j*s``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .partitions import Partition, first_column_hooks, _partition_from_beads


@dataclass(frozen=True)
class BeadSet:
    """Sorted tuple of distinct non-negative integers."""

    beads: tuple[int, ...] = ()

    def __post_init__(self):
        bs = tuple(sorted(set(self.beads)))
        if len(bs) != len(tuple(self.beads)):
            raise ValueError(f"duplicate beads in {self.beads!r}")
        if bs and bs[0] < 0:
            raise ValueError("beads must be non-negative")
        object.__setattr__(self, "beads", bs)

    @classmethod
    def of(cls, values: Iterable[int]) -> "BeadSet":
        return cls(tuple(sorted(set(values))))

    @property
    def is_minimal(self) -> bool:
        # With 0 a spacer the beads are exactly the first-column hook lengths.
        return not self.beads or self.beads[0] != 0

    def __len__(self):
        return len(self.beads)

    def __iter__(self):
        return iter(self.beads)

    def __contains__(self, x):
        return x in set(self.beads)

    def to_json(self) -> list[int]:
        return list(self.beads)


def min_beadset(p: Partition) -> BeadSet:
    return BeadSet(tuple(sorted(first_column_hooks(p))))


def partition_of(x: BeadSet | Iterable[int]) -> Partition:
    """Each bead contributes a component equal to the spacers below it."""
    beads = x.beads if isinstance(x, BeadSet) else tuple(sorted(x))
    return _partition_from_beads(beads)


def shift(x: BeadSet, k: int) -> BeadSet:
    """Add ``k`` packed beads at the bottom: ``{0..k-1} | {b + k}``."""
    if k < 0:
        raise ValueError("shift must be non-negative")
    return BeadSet(tuple(range(k)) + tuple(b + k for b in x.beads))


def minimalize(x: BeadSet) -> BeadSet:
    """Strip the leading run ``0, 1, ..., j`` of beads and shift down."""
    j = 0
    for b in x.beads:
        if b != j:
            break
        j += 1
    return BeadSet(tuple(b - j for b in x.beads[j:]))


def normalize(x: BeadSet, s: int) -> BeadSet:
    """Shift the minimal form of ``x`` so the bead count is a multiple of ``s``."""
    if s < 1:
        raise ValueError("s must be positive")
    m = minimalize(x)
    return shift(m, (-len(m)) % s)


@dataclass(frozen=True, eq=False)
class Abacus:
    """Occupancy grid of a bead-set on ``runner_count`` runners.

    ``grid[j, i]`` is True when value ``i + j*runner_count`` is a bead.
    """

    runner_count: int
    row_count: int
    grid: np.ndarray

    def __post_init__(self):
        g = np.array(self.grid, dtype=bool)
        if g.shape != (self.row_count, self.runner_count):
            raise ValueError(f"grid shape {g.shape} != ({self.row_count}, {self.runner_count})")
        g.setflags(write=False)
        object.__setattr__(self, "grid", g)

    def __eq__(self, other):
        if not isinstance(other, Abacus):
            return NotImplemented
        return (self.runner_count, self.row_count) == (other.runner_count, other.row_count) and bool(
            np.array_equal(self.grid, other.grid)
        )

    def __hash__(self):
        return hash((self.runner_count, self.row_count, self.grid.tobytes()))

    def __getitem__(self, pos: tuple[int, int]) -> bool:
        i, j = pos
        return bool(self.grid[j, i])

    @property
    def bead_count(self) -> int:
        return int(self.grid.sum())

    def beads(self) -> BeadSet:
        rows, cols = np.nonzero(self.grid)
        return BeadSet.of(int(i + j * self.runner_count) for j, i in zip(rows, cols))

    def runner(self, i: int) -> tuple[int, ...]:
        """Rows holding a bead on runner ``i``."""
        return tuple(int(j) for j in np.flatnonzero(self.grid[:, i]))

    def runner_counts(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.grid.sum(axis=0))

    def to_ascii(self) -> str:
        """Top row first; ``o`` bead, ``.`` spacer, single-space separated."""
        return "\n".join(" ".join("o" if b else "." for b in row) for row in self.grid[::-1])

    def to_json(self) -> dict:
        return {
            "s": self.runner_count,
            "q": self.row_count,
            "rows": [[bool(b) for b in row] for row in self.grid],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Abacus":
        return cls(int(data["s"]), int(data["q"]), np.array(data["rows"], dtype=bool).reshape(int(data["q"]), int(data["s"])))


def to_abacus(x: BeadSet, s: int, q: int | None = None) -> Abacus:
    if s < 1:
        raise ValueError("s must be positive")
    top = x.beads[-1] if x.beads else -1
    needed = max(1, math.ceil((top + 1) / s))
    if q is None:
        q = needed
    elif top >= s * q:
        raise ValueError(f"bead {top} does not fit on {q} rows of {s} runners")
    flat = np.zeros(s * q, dtype=bool)
    flat[list(x.beads)] = True
    return Abacus(s, q, flat.reshape(q, s))


def axis(x: BeadSet) -> Fraction:
    """The half-integer where beads to the right balance spacers to the left.

    Passing each position moves the balance by exactly one, so the point is
    unique and equals ``len(x) - 1/2``.  For a minimal bead-set of a
    self-conjugate partition this is half the largest bead.
    """
    return Fraction(2 * len(x) - 1, 2)


def balance(x: BeadSet, theta: Fraction) -> tuple[int, int]:
    """(beads strictly right of ``theta``, spacers strictly left of it)."""
    right = sum(1 for b in x.beads if b > theta)
    members = set(x.beads)
    left = sum(1 for y in range(0, math.ceil(theta)) if y < theta and y not in members)
    return right, left


def is_self_conjugate_axis(x: BeadSet) -> bool:
    """Reflection through the axis swaps beads and spacers."""
    n = len(x)
    members = set(x.beads)
    if x.beads and x.beads[-1] > 2 * n - 1:
        return False
    return all((p in members) != ((2 * n - 1 - p) in members) for p in range(2 * n))


def runner_beadsets(x: BeadSet, s: int) -> list[BeadSet]:
    """``X_i = {j : i + j*s in X}`` for each runner ``i``."""
    rows: list[list[int]] = [[] for _ in range(s)]
    for b in x.beads:
        rows[b % s].append(b // s)
    return [BeadSet(tuple(r)) for r in rows]


def from_runners(runners: Sequence[Iterable[int]]) -> BeadSet:
    s = len(runners)
    return BeadSet.of(i + j * s for i, r in enumerate(runners) for j in r)
