"""Integer partitions: construction, conjugation, hook lengths, hook removal.

Boxes are addressed in matrix notation: ``(row, column)`` with both indices
starting at 1, row 1 at the top of the Young diagram.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class InvalidPartition(ValueError):
    """Raised when a sequence is not a non-increasing tuple of positive ints."""


@dataclass(frozen=True, order=True)
class Partition:
    """A non-increasing, finite sequence of positive integers.

    Instances are immutable and hashable; ordering is lexicographic on the
    components, which is the canonical order used by the enumerators.
    """

    components: tuple[int, ...] = ()

    def __post_init__(self):
        comps = tuple(self.components)
        for c in comps:
            if not isinstance(c, int) or isinstance(c, bool):
                raise InvalidPartition(f"component {c!r} is not an integer")
            if c < 1:
                raise InvalidPartition(f"component {c} is not positive")
        for a, b in zip(comps, comps[1:]):
            if a < b:
                raise InvalidPartition(f"components {comps} are not non-increasing")
        object.__setattr__(self, "components", comps)

    @property
    def size(self) -> int:
        return sum(self.components)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __bool__(self):
        return bool(self.components)

    def __repr__(self):
        return f"Partition{self.components!r}" if len(self) != 1 else f"Partition({self.components[0]})"

    def boxes(self) -> Iterator[tuple[int, int]]:
        for row, length in enumerate(self.components, start=1):
            for col in range(1, length + 1):
                yield row, col

    def to_json(self) -> list[int]:
        return list(self.components)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "Partition":
        return make_partition(data)


EMPTY = Partition(())


def make_partition(components: Iterable[int]) -> Partition:
    """Validate ``components`` and wrap them as a :class:`Partition`.

    >>> make_partition([4, 2, 1, 1]).size
    8
    """
    return Partition(tuple(int(c) if not isinstance(c, int) else c for c in components))


def conjugate(p: Partition) -> Partition:
    if not p:
        return EMPTY
    return Partition(tuple(sum(1 for c in p if c >= col) for col in range(1, p[0] + 1)))


def is_self_conjugate(p: Partition) -> bool:
    return conjugate(p) == p


def hook_length(p: Partition, row: int, col: int, conj: Partition | None = None) -> int:
    """Length of the hook with corner ``(row, col)``: arm + leg + 1."""
    if conj is None:
        conj = conjugate(p)
    return (p[row - 1] - col) + (conj[col - 1] - row) + 1


def hook_lengths(p: Partition) -> tuple[tuple[int, ...], ...]:
    """Hook-length table; row ``r`` has ``p[r]`` entries."""
    conj = conjugate(p)
    return tuple(
        tuple(hook_length(p, r, c, conj) for c in range(1, length + 1))
        for r, length in enumerate(p.components, start=1)
    )


def first_column_hooks(p: Partition) -> frozenset[int]:
    # Hook at (r, 1) has length p_r + (len(p) - r).
    n = len(p)
    return frozenset(c + n - r for r, c in enumerate(p.components, start=1))


def remove_hook(p: Partition, corner: tuple[int, int]) -> Partition:
    """Remove the hook with the given corner from ``p``.

    Done on the minimal bead-set: the bead for row ``r`` slides down by the
    hook length onto a spacer, and the result is read back as a partition.
    """
    row, col = corner
    if not (1 <= row <= len(p) and 1 <= col <= p[row - 1]):
        raise ValueError(f"{corner} is not a box of {p}")
    length = hook_length(p, row, col)
    n = len(p)
    beads = {c + n - r for r, c in enumerate(p.components, start=1)}
    bead = p[row - 1] + n - row
    target = bead - length
    assert target >= 0 and target not in beads
    beads.remove(bead)
    beads.add(target)
    return _partition_from_beads(beads)


def _partition_from_beads(beads) -> Partition:
    comps = []
    spacers = 0
    prev = -1
    for b in sorted(beads):
        spacers += b - prev - 1
        prev = b
        if spacers:
            comps.append(spacers)
    return Partition(tuple(sorted(comps, reverse=True)))


def is_t_core(p: Partition, t: int) -> bool:
    """True iff no hook of ``p`` has length exactly ``t``."""
    if t < 1:
        raise ValueError("t must be positive")
    return all(t not in row for row in hook_lengths(p))


def hooks_of_length(p: Partition, t: int) -> list[tuple[int, int]]:
    return [(r + 1, c + 1) for r, row in enumerate(hook_lengths(p)) for c, h in enumerate(row) if h == t]


def contains(big: Partition, small: Partition) -> bool:
    """Young-diagram inclusion: ``small[i] <= big[i]`` for every row."""
    if len(small) > len(big):
        return False
    return all(a >= b for a, b in zip(big, small))


def staircase(k: int) -> Partition:
    """The staircase ``(k, k-1, ..., 1)``; these are exactly the 2-cores."""
    return Partition(tuple(range(k, 0, -1)))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.components)


@lru_cache(maxsize=None)
def _count(n: int, max_part: int) -> int:
    if n == 0:
        return 1
    return sum(_count(n - k, k) for k in range(1, min(n, max_part) + 1))


def partition_count(n: int) -> int:
    return _count(n, n)


def random_partition(n: int, rng: random.Random | None = None) -> Partition:
    """Uniformly random partition of ``n``."""
    rng = rng or random.Random()
    comps = []
    max_part = n
    while n:
        r = rng.randrange(_count(n, max_part))
        for k in range(min(n, max_part), 0, -1):
            c = _count(n - k, k)
            if r < c:
                break
            r -= c
        comps.append(k)
        n -= k
        max_part = k
    return Partition(tuple(comps))
