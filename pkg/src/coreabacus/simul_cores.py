"""Simultaneous (s, t)-cores through the gap poset of the semigroup <s, t>.

Lower ideals of the gap poset are in bijection with (s, t)-cores: an ideal
is the minimal bead-set (first-column hook lengths) of its core.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .abacus import BeadSet, axis, is_self_conjugate_axis, partition_of
from .partitions import Partition


class NotCoprime(ValueError):
    pass


def _check_pair(s: int, t: int):
    if s < 2 or t < 2:
        raise ValueError("s and t must be at least 2")
    if math.gcd(s, t) != 1:
        raise NotCoprime(f"gcd({s}, {t}) = {math.gcd(s, t)}; s and t must be coprime")


@dataclass(frozen=True)
class GapSet:
    """Positive integers not of the form ``a*s + b*t`` with ``a, b >= 0``."""

    s: int
    t: int
    gaps: frozenset[int]

    @property
    def covers(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (z, z - d) for z in self.gaps for d in (self.s, self.t) if z - d in self.gaps
        )

    def below(self, z: int) -> tuple[int, ...]:
        """Elements covered by ``z``."""
        return tuple(z - d for d in (self.s, self.t) if z - d in self.gaps)

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.gaps))

    def __contains__(self, z):
        return z in self.gaps

    def __len__(self):
        return len(self.gaps)


@dataclass(frozen=True)
class LowerIdeal:
    members: frozenset[int]


def gap_set(s: int, t: int) -> GapSet:
    _check_pair(s, t)
    limit = s * t
    representable = [False] * (limit + 1)
    for a in range(0, limit // s + 1):
        for b in range(0, (limit - a * s) // t + 1):
            representable[a * s + b * t] = True
    return GapSet(s, t, frozenset(z for z in range(1, limit + 1) if not representable[z]))


def is_lower_ideal(g: GapSet, members: Iterable[int]) -> bool:
    m = set(members)
    if not m <= g.gaps:
        return False
    return all(y in m for z in m for y in g.below(z))


def ideal_to_core(g: GapSet, ideal: LowerIdeal | Iterable[int]) -> Partition:
    members = ideal.members if isinstance(ideal, LowerIdeal) else frozenset(ideal)
    if not is_lower_ideal(g, members):
        raise ValueError(f"{sorted(members)} is not a lower ideal of the gaps of <{g.s}, {g.t}>")
    return partition_of(BeadSet.of(members))


def iter_ideals(g: GapSet) -> Iterator[LowerIdeal]:
    """Stream every lower ideal, depth first.

    Gaps are decided in increasing order; a gap may join only if everything
    it covers already has, so each ideal is produced exactly once.
    """
    order = g.sorted()
    chosen: set[int] = set()

    def walk(pos: int) -> Iterator[LowerIdeal]:
        if pos == len(order):
            yield LowerIdeal(frozenset(chosen))
            return
        z = order[pos]
        yield from walk(pos + 1)
        if all(y in chosen for y in g.below(z)):
            chosen.add(z)
            yield from walk(pos + 1)
            chosen.remove(z)

    yield from walk(0)


def count_ideals(g: GapSet) -> int:
    return sum(1 for _ in iter_ideals(g))


def iter_cores(s: int, t: int) -> Iterator[Partition]:
    g = gap_set(s, t)
    for ideal in iter_ideals(g):
        yield partition_of(BeadSet.of(ideal.members))


def enumerate_cores(s: int, t: int) -> list[Partition]:
    """All (s, t)-cores in lexicographic order of their components."""
    return sorted(iter_cores(s, t))


def anderson_count(s: int, t: int) -> int:
    _check_pair(s, t)
    return math.comb(s + t, t) // (s + t)


def kappa_size(s: int, t: int) -> int:
    return (s * s - 1) * (t * t - 1) // 24


def kappa(s: int, t: int) -> Partition:
    """The largest (s, t)-core: its first-column hooks are all the gaps."""
    g = gap_set(s, t)
    return partition_of(BeadSet.of(g.gaps))


def half_membership_check(s: int, t: int) -> bool:
    """Half of ``1..(s-1)(t-1)`` are gaps.

    Abacus route: the gaps form the minimal bead-set of the largest core,
    whose axis sits at the midpoint of ``0..st-s-t``; reflection through it
    pairs every bead with a spacer, so exactly half the positions are beads.
    The result is compared with a direct count.
    """
    g = gap_set(s, t)
    x = BeadSet.of(g.gaps)
    frobenius = s * t - s - t
    top = (s - 1) * (t - 1)
    if axis(x) != Fraction(frobenius, 2) or not is_self_conjugate_axis(x):
        return False
    by_reflection = (frobenius + 1) // 2
    by_count = sum(1 for z in range(1, top + 1) if z in g)
    return by_reflection == by_count == top // 2


def max_triple_core_size(s: int) -> int:
    """Size of a largest simultaneous (s-1, s, s+1)-core for even ``s > 2``."""
    if s <= 2 or s % 2:
        raise ValueError(f"s must be even and greater than 2, got {s}")
    k = s // 2
    return k * math.comb(k + 1, 3)


def max_triple_core_size_odd(s: int) -> int:
    """Same quantity for odd ``s = 2k + 1 > 2``."""
    if s <= 2 or s % 2 == 0:
        raise ValueError(f"s must be odd and greater than 2, got {s}")
    k = s // 2
    return (k + 1) * math.comb(k + 1, 3) + math.comb(k + 2, 3)
