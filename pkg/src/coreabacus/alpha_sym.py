"""The abacus alpha(s) of the largest (s-1, s+1)-core and its symmetries.

For ``s = 2k > 2``, alpha(s) has ``s`` runners and ``s - 2`` rows.  Runner
``i`` and its mirror ``s - 1 - i`` are identical; for ``i < k`` the runner
holds beads in rows ``0..i-1``, then ``k - 1 - i`` spacer/bead pairs, then
spacers.  Every runner carries ``k - 1`` beads.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .abacus import Abacus, BeadSet, min_beadset, normalize, partition_of, to_abacus
from .core_quotient import Quotient, s_core, s_quotient
from .partitions import EMPTY, Partition, conjugate, is_self_conjugate, staircase
from .simul_cores import gap_set, kappa, kappa_size


def _check_even(s: int):
    if s <= 2 or s % 2:
        raise ValueError(f"s must be even and greater than 2, got {s}")


@dataclass(frozen=True)
class AlphaAbacus:
    s: int
    abacus: Abacus

    @property
    def k(self) -> int:
        return self.s // 2

    def beads(self) -> BeadSet:
        return self.abacus.beads()

    def partition(self) -> Partition:
        return partition_of(self.beads())


def _alpha_runner(i: int, k: int) -> list[bool]:
    i = min(i, 2 * k - 1 - i)
    column = [True] * i + [False, True] * (k - 1 - i)
    return column + [False] * (2 * k - 2 - len(column))


def build_alpha(s: int) -> AlphaAbacus:
    _check_even(s)
    k = s // 2
    grid = np.array([_alpha_runner(i, k) for i in range(s)], dtype=bool).T
    return AlphaAbacus(s, Abacus(s, s - 2, grid))


def nest(a: AlphaAbacus) -> AlphaAbacus:
    """Grow alpha(s) into alpha(s + 2) by adding an outer frame.

    A bead row goes underneath, a spacer row on top, and a new outermost
    runner on each side reads spacer, alternating bead/spacer for ``s - 2``
    rows, then bead.
    """
    s = a.s
    g = a.abacus.grid
    g = np.vstack([np.ones((1, s), dtype=bool), g, np.zeros((1, s), dtype=bool)])
    outer = np.array([False] + [j % 2 == 0 for j in range(s - 2)] + [True], dtype=bool)[:, None]
    g = np.hstack([outer, g, outer])
    return AlphaAbacus(s + 2, Abacus(s + 2, s, g))


@dataclass(frozen=True)
class PiquoReport:
    s: int
    core: Partition
    quotient: Quotient
    expected: tuple[Partition, ...]

    @property
    def core_empty(self) -> bool:
        return self.core == EMPTY

    @property
    def quotient_matches(self) -> bool:
        return self.quotient.parts == self.expected

    @property
    def passed(self) -> bool:
        return self.core_empty and self.quotient_matches


def expected_alpha_quotient(s: int) -> tuple[Partition, ...]:
    """Part ``i`` and part ``s-1-i`` are the staircase of size ``k-i-1``."""
    k = s // 2
    half = [staircase(k - i - 1) for i in range(k)]
    return tuple(half + half[::-1])


def verify_piquo(s: int) -> PiquoReport:
    _check_even(s)
    p = build_alpha(s).partition()
    return PiquoReport(s, s_core(p, s), s_quotient(p, s), expected_alpha_quotient(s))


def verify_alpha_is_kappa(s: int) -> bool:
    _check_even(s)
    beads = build_alpha(s).beads()
    p = partition_of(beads)
    return beads.is_minimal and p == kappa(s - 1, s + 1) and p.size == kappa_size(s - 1, s + 1)


def is_horizontally_antisymmetric(a: Abacus) -> bool:
    """Bead at ``(i, j)`` iff spacer at ``(i, q-1-j)``."""
    return bool(np.all(a.grid != a.grid[::-1, :]))


def is_vertically_symmetric(a: Abacus) -> bool:
    """Bead at ``(i, j)`` iff bead at ``(s-1-i, j)``; needs an even runner count."""
    if a.runner_count % 2:
        return False
    return bool(np.array_equal(a.grid, a.grid[:, ::-1]))


@dataclass(frozen=True)
class StrongsVerdict:
    """Both sides of the abacus symmetry characterization for one partition."""

    s: int
    q: int
    bead_count: int
    core_empty: bool
    quotients_self_conjugate: bool
    quotients_mirrored: bool
    horizontal: bool
    vertical: bool

    @property
    def symmetric(self) -> bool:
        return self.horizontal and self.vertical

    @property
    def conditions_hold(self) -> bool:
        # The grid must also be exactly twice as tall as each runner is full.
        return (
            self.s % 2 == 0
            and self.q % 2 == 0
            and self.bead_count * 2 == self.s * self.q
            and self.core_empty
            and self.quotients_self_conjugate
            and self.quotients_mirrored
        )

    @property
    def biconditional_holds(self) -> bool:
        return self.symmetric == self.conditions_hold


def strongs_characterization(p: Partition, s: int, q: int | None = None) -> StrongsVerdict:
    x = normalize(min_beadset(p), s)
    grid = to_abacus(x, s, q)
    quo = s_quotient(p, s)
    return StrongsVerdict(
        s=s,
        q=grid.row_count,
        bead_count=len(x),
        core_empty=s_core(p, s) == EMPTY,
        quotients_self_conjugate=all(is_self_conjugate(part) for part in quo),
        quotients_mirrored=all(quo[i] == quo[s - 1 - i] for i in range(s)),
        horizontal=is_horizontally_antisymmetric(grid),
        vertical=is_vertically_symmetric(grid),
    )


def self_conjugate_corollary_check(p: Partition, s: int, q: int | None = None) -> bool:
    """Both grid symmetries force ``p`` to be self-conjugate (vacuous otherwise)."""
    grid = to_abacus(normalize(min_beadset(p), s), s, q)
    if is_horizontally_antisymmetric(grid) and is_vertically_symmetric(grid):
        return conjugate(p) == p
    return True


def verify_triple_symmetry(s: int) -> bool:
    """Check, cell by cell, that (i, j) in alpha(s) iff (i, s-3-j) not in it iff (s-1-i, j) in it."""
    a = build_alpha(s).abacus
    for i in range(s):
        for j in range(s - 2):
            here = a[i, j]
            if here == a[i, s - 3 - j] or here != a[s - 1 - i, j]:
                return False
    return True


def row_adjacency_check(s: int) -> bool:
    """Neighbouring-runner facts between the outer runners and their neighbours.

    For rows ``1 < j < s - 3``: a bead sits on runner 0 at row ``j`` iff one
    sits on runner 1 at row ``j - 1``; likewise runner ``s-1`` against
    ``s-2``; and a spacer on runner 0 (or ``s-1``) at row ``j`` iff a spacer
    on runner 1 (or ``s-2``) at row ``j + 1``.
    """
    a = build_alpha(s).abacus
    last = s - 1
    for j in range(2, s - 3):
        if a[0, j] != a[1, j - 1] or a[last, j] != a[last - 1, j - 1]:
            return False
        if (not a[0, j]) != (not a[1, j + 1]) or (not a[last, j]) != (not a[last - 1, j + 1]):
            return False
    return True


@dataclass(frozen=True)
class RectangleR:
    """``(r+1)`` columns by ``(r-1)`` rows holding ``1..(r-1)(r+1)``.

    ``cells[b-1, a-1]`` marks whether ``(r+1)(b-1) + a`` is a gap of
    ``<r, r+2>``; row ``b = 1`` is the bottom.
    """

    r: int
    cells: np.ndarray = field(repr=False)

    def value(self, a: int, b: int) -> int:
        return (self.r + 1) * (b - 1) + a

    def __getitem__(self, ab: tuple[int, int]) -> bool:
        a, b = ab
        return bool(self.cells[b - 1, a - 1])


def rectangle(r: int) -> RectangleR:
    if r < 3 or r % 2 == 0:
        raise ValueError(f"r must be odd and at least 3, got {r}")
    gaps = gap_set(r, r + 2).gaps
    cells = np.array(
        [[(r + 1) * (b - 1) + a in gaps for a in range(1, r + 2)] for b in range(1, r)], dtype=bool
    )
    cells.setflags(write=False)
    return RectangleR(r, cells)


def amlev_check(r: int) -> bool:
    """Row ``b`` and row ``r - b`` of the rectangle are complementary."""
    rect = rectangle(r)
    gaps = gap_set(r, r + 2).gaps
    for a in range(1, r + 2):
        for b in range(1, r):
            if rect[a, b] == (((r + 1) * (r - 1 - b) + a) in gaps):
                return False
    return True
