"""s-cores and s-quotients read off the normalized s-abacus.

The quotient is always taken from the canonical normalized bead-set (least
shift making the bead count a multiple of ``s``).  A different shift would
rotate the quotient parts cyclically.
"""
from __future__ import annotations

from dataclasses import dataclass

from .abacus import BeadSet, from_runners, min_beadset, normalize, partition_of, runner_beadsets
from .partitions import EMPTY, Partition, conjugate, is_t_core, make_partition


@dataclass(frozen=True)
class Quotient:
    s: int
    parts: tuple[Partition, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if len(parts) != self.s:
            raise ValueError(f"quotient for s={self.s} needs {self.s} parts, got {len(parts)}")
        object.__setattr__(self, "parts", parts)

    def __getitem__(self, i) -> Partition:
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    @property
    def weight(self) -> int:
        return sum(p.size for p in self.parts)

    def to_json(self) -> dict:
        return {"s": self.s, "parts": [p.to_json() for p in self.parts]}

    @classmethod
    def from_json(cls, data: dict) -> "Quotient":
        return cls(int(data["s"]), tuple(make_partition(p) for p in data["parts"]))


@dataclass(frozen=True)
class CoreQuotientPair:
    core: Partition
    quotient: Quotient


def _check_s(s: int):
    if s < 2:
        raise ValueError("s must be at least 2")


def normalized_beadset(p: Partition, s: int) -> BeadSet:
    return normalize(min_beadset(p), s)


def s_core(p: Partition, s: int) -> Partition:
    """Push the beads on every runner down as far as they go."""
    _check_s(s)
    runners = runner_beadsets(normalized_beadset(p, s), s)
    return partition_of(from_runners([range(len(r)) for r in runners]))


def s_quotient(p: Partition, s: int) -> Quotient:
    _check_s(s)
    runners = runner_beadsets(normalized_beadset(p, s), s)
    return Quotient(s, tuple(partition_of(r) for r in runners))


def core_and_quotient(p: Partition, s: int) -> CoreQuotientPair:
    return CoreQuotientPair(s_core(p, s), s_quotient(p, s))


def _runner_positions(part: Partition, beads: int) -> list[int]:
    # Bead positions for ``part`` on a runner carrying exactly ``beads`` beads.
    padded = list(part.components) + [0] * (beads - len(part))
    return [c + beads - 1 - r for r, c in enumerate(padded)]


def reconstruct(core: Partition, quotient: Quotient) -> Partition:
    """Inverse of ``(s_core, s_quotient)``.

    Runner bead counts come from the core's normalized bead-set, padded one
    full row at a time until every quotient part fits on its runner.
    """
    s = quotient.s
    _check_s(s)
    if not is_t_core(core, s):
        raise ValueError(f"{core} has a hook of length {s}")
    counts = [len(r) for r in runner_beadsets(normalized_beadset(core, s), s)]
    pad = max([0] + [len(part) - c for part, c in zip(quotient.parts, counts)])
    counts = [c + pad for c in counts]
    return partition_of(from_runners([_runner_positions(part, c) for part, c in zip(quotient.parts, counts)]))


def size_decomposition(p: Partition, s: int) -> tuple[int, int]:
    """``(|core|, total quotient size)``; ``|p| = core + s * total``.

    The factor ``s`` is required: each box of a quotient part stands for a
    whole ``s``-hook of ``p``.
    """
    return s_core(p, s).size, s_quotient(p, s).weight


def conjugate_quotient_check(p: Partition, s: int) -> bool:
    """Conjugation reverses the quotient and conjugates each part and the core."""
    q, q_conj = s_quotient(p, s), s_quotient(conjugate(p), s)
    if conjugate(s_core(p, s)) != s_core(conjugate(p), s):
        return False
    return all(conjugate(q[i]) == q_conj[s - 1 - i] for i in range(s))


def empty_quotient(s: int) -> Quotient:
    return Quotient(s, (EMPTY,) * s)
