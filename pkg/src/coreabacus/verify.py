"""Verification sweeps over parameter ranges, one report per theorem."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .alpha_sym import (
    strongs_characterization,
    verify_alpha_is_kappa,
    verify_piquo,
    verify_triple_symmetry,
    amlev_check,
    build_alpha,
)
from .partitions import is_self_conjugate, is_t_core, partitions_of
from .simul_cores import (
    anderson_count,
    count_ideals,
    gap_set,
    half_membership_check,
    kappa,
    kappa_size,
    max_triple_core_size,
)

THEOREMS = ("piquo", "amlev", "triple", "strongs", "half", "anderson", "sizes")


@dataclass
class Instance:
    params: dict
    passed: bool


@dataclass
class VerificationReport:
    theorem: str
    parameter_range: str
    instances: list[Instance] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.instances)

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "range": self.parameter_range,
            "passed": self.passed,
            "instances": [{**i.params, "passed": i.passed} for i in self.instances],
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def _even(s_max: int) -> list[int]:
    return list(range(4, s_max + 1, 2))


def _coprime_pairs(s_max: int, max_sum: int | None = None) -> list[tuple[int, int]]:
    return [
        (s, t)
        for s in range(2, s_max + 1)
        for t in range(s + 1, s_max + 1)
        if math.gcd(s, t) == 1 and (max_sum is None or s + t <= max_sum)
    ]


def _strongs_ok(s: int, max_size: int = 12) -> bool:
    k = strongs_characterization(build_alpha(s).partition(), s)
    if not (k.symmetric and k.conditions_hold):
        return False
    return all(
        strongs_characterization(p, s).biconditional_holds
        for n in range(max_size + 1)
        for p in partitions_of(n)
    )


def _sizes_ok(s: int, t: int) -> bool:
    k = kappa(s, t)
    return k.size == kappa_size(s, t) and is_self_conjugate(k)


def _triple_ok(s: int) -> bool:
    k = kappa(s - 1, s + 1)
    return k.size == 4 * max_triple_core_size(s) and not is_t_core(k, s) and verify_alpha_is_kappa(s)


def _sweep(theorem: str, desc: str, cases: Iterable[tuple[dict, Callable[[], bool]]]) -> VerificationReport:
    report = VerificationReport(theorem, desc)
    start = time.perf_counter()
    for params, check in cases:
        report.instances.append(Instance(params, bool(check())))
    report.elapsed = time.perf_counter() - start
    return report


def run_theorem(theorem: str, s_max: int = 12, r: int | None = None) -> VerificationReport:
    """Run one verification suite.

    Ranges: even ``s`` in ``4..s_max`` for piquo/triple/strongs; odd ``r`` in
    ``3..s_max-1`` for amlev (or just ``r``); coprime ``2 <= s < t <= s_max``
    for half and sizes; anderson additionally keeps ``s + t <= s_max + 1``.
    """
    if theorem == "piquo":
        return _sweep(theorem, f"s even, 4..{s_max}", (({"s": s}, lambda s=s: verify_piquo(s).passed) for s in _even(s_max)))
    if theorem == "amlev":
        rs = [r] if r is not None else list(range(3, s_max, 2))
        return _sweep(theorem, f"r in {rs}", (({"r": x}, lambda x=x: amlev_check(x)) for x in rs))
    if theorem == "triple":
        return _sweep(theorem, f"s even, 4..{s_max}", (({"s": s}, lambda s=s: verify_triple_symmetry(s)) for s in _even(s_max)))
    if theorem == "strongs":
        return _sweep(theorem, f"s even, 4..{s_max}; partitions of size <= 12", (({"s": s}, lambda s=s: _strongs_ok(s)) for s in _even(s_max)))
    if theorem == "half":
        return _sweep(
            theorem, f"coprime 2 <= s < t <= {s_max}",
            (({"s": s, "t": t}, lambda s=s, t=t: half_membership_check(s, t)) for s, t in _coprime_pairs(s_max)),
        )
    if theorem == "anderson":
        return _sweep(
            theorem, f"coprime s < t, s + t <= {s_max + 1}",
            (
                ({"s": s, "t": t}, lambda s=s, t=t: count_ideals(gap_set(s, t)) == anderson_count(s, t))
                for s, t in _coprime_pairs(s_max, s_max + 1)
            ),
        )
    if theorem == "sizes":
        cases = [({"s": s, "t": t}, lambda s=s, t=t: _sizes_ok(s, t)) for s, t in _coprime_pairs(s_max)]
        cases += [({"s": s, "triple": True}, lambda s=s: _triple_ok(s)) for s in _even(s_max)]
        return _sweep(theorem, f"coprime s < t <= {s_max}; s even 4..{s_max}", cases)
    raise ValueError(f"unknown theorem {theorem!r}")


def run_all(s_max: int = 12, r: int | None = None) -> list[VerificationReport]:
    return [run_theorem(name, s_max, r) for name in THEOREMS]
