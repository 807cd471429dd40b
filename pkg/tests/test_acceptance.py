"""Exit criteria: one test per criterion, each reporting PASS/FAIL with its timing."""
import math
import random
import time

from coreabacus.abacus import BeadSet, axis, balance, min_beadset, partition_of
from coreabacus.alpha_sym import (
    amlev_check,
    build_alpha,
    nest,
    strongs_characterization,
    verify_triple_symmetry,
)
from coreabacus.core_quotient import conjugate_quotient_check, reconstruct, s_core, s_quotient, size_decomposition
from coreabacus.partitions import (
    EMPTY,
    Partition,
    first_column_hooks,
    is_t_core,
    partitions_of,
    random_partition,
    staircase,
)
from coreabacus.simul_cores import enumerate_cores, half_membership_check, kappa, max_triple_core_size

from conftest import ACCEPTANCE

PAIRS_13 = [(s, t) for s in range(2, 14) for t in range(s + 1, 14) if math.gcd(s, t) == 1]
ALPHA8 = (1, 2, 3, 4, 5, 6, 8, 10, 11, 12, 13, 15, 17, 19, 20, 22, 24, 26, 29, 31, 33, 38, 40, 47)
KAPPA79_Q8 = (staircase(3), staircase(2), staircase(1), EMPTY, EMPTY, staircase(1), staircase(2), staircase(3))
INSTANCES = 500


def report(n, text, ok, elapsed, budget):
    ok = ok and elapsed < budget
    ACCEPTANCE.append(f"AC{n:02d} {'PASS' if ok else 'FAIL'}  {text}  ({elapsed * 1000:.3f} ms, budget {budget * 1000:g} ms)")
    assert ok, f"criterion {n} failed: {text} in {elapsed:.4f}s"


def best_of(fn, repeat=5):
    best, result = math.inf, None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return result, best


def test_ac01_kappa_3_5():
    def run():
        k = kappa(3, 5)
        return k, first_column_hooks(k)

    (k, hooks), elapsed = best_of(run)
    ok = k == Partition((4, 2, 1, 1)) and k.size == 8 and hooks == {7, 4, 2, 1}
    report(1, "kappa(3,5) = (4,2,1,1), size 8, first-column hooks {7,4,2,1}", ok, elapsed, 1e-3)


def test_ac02_kappa_sizes():
    t0 = time.perf_counter()
    ok = all(kappa(s, t).size * 24 == (s * s - 1) * (t * t - 1) for s, t in PAIRS_13)
    report(2, f"|kappa(s,t)| = (s^2-1)(t^2-1)/24 for {len(PAIRS_13)} coprime pairs <= 13", ok, time.perf_counter() - t0, 1.0)


def test_ac03_anderson_count_and_scan():
    t0 = time.perf_counter()
    ok = True
    for s, t in PAIRS_13:
        if s + t > 13:
            continue
        cores = enumerate_cores(s, t)
        ok &= len(cores) == math.comb(s + t, t) // (s + t)
        if s + t <= 9:
            bound = (s * s - 1) * (t * t - 1) // 24
            scan = sorted(
                p for n in range(bound + 1) for p in partitions_of(n) if is_t_core(p, s) and is_t_core(p, t)
            )
            ok &= scan == cores
    report(3, "core counts = C(s+t,t)/(s+t) for s+t <= 13; brute-force scan agrees for s+t <= 9", ok, time.perf_counter() - t0, 30.0)


def test_ac04_quotient_of_kappa_7_9():
    k = kappa(7, 9)

    def run():
        return s_quotient(k, 8), s_core(k, 8)

    (q, core), elapsed = best_of(run)
    ok = q.parts == KAPPA79_Q8 and core == EMPTY
    report(4, "8-quotient of kappa(7,9) = (t3,t2,t1,0,0,t1,t2,t3), 8-core empty", ok, elapsed, 10e-3)


def test_ac05_alpha_construction():
    t0 = time.perf_counter()
    ok = build_alpha(8).beads().beads == ALPHA8
    ok &= all(build_alpha(s).abacus == nest(build_alpha(s - 2)).abacus for s in (6, 8, 10, 12))
    ok &= all(partition_of(build_alpha(s).beads()) == kappa(s - 1, s + 1) for s in (4, 6, 8, 10, 12))
    report(5, "alpha(8) bead values; nest agrees for s=6..12; alpha(s) = kappa(s-1,s+1) for s=4..12", ok, time.perf_counter() - t0, 1.0)


def test_ac06_amlev_and_triple_symmetry():
    t0 = time.perf_counter()
    ok = all(amlev_check(r) for r in (3, 5, 7, 9, 11))
    ok &= all(verify_triple_symmetry(s) for s in (4, 6, 8, 10, 12))
    report(6, "rectangle symmetry for r=3..11 and triple symmetry of alpha(s) for s=4..12", ok, time.perf_counter() - t0, 1.0)


def test_ac07_triple_core_ratio():
    t0 = time.perf_counter()
    ok = kappa(7, 9).size == 160 == 4 * max_triple_core_size(8) == 4 * 40
    for s in (4, 6, 8, 10, 12):
        k = kappa(s - 1, s + 1)
        ok &= k.size == 4 * max_triple_core_size(s) and not is_t_core(k, s)
    report(7, "|kappa(s-1,s+1)| = 4 * max triple-core size and not an s-core, s=4..12", ok, time.perf_counter() - t0, 1.0)


def _random_instances(seed):
    rng = random.Random(seed)
    for _ in range(INSTANCES):
        yield random_partition(rng.randint(0, 40), rng), rng.randint(2, 9)


def _symmetric_partition(rng, s, m):
    low = [[rng.random() < 0.5 for _ in range(m)] for _ in range(s // 2)]
    cols = [c + [not b for b in reversed(c)] for c in low]
    cols = cols + cols[::-1]
    return partition_of(BeadSet.of(i + j * s for i, col in enumerate(cols) for j, b in enumerate(col) if b))


def test_ac08_property_suites():
    t0 = time.perf_counter()
    failures = {}

    failures["roundtrip"] = sum(
        reconstruct(s_core(p, s), s_quotient(p, s)) != p for p, s in _random_instances(1)
    )
    failures["size identity"] = 0
    for p, s in _random_instances(2):
        core, total = size_decomposition(p, s)
        failures["size identity"] += p.size != core + s * total
    failures["conjugate quotient"] = sum(not conjugate_quotient_check(p, s) for p, s in _random_instances(3))
    failures["axis balance"] = 0
    for p, _ in _random_instances(4):
        x = min_beadset(p)
        right, left = balance(x, axis(x))
        failures["axis balance"] += right != left

    rng = random.Random(5)
    failures["symmetry biconditional"] = 0
    symmetric_seen = 0
    for n in range(INSTANCES):
        s = rng.choice((4, 6))
        if n % 3 == 0:
            p = _symmetric_partition(rng, s, rng.randint(1, 3))
            if p.size > 40:
                p = random_partition(rng.randint(0, 40), rng)
        else:
            p = random_partition(rng.randint(0, 40), rng)
        v = strongs_characterization(p, s)
        symmetric_seen += v.symmetric
        failures["symmetry biconditional"] += not v.biconditional_holds

    elapsed = time.perf_counter() - t0
    ok = all(v == 0 for v in failures.values()) and symmetric_seen > 0
    detail = ", ".join(f"{k}: {v}" for k, v in failures.items())
    report(8, f"{INSTANCES} random instances per suite, failures [{detail}]", ok, elapsed, 60.0)


def test_ac09_half_membership():
    t0 = time.perf_counter()
    ok = all(half_membership_check(s, t) for s, t in PAIRS_13)
    report(9, f"half of 1..(s-1)(t-1) are gaps, {len(PAIRS_13)} coprime pairs <= 13", ok, time.perf_counter() - t0, 1.0)
