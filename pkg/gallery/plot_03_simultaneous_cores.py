"""
Simultaneous (s, t)-cores
=========================

Cores for two coprime numbers correspond to lower ideals of the gap set
of the numerical semigroup they generate. The whole gap set gives the
largest one.
"""

import math

from coreabacus.simul_cores import anderson_count, enumerate_cores, gap_set, kappa, kappa_size

s, t = 3, 5
gaps = gap_set(s, t)
print("gaps of <3,5>:", gaps.sorted())

cores = enumerate_cores(s, t)
for p in cores:
    print("  ", tuple(p) or "empty")
print("count", len(cores), "closed form", anderson_count(s, t))

# Largest simultaneous core and its size formula across a range of pairs.
for s in range(2, 8):
    for t in range(s + 1, 10):
        if math.gcd(s, t) == 1:
            assert kappa(s, t).size == kappa_size(s, t)
print("kappa(7,9) has size", kappa(7, 9).size)
