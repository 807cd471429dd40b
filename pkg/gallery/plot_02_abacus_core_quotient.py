"""
Bead-sets, the abacus, cores and quotients
==========================================

A partition becomes a set of beads; laying the beads on s runners gives
its s-core (beads pushed down) and its s-quotient (one partition per
runner).
"""

from coreabacus.abacus import axis, min_beadset, normalize, to_abacus
from coreabacus.core_quotient import reconstruct, s_core, s_quotient, size_decomposition
from coreabacus.partitions import Partition

lam = Partition((5, 4, 4, 2, 1))
x = min_beadset(lam)
print("minimal bead-set", x.beads, "axis", axis(x))

# Pad so the bead count is a multiple of s, then draw with the top row first.
s = 3
grid = to_abacus(normalize(x, s), s)
print(grid.to_ascii())

core, quotient = s_core(lam, s), s_quotient(lam, s)
print("3-core", tuple(core))
print("3-quotient", [tuple(p) for p in quotient])

# |lambda| = |core| + s * (total quotient size).
c, w = size_decomposition(lam, s)
print(f"{lam.size} = {c} + {s}*{w}")

# Core and quotient together determine the partition.
assert reconstruct(core, quotient) == lam
