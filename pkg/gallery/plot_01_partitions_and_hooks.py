"""
Partitions, hooks and conjugation
=================================

A first tour of the partition layer: hook lengths, conjugates, rim-hook
removal and t-core tests.
"""

from coreabacus.partitions import (
    Partition,
    conjugate,
    first_column_hooks,
    hook_lengths,
    is_t_core,
    remove_hook,
)

lam = Partition((4, 2, 1, 1))
print("partition", tuple(lam), "size", lam.size)

# Hook lengths row by row; the first column determines the partition.
for row in hook_lengths(lam):
    print("  ", row)
print("first-column hooks", sorted(first_column_hooks(lam), reverse=True))

# (4,2,1,1) is its own conjugate.
print("conjugate", tuple(conjugate(lam)))

# No hook of length 3 or 5, so it is both a 3-core and a 5-core.
for t in (2, 3, 4, 5):
    print(f"{t}-core?", is_t_core(lam, t))

# The 5-hook at the top-left cell takes the whole rim, leaving one box.
mu = Partition((3, 2, 1))
print("remove hook at (1,1) of", tuple(mu), "->", tuple(remove_hook(mu, (1, 1))))
