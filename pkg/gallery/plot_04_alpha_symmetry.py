"""
The symmetric abacus alpha(s)
=============================

For even s the largest (s-1, s+1)-core sits on s runners as a grid with a
mirror symmetry and an anti-symmetry. Nesting grows alpha(s) into
alpha(s + 2).
"""

from coreabacus.alpha_sym import (
    amlev_check,
    build_alpha,
    is_horizontally_antisymmetric,
    is_vertically_symmetric,
    nest,
    verify_piquo,
)
from coreabacus.render import render
from coreabacus.simul_cores import kappa

a8 = build_alpha(8)
print(render(a8.abacus, "ascii"))
print("beads", a8.beads().beads)
assert a8.partition() == kappa(7, 9)

# Flipping top to bottom swaps beads and spacers; left-right is a mirror.
print("anti-symmetric rows:", is_horizontally_antisymmetric(a8.abacus))
print("symmetric runners:", is_vertically_symmetric(a8.abacus))

# Empty 8-core and staircase quotients.
report = verify_piquo(8)
print("core", tuple(report.core), "quotient", [tuple(p) for p in report.quotient])

# Adding a frame of runners gives the next alpha.
assert nest(a8).abacus == build_alpha(10).abacus

# The companion rectangle pattern for odd r.
print("rectangle symmetry r=3..11:", all(amlev_check(r) for r in range(3, 12, 2)))

svg = render(build_alpha(6).abacus, "svg")
print(svg[:60], "...")
