"""
Integral Cayley graphs on D_p
=============================

For a prime p the integral connection sets with a nonempty reflection part
come in a short explicit list. Here we print that list and check it against
an exhaustive search.
"""

import sys

from dihedral_integral.census import enumerate_sets
from dihedral_integral.integrality import check_integral, dp_integral_sets

p = int(sys.argv[1]) if len(sys.argv) > 1 else 5

# s1 is either empty or all nonzero rotations; s2 is one reflection,
# all reflections, or all reflections but one.
sets = dp_integral_sets(p)
for S in sets:
    print(S.to_text())
print(len(sets), "sets, expected", 2 * (2 * p + 1))

# Exhaustive search over every valid connection set with nonempty s2.
found = [S for S in enumerate_sets(p, nonempty_s2=True) if check_integral(S).integral]
print("exhaustive search found", len(found), "and they match:", set(found) == set(sets))
