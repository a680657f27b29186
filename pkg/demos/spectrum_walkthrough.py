"""
Spectra of Cayley graphs on dihedral groups
===========================================

A walk through one integral and one non-integral example, computing the
spectrum twice: from the character table, and by brute force from the
adjacency matrix.
"""

from math import gcd

import numpy as np

from dihedral_integral import oracle
from dihedral_integral.group import difference_multiset, in_boolean_algebra, in_integral_cone, validate_connection_set
from dihedral_integral.integrality import check_integral
from dihedral_integral.spectra import spectrum

# A connection set lists rotation exponents (s1) and reflection exponents (s2).
# Here n = 9, s1 is every unit mod 9 and s2 = {0, 3}.
n = 9
S = validate_connection_set(n, [u for u in range(1, n) if gcd(u, n) == 1], [0, 3])
print("connection set:", S.to_text())

# s1 is a single atom of <a>, and S2^2 is a nonnegative combination of atoms.
print("s1 atoms :", in_boolean_algebra(S.s1, n))
print("S2^2     :", in_integral_cone(difference_multiset(S.s2, n)))

# The exact checker only needs one perfect-square test per character.
rep = check_integral(S)
print("verdict  :", rep.verdict, dict(rep.square_values))

# Because the graph is integral we can ask for the spectrum in exact mode.
exact = spectrum(S, "exact")
print("exact spectrum:", exact.eigenvalues)

# Brute force agrees: build the 18 x 18 adjacency matrix and diagonalize it.
A = oracle.build_adjacency(S)
print("eigvalsh      :", np.round(oracle.numeric_eigenvalues(A), 6))

# Now a set that fails: s2 = {1, 2, 4} in D_7.
T = validate_connection_set(7, [], [1, 2, 4])
rep = check_integral(T)
print()
print("connection set:", T.to_text())
print("verdict       :", rep.verdict, "--", rep.reason)

# Exact mode refuses to produce a partial answer, float mode still works.
print("float spectrum:", [(round(v, 6), k) for v, k in spectrum(T, "float").eigenvalues])

# The oracle finds the integer roots 3 and -3 and leaves the rest unfactored.
verdict = oracle.is_integral(T)
print("integer roots :", dict(verdict.roots))
print("leftover poly :", verdict.residual)
