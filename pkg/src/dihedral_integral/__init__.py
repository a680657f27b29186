"""Integral Cayley graphs over the dihedral groups D_n.

Exact spectra through the character table of D_n, an integer-only
integrality test, the classification of integral sets over D_p, and a
characteristic-polynomial oracle that checks all of it independently.
"""

from .errors import (
    BadModulus,
    ConnectionSetError,
    DihedralIntegralError,
    EvenModulus,
    ExactPathUnavailable,
    IdentityInSet,
    InvariantViolation,
    NotInverseClosed,
    NotTwoIntegral,
)
from .group import (
    AtomDecomposition,
    ConnectionSet,
    DihedralElement,
    RotationMultiset,
    difference_multiset,
    in_boolean_algebra,
    in_integral_cone,
    is_generating,
    parse_connection_set,
    sum_multiset,
    validate_connection_set,
)
from .integrality import (
    IntegralityReport,
    check_integral,
    check_numeric,
    check_sufficient,
    classify_2_integral,
    dp_integral_sets,
)
from .numtheory import divisors, euler_phi, is_perfect_square, moebius, ramanujan_sum
from .spectra import SpectrumReport, chi_h_exact, chi_h_float, spectrum

__version__ = "0.1.0"
