"""Exact integrality decisions for X(D_n, S).

The graph is integral exactly when s1 is a union of atoms of <a> and
2 chi_h(S2^2) is a perfect square for every 1 <= h <= (n-1)//2. The
checks run cheapest first: atoms of s1, then the cone test on S2^2 (a
necessary condition), then the square tests in exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import BadModulus, EvenModulus, InvariantViolation, NotTwoIntegral
from .group import (
    MIN_CHARACTER_N,
    AtomDecomposition,
    ConnectionSet,
    difference_multiset,
    in_boolean_algebra,
    in_integral_cone,
    indicator_multiset,
    is_generating,
    sum_multiset,
    validate_connection_set,
)
from .numtheory import is_prime, perfect_square_root
from .spectra import chi_h_exact, chi_h_float, h_range

__all__ = [
    "Witness",
    "IntegralityReport",
    "check_integral",
    "NumericRow",
    "NumericReport",
    "check_numeric",
    "check_sufficient",
    "TwoIntegralClass",
    "classify_2_integral",
    "dp_integral_sets",
]

S1_NOT_IN_B = "s1_not_union_of_atoms"
S2SQ_NOT_IN_CONE = "s2_square_not_in_cone"
NON_SQUARE = "non_square"


@dataclass(frozen=True)
class Witness:
    """Why a set failed: which test, and for the square test the first bad h."""

    condition: str
    h: Optional[int] = None
    value: Optional[int] = None

    def __str__(self):
        if self.condition == NON_SQUARE:
            return f"2chi_h(S2^2)={self.value} at h={self.h} is not a square"
        if self.condition == S1_NOT_IN_B:
            return "s1 is not a union of atoms of <a>"
        return "S2^2 is not in the integral cone of <a>"

    def to_json(self) -> dict:
        return {"condition": self.condition, "h": self.h, "value": self.value, "message": str(self)}


@dataclass(frozen=True)
class IntegralityReport:
    S: ConnectionSet
    integral: bool
    reason: Optional[Witness]
    s1_atoms: Optional[AtomDecomposition]
    s2sq_cone: Optional[AtomDecomposition]
    # 2 chi_h(S2^2) for every h, filled in whenever the cone test passes
    square_values: dict[int, int] = field(default_factory=dict)
    sufficient: bool = False
    k_integrality: Optional[int] = None
    connected: bool = False

    @property
    def verdict(self) -> str:
        return "integral" if self.integral else "not_integral"

    @property
    def degenerate(self) -> list[str]:
        flags = []
        if self.S.is_empty:
            flags.append("empty_connection_set")
        elif not self.S.s2:
            flags.append("empty_s2_disconnected")
        return flags

    def to_json(self) -> dict:
        return {
            **self.S.to_json(),
            "verdict": self.verdict,
            "reason": self.reason.to_json() if self.reason else None,
            "s1_atoms": self.s1_atoms.to_json() if self.s1_atoms else None,
            "s2sq_cone": self.s2sq_cone.to_json() if self.s2sq_cone else None,
            "square_values": {str(h): str(v) for h, v in self.square_values.items()},
            "sufficient": self.sufficient,
            "k_integrality": self.k_integrality,
            "connected": self.connected,
            "degenerate": self.degenerate,
        }


def check_sufficient(S: ConnectionSet) -> bool:
    """True when both s1 and b*S2 (the exponent set of S2) are unions of atoms.

    That is enough for integrality but not necessary.
    """
    n = S.n
    return in_boolean_algebra(S.s1, n) is not None and in_boolean_algebra(S.s2, n) is not None


def check_integral(S: ConnectionSet) -> IntegralityReport:
    """Exact integrality verdict with a witness on failure."""
    n = S.n
    if n < MIN_CHARACTER_N:
        raise BadModulus(n, MIN_CHARACTER_N)
    connected = is_generating(S)
    s1_atoms = in_boolean_algebra(S.s1, n)
    sufficient = s1_atoms is not None and in_boolean_algebra(S.s2, n) is not None
    common = dict(sufficient=sufficient, connected=connected)
    if s1_atoms is None:
        return IntegralityReport(S, False, Witness(S1_NOT_IN_B), None, None, **common)

    cone = in_integral_cone(difference_multiset(S.s2, n))
    if cone is None:
        return IntegralityReport(S, False, Witness(S2SQ_NOT_IN_CONE), s1_atoms, None, **common)

    values = {}
    witness = None
    for h in h_range(n):
        v = 2 * chi_h_exact(cone, h)
        if v < 0:
            raise InvariantViolation(f"negative discriminant {v} at h={h} for {S}")
        values[h] = v
        if witness is None and perfect_square_root(v) is None:
            witness = Witness(NON_SQUARE, h, v)
    report = IntegralityReport(
        S, witness is None, witness, s1_atoms, cone, values, k_integrality=cone.k, **common
    )
    if sufficient and not report.integral:
        raise InvariantViolation(f"sufficient condition holds but verdict is not integral for {S}")
    return report


@dataclass(frozen=True)
class NumericRow:
    h: int
    chi_s1: float
    chi_sq_sum: float
    delta: float
    near_integer: bool
    near_square: bool


@dataclass(frozen=True)
class NumericReport:
    """Floating-point evaluation of the character conditions (advisory only)."""

    S: ConnectionSet
    tol: float
    rows: list[NumericRow]

    @property
    def integral(self) -> bool:
        return all(r.near_integer and r.near_square for r in self.rows)


def _near_int(x: float, tol: float) -> bool:
    return abs(x - round(x)) <= tol


def check_numeric(S: ConnectionSet, tol: float = 1e-6) -> NumericReport:
    """Check in floats that chi_h(S1) and chi_h(S1^2) + chi_h(S2^2) are integers
    and that Delta_h is a perfect square, for every h."""
    n = S.n
    s1 = indicator_multiset(S.s1, n)
    s1sq = sum_multiset(S.s1, n)
    s2sq = difference_multiset(S.s2, n)
    rows = []
    for h in h_range(n):
        chi = chi_h_float(s1, h)
        sq_sum = chi_h_float(s1sq, h) + chi_h_float(s2sq, h)
        delta = 2.0 * sq_sum - chi * chi
        near_int = _near_int(chi, tol) and _near_int(sq_sum, tol)
        near_sq = delta > -tol and _near_int(math.sqrt(max(delta, 0.0)), tol)
        rows.append(NumericRow(h, chi, sq_sum, delta, near_int, near_sq))
    return NumericReport(S, tol, rows)


@dataclass(frozen=True)
class TwoIntegralClass:
    """Structure of S2 when S2^2 = t*[1] + m*[a^d] with exactly two atoms.

    ``form`` is "punctured_coset" (t = p - 1), "full_coset" (t = p) or None.
    For a coset form, S2 lies in j + <n/p> and ``k`` indexes the missing
    element j + k*n/p of a punctured coset.
    """

    t: int
    d2: int
    m2: int
    form: Optional[str]
    p: Optional[int] = None
    j: Optional[int] = None
    k: Optional[int] = None
    integral: bool = False


def classify_2_integral(S: ConnectionSet) -> TwoIntegralClass:
    """Classify S2 for odd n when S2^2 is supported on exactly two atoms,
    and cross-check the structural verdict against :func:`check_integral`."""
    n = S.n
    if n % 2 == 0:
        raise EvenModulus(n)
    cone = in_integral_cone(difference_multiset(S.s2, n))
    if cone is None or cone.k != 2:
        raise NotTwoIntegral(None if cone is None else cone.k)
    t = len(S.s2)
    d2 = min(cone.coeffs)
    m2 = cone.coeffs[d2]
    n2 = n // d2
    form = p = j = k = None
    if is_prime(n2) and t in (n2 - 1, n2):
        step = n // n2
        j0 = min(S.s2) % step
        if all(u % step == j0 for u in S.s2):
            p, j = n2, j0
            if t == p:
                form = "full_coset"
            else:
                coset = {j + i * step for i in range(p)}
                (missing,) = coset - S.s2
                form, k = "punctured_coset", (missing - j) // step
    integral = form is not None and in_boolean_algebra(S.s1, n) is not None
    if integral != check_integral(S).integral:
        raise InvariantViolation(f"two-atom classification disagrees with the exact checker for {S}")
    return TwoIntegralClass(t, d2, m2, form, p, j, k, integral)


def dp_integral_sets(p: int, include_empty_s2: bool = False) -> list[ConnectionSet]:
    """Every integral connection set over D_p for an odd prime p.

    S1 is empty or all nontrivial rotations; S2 is a single reflection, all
    reflections but one, or all reflections. With ``include_empty_s2`` the
    two disconnected S2 = {} sets are appended at the end.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    everything = frozenset(range(p))
    s2_options = [frozenset({k}) for k in range(p)]
    s2_options += [everything - {k} for k in range(p)]
    s2_options.append(everything)
    s1_options = [(), tuple(range(1, p))]
    out = [validate_connection_set(p, s1, s2) for s1 in s1_options for s2 in s2_options]
    if include_empty_s2:
        out += [validate_connection_set(p, s1, ()) for s1 in s1_options]
    return out

