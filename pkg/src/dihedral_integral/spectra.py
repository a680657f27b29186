"""Characters of D_n and the spectrum of X(D_n, S).

The adjacency spectrum splits over the irreducible characters: each
linear character psi_i contributes psi_i(S) once, and each degree-2
character chi_h contributes a pair mu_h1, mu_h2 (each twice) with

    mu_h1 + mu_h2     = chi_h(S1)
    mu_h1^2 + mu_h2^2 = chi_h(S1^2) + chi_h(S2^2)

so the pair are the roots of a quadratic with discriminant
Delta_h = 2 (chi_h(S1^2) + chi_h(S2^2)) - chi_h(S1)^2.

Two evaluation routes exist. ``mode="exact"`` works in integers only:
chi_h of a union of atoms is a combination of Ramanujan sums, and when
S1 is a union of atoms Delta_h collapses to 2 chi_h(S2^2). ``mode="float"``
evaluates cosines and works for any connection set.
"""

from __future__ import annotations

import cmath
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Union

from .errors import BadModulus, ExactPathUnavailable, InvariantViolation
from .group import (
    MIN_CHARACTER_N,
    AtomDecomposition,
    ConnectionSet,
    RotationMultiset,
    difference_multiset,
    in_boolean_algebra,
    in_integral_cone,
    indicator_multiset,
    sum_multiset,
)
from .numtheory import perfect_square_root, ramanujan_sum

__all__ = [
    "h_range",
    "chi_h_exact",
    "chi_h_float",
    "phi_h_sum",
    "linear_eigenvalues",
    "PerH",
    "SpectrumReport",
    "spectrum",
]

FLOAT_TOL = 1e-9

Operand = Union[RotationMultiset, Iterable[int]]


def h_range(n: int) -> range:
    """Indices 1..floor((n-1)/2) of the degree-2 characters."""
    return range(1, (n - 1) // 2 + 1)


def chi_h_exact(D: AtomDecomposition, h: int) -> int:
    """chi_h of the multiset sum m_d [a^d], as 2 * sum m_d c(h, n/d).

    Summing e^(2 pi i h l / n) over l with gcd(l, n) = d is c(h, n/d).
    """
    return 2 * sum(m * ramanujan_sum(h, D.n // d) for d, m in D.coeffs.items())


def _as_multiset(M: Operand, n: int | None) -> RotationMultiset:
    if isinstance(M, RotationMultiset):
        return M
    if n is None:
        raise TypeError("n is required when passing a plain set of exponents")
    return indicator_multiset(M, n)


def chi_h_float(M: Operand, h: int, n: int | None = None) -> float:
    """sum_u mult(u) * 2 cos(2 pi h u / n)."""
    M = _as_multiset(M, n)
    return sum(c * 2.0 * math.cos(2.0 * math.pi * h * u / M.n) for u, c in enumerate(M.mult) if c)


def phi_h_sum(M: Operand, h: int, n: int | None = None) -> complex:
    """The cyclic character sum sum_u mult(u) e^(2 pi i h u / n)."""
    M = _as_multiset(M, n)
    return sum((c * cmath.exp(2j * math.pi * h * u / M.n) for u, c in enumerate(M.mult) if c), 0j)


def linear_eigenvalues(S: ConnectionSet) -> list[int]:
    """psi_i(S) for the 2 (odd n) or 4 (even n) linear characters."""
    a, b = len(S.s1), len(S.s2)
    out = [a + b, a - b]
    if S.n % 2 == 0:
        p1 = sum(-1 if u % 2 else 1 for u in S.s1)
        p2 = sum(-1 if u % 2 else 1 for u in S.s2)
        out += [p1 + p2, p1 - p2]
    return out


@dataclass(frozen=True)
class PerH:
    h: int
    chi_s1: float | int
    delta: float | int
    mu1: float | int
    mu2: float | int

    def to_json(self) -> dict:
        return {k: _fmt(v) for k, v in vars(self).items()}


def _fmt(v) -> str | int:
    if isinstance(v, int):
        return str(v)
    return repr(float(v))


@dataclass(frozen=True)
class SpectrumReport:
    S: ConnectionSet
    eigenvalues: list[tuple[float | int, int]]
    per_h: list[PerH]
    exact: bool
    m: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "m", 2 if self.S.n % 2 else 4)
        self.check_invariants()

    @property
    def n(self) -> int:
        return self.S.n

    def values(self) -> list:
        """Eigenvalues expanded by multiplicity, descending."""
        return [v for v, k in self.eigenvalues for _ in range(k)]

    def as_counter(self) -> Counter:
        return Counter(dict(self.eigenvalues))

    def check_invariants(self, tol: float = 1e-6) -> None:
        n, size = self.S.n, self.S.size
        if 4 * len(self.per_h) + self.m != 2 * n:
            raise InvariantViolation(f"character count mismatch for n={n}")
        count = sum(k for _, k in self.eigenvalues)
        trace = sum(v * k for v, k in self.eigenvalues)
        energy = sum(v * v * k for v, k in self.eigenvalues)
        if count != 2 * n:
            raise InvariantViolation(f"multiplicities sum to {count}, expected {2 * n}")
        scale = max(1.0, 2 * n * size)
        if abs(trace) > tol * scale or abs(energy - 2 * n * size) > tol * scale:
            raise InvariantViolation(f"trace {trace} / energy {energy} inconsistent with |S|={size}")
        if any(p.mu1 < p.mu2 for p in self.per_h):
            raise InvariantViolation("mu_h1 < mu_h2")

    def to_json(self) -> dict:
        out = self.S.to_json()
        out["eigenvalues"] = [{"value": _fmt(v), "multiplicity": k} for v, k in self.eigenvalues]
        out["exact"] = self.exact
        out["per_h"] = [p.to_json() for p in self.per_h]
        return out


def _merge(values: list[tuple[float | int, int]], exact: bool) -> list[tuple[float | int, int]]:
    values = sorted(values, key=lambda t: t[0], reverse=True)
    merged: list[list] = []
    for v, k in values:
        if merged and (merged[-1][0] == v if exact else abs(merged[-1][0] - v) <= FLOAT_TOL):
            merged[-1][1] += k
        else:
            merged.append([v, k])
    return [(v, k) for v, k in merged]


def _exact_per_h(S: ConnectionSet) -> list[PerH]:
    n = S.n
    s1_atoms = in_boolean_algebra(S.s1, n)
    if s1_atoms is None:
        raise ExactPathUnavailable("s1 is not a union of atoms of <a>")
    cone = in_integral_cone(difference_multiset(S.s2, n))
    if cone is None:
        raise ExactPathUnavailable("S2^2 is not in the integral cone of <a>")
    rows = []
    for h in h_range(n):
        chi = chi_h_exact(s1_atoms, h)
        delta = 2 * chi_h_exact(cone, h)
        w = perfect_square_root(delta)
        if w is None:
            if delta < 0:
                raise InvariantViolation(f"negative discriminant {delta} at h={h}")
            raise ExactPathUnavailable("2 chi_h(S2^2) is not a perfect square", h, delta)
        if (chi + w) % 2:
            raise InvariantViolation(f"odd chi_h(S1) + sqrt(Delta) at h={h}")
        rows.append(PerH(h, chi, delta, (chi + w) // 2, (chi - w) // 2))
    return rows


def _float_per_h(S: ConnectionSet) -> list[PerH]:
    n = S.n
    s1 = indicator_multiset(S.s1, n)
    s1sq = sum_multiset(S.s1, n)
    s2sq = difference_multiset(S.s2, n)
    s2 = indicator_multiset(S.s2, n)
    rows = []
    for h in h_range(n):
        chi = chi_h_float(s1, h)
        delta = 2.0 * (chi_h_float(s1sq, h) + chi_h_float(s2sq, h)) - chi * chi
        # The chi_h block of the adjacency matrix is [[alpha, conj(beta)], [beta, alpha]]
        # with beta the phi_h sum over S2, so sqrt(Delta) = 2|beta|. Taking the root
        # this way avoids losing half the digits when Delta is close to 0.
        root = 2.0 * abs(phi_h_sum(s2, h))
        rows.append(PerH(h, chi, delta, (chi + root) / 2.0, (chi - root) / 2.0))
    return rows


def spectrum(S: ConnectionSet, mode: str = "exact") -> SpectrumReport:
    """Eigenvalues of X(D_n, S) with multiplicities, merged and sorted descending.

    ``mode="exact"`` raises :class:`ExactPathUnavailable` unless every
    eigenvalue is an integer; it never emits a partial spectrum.
    """
    if S.n < MIN_CHARACTER_N:
        raise BadModulus(S.n, MIN_CHARACTER_N)
    if mode == "exact":
        rows = _exact_per_h(S)
        exact = True
    elif mode == "float":
        rows = _float_per_h(S)
        exact = False
    else:
        raise ValueError(f"unknown mode {mode!r}; use 'exact' or 'float'")
    pairs = [(lam, 1) for lam in linear_eigenvalues(S)]
    for r in rows:
        pairs += [(r.mu1, 2), (r.mu2, 2)]
    if not exact:
        pairs = [(float(v), k) for v, k in pairs]
    return SpectrumReport(S, _merge(pairs, exact), rows, exact)
