"""The dihedral group D_n, connection sets and the atom structure of <a>.

D_n = <a, b | a^n = b^2 = 1, bab = a^-1>. Elements are stored as
``(rot, flip)`` meaning ``b^flip * a^rot``. A connection set is split into
its rotation part ``s1`` (exponents u with a^u in S) and its reflection
part ``s2`` (exponents u with b*a^u in S).
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping

from .errors import BadModulus, ConnectionSetError, IdentityInSet, NotInverseClosed
from .numtheory import divisors, euler_phi

__all__ = [
    "DihedralElement",
    "multiply",
    "inverse",
    "ConnectionSet",
    "validate_connection_set",
    "parse_connection_set",
    "RotationMultiset",
    "AtomDecomposition",
    "atom_of",
    "atom",
    "in_boolean_algebra",
    "in_integral_cone",
    "difference_multiset",
    "sum_multiset",
    "indicator_multiset",
    "is_generating",
    "MIN_CHARACTER_N",
]

# Smallest n for which D_n has degree-2 characters.
MIN_CHARACTER_N = 3


@dataclass(frozen=True)
class DihedralElement:
    rot: int
    flip: bool
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        object.__setattr__(self, "rot", self.rot % self.n)
        object.__setattr__(self, "flip", bool(self.flip))

    @classmethod
    def identity(cls, n: int) -> DihedralElement:
        return cls(0, False, n)

    @classmethod
    def rotation(cls, k: int, n: int) -> DihedralElement:
        return cls(k, False, n)

    @classmethod
    def reflection(cls, k: int, n: int) -> DihedralElement:
        """The element b*a^k."""
        return cls(k, True, n)

    def __mul__(self, other: DihedralElement) -> DihedralElement:
        return multiply(self, other)

    def inverse(self) -> DihedralElement:
        return inverse(self)

    @property
    def is_identity(self) -> bool:
        return self.rot == 0 and not self.flip

    @property
    def label(self) -> str:
        if self.flip:
            return "b" if self.rot == 0 else f"ba^{self.rot}"
        return "1" if self.rot == 0 else f"a^{self.rot}"

    def __str__(self):
        return self.label


def multiply(x: DihedralElement, y: DihedralElement) -> DihedralElement:
    if x.n != y.n:
        raise ValueError(f"cannot multiply elements of D_{x.n} and D_{y.n}")
    # a^i b = b a^-i: a flip in y negates x's rotation, whatever x.flip is.
    rot = y.rot - x.rot if y.flip else x.rot + y.rot
    return DihedralElement(rot, x.flip != y.flip, x.n)


def inverse(x: DihedralElement) -> DihedralElement:
    if x.flip:
        return x
    return DihedralElement(-x.rot, False, x.n)


@dataclass(frozen=True)
class ConnectionSet:
    """A validated inverse-closed subset of D_n minus the identity.

    Build it through :func:`validate_connection_set`; the constructor does
    not check anything.
    """

    n: int
    s1: frozenset[int]
    s2: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.s1) + len(self.s2)

    def __len__(self):
        return self.size

    @property
    def is_empty(self) -> bool:
        return not self.s1 and not self.s2

    def elements(self) -> list[DihedralElement]:
        return [DihedralElement.rotation(u, self.n) for u in sorted(self.s1)] + [
            DihedralElement.reflection(u, self.n) for u in sorted(self.s2)
        ]

    def __contains__(self, g: DihedralElement) -> bool:
        if g.n != self.n:
            return False
        return g.rot in (self.s2 if g.flip else self.s1)

    def to_json(self) -> dict:
        return {"n": self.n, "s1": sorted(self.s1), "s2": sorted(self.s2)}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj: Mapping | str, min_n: int = 1) -> ConnectionSet:
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return validate_connection_set(obj["n"], obj.get("s1", ()), obj.get("s2", ()), min_n=min_n)
        except (KeyError, TypeError) as exc:
            raise ConnectionSetError(f"malformed connection set object: {obj!r}") from exc

    def to_text(self) -> str:
        return "n={}; s1={}; s2={}".format(
            self.n, ",".join(map(str, sorted(self.s1))), ",".join(map(str, sorted(self.s2)))
        )

    def __str__(self):
        return self.to_text()


def validate_connection_set(
    n: int, s1: Iterable[int] = (), s2: Iterable[int] = (), *, min_n: int = MIN_CHARACTER_N
) -> ConnectionSet:
    """Reduce indices mod n and check S = S^-1, 1 not in S.

    ``min_n`` defaults to 3, the smallest order the character machinery
    handles; the oracle path passes ``min_n=1``.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise ConnectionSetError(f"n must be an integer, got {n!r}")
    if n < max(min_n, 1):
        raise BadModulus(n, max(min_n, 1))
    rs1 = frozenset(int(u) % n for u in s1)
    rs2 = frozenset(int(u) % n for u in s2)
    if 0 in rs1:
        raise IdentityInSet(n)
    missing = sorted(u for u in rs1 if (-u) % n not in rs1)
    if missing:
        raise NotInverseClosed(n, missing)
    return ConnectionSet(n, rs1, rs2)


_TEXT_RE = re.compile(r"^n=(?P<n>[+-]?\d+);s1=(?P<s1>[\d,+-]*);s2=(?P<s2>[\d,+-]*);?$")


def parse_connection_set(text: str, min_n: int = MIN_CHARACTER_N) -> ConnectionSet:
    """Parse the compact form ``"n=7; s1=; s2=1,2,4"`` (whitespace-insensitive)."""
    m = _TEXT_RE.match(re.sub(r"\s+", "", text))
    if m is None:
        raise ConnectionSetError(f"cannot parse connection set {text!r}; expected 'n=<int>; s1=<csv>; s2=<csv>'")

    def ints(csv: str) -> list[int]:
        try:
            return [int(tok) for tok in csv.split(",") if tok]
        except ValueError as exc:
            raise ConnectionSetError(f"bad integer list {csv!r}") from exc

    return validate_connection_set(int(m["n"]), ints(m["s1"]), ints(m["s2"]), min_n=min_n)


@dataclass(frozen=True)
class RotationMultiset:
    """Multiplicities over Z_n; ``mult[u]`` counts copies of a^u."""

    n: int
    mult: tuple[int, ...]

    def __post_init__(self):
        if len(self.mult) != self.n:
            raise ValueError(f"multiplicity vector has length {len(self.mult)}, expected {self.n}")
        if any(m < 0 for m in self.mult):
            raise ValueError("multiplicities must be nonnegative")

    @classmethod
    def from_counts(cls, n: int, counts: Mapping[int, int]) -> RotationMultiset:
        mult = [0] * n
        for u, c in counts.items():
            mult[u % n] += c
        return cls(n, tuple(mult))

    @property
    def total(self) -> int:
        return sum(self.mult)

    def __getitem__(self, u: int) -> int:
        return self.mult[u % self.n]

    def support(self) -> list[int]:
        return [u for u, m in enumerate(self.mult) if m]

    def is_symmetric(self) -> bool:
        n = self.n
        return all(self.mult[u] == self.mult[(-u) % n] for u in range(n))


@dataclass(frozen=True)
class AtomDecomposition:
    """A multiset written as sum of m_d * [a^d] over divisors d of n.

    Only nonzero coefficients are stored. The identity atom [1] is d = n.
    """

    n: int
    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for d, m in self.coeffs.items():
            if self.n % d:
                raise ValueError(f"{d} does not divide {self.n}")
            if m < 0:
                raise ValueError("atom coefficients must be nonnegative")
            if m:
                clean[d] = m
        object.__setattr__(self, "coeffs", dict(sorted(clean.items(), reverse=True)))

    @property
    def k(self) -> int:
        """Number of atoms with nonzero coefficient."""
        return len(self.coeffs)

    def realize(self) -> RotationMultiset:
        n = self.n
        mult = [0] * n
        for u in range(n):
            mult[u] = self.coeffs.get(atom_of(u, n), 0)
        return RotationMultiset(n, tuple(mult))

    def to_json(self) -> dict:
        return {"n": self.n, "atoms": {str(d): m for d, m in self.coeffs.items()}}

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d, m in self.coeffs.items():
            name = "[1]" if d == self.n else ("[a]" if d == 1 else f"[a^{d}]")
            parts.append(name if m == 1 else f"{m}*{name}")
        return " u ".join(parts)


def atom_of(l: int, n: int) -> int:
    """Divisor d labelling the atom [a^d] that contains a^l (d = n for l = 0)."""
    return gcd(l % n, n)


def atom(d: int, n: int) -> list[int]:
    """Exponents u in [0, n) with gcd(u, n) = d."""
    if n % d:
        raise ValueError(f"{d} does not divide {n}")
    return [u for u in range(0, n, d) if gcd(u, n) == d]


def indicator_multiset(s: Iterable[int], n: int) -> RotationMultiset:
    mult = [0] * n
    for u in set(x % n for x in s):
        mult[u] = 1
    return RotationMultiset(n, tuple(mult))


def in_integral_cone(m: RotationMultiset) -> AtomDecomposition | None:
    """Decompose ``m`` into atoms if its multiplicity is constant on every
    gcd-class, otherwise return None."""
    n = m.n
    seen: dict[int, int] = {}
    for u, c in enumerate(m.mult):
        d = atom_of(u, n)
        if seen.setdefault(d, c) != c:
            return None
    return AtomDecomposition(n, seen)


def in_boolean_algebra(s1: Iterable[int], n: int) -> AtomDecomposition | None:
    """Atoms making up the rotation set ``s1``, or None if it is not a union of atoms."""
    return in_integral_cone(indicator_multiset(s1, n))


def difference_multiset(s2: Iterable[int], n: int) -> RotationMultiset:
    """S2^2 as a multiset: (b a^x)(b a^y) = a^(y - x) over all ordered pairs."""
    s2 = sorted(set(u % n for u in s2))
    mult = [0] * n
    for x in s2:
        for y in s2:
            mult[(y - x) % n] += 1
    return RotationMultiset(n, tuple(mult))


def sum_multiset(s1: Iterable[int], n: int) -> RotationMultiset:
    """S1^2 as a multiset: a^x a^y = a^(x + y) over all ordered pairs."""
    s1 = sorted(set(u % n for u in s1))
    mult = [0] * n
    for x in s1:
        for y in s1:
            mult[(x + y) % n] += 1
    return RotationMultiset(n, tuple(mult))


def is_generating(S: ConnectionSet) -> bool:
    """True iff S generates D_n, i.e. the Cayley graph is connected."""
    n = S.n
    gens = S.elements()
    start = DihedralElement.identity(n)
    seen = {start}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = g * s
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return len(seen) == 2 * n


def atom_sizes(n: int) -> dict[int, int]:
    """|[a^d]| = phi(n/d) for every divisor d."""
    return {d: euler_phi(n // d) for d in divisors(n)}
