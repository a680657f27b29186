"""Exhaustive and sampled enumeration of connection sets over small D_n.

Every set is decided twice, once by :func:`integrality.check_integral`
and once by the characteristic-polynomial oracle. A single disagreement
aborts the run with the offending set.
"""

from __future__ import annotations

import csv
import io
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional

from . import oracle
from .errors import BadModulus, InvariantViolation
from .group import MIN_CHARACTER_N, ConnectionSet, in_boolean_algebra, is_generating, validate_connection_set
from .integrality import check_integral
from .spectra import spectrum

__all__ = [
    "DEFAULT_CAP",
    "negation_blocks",
    "enumerate_sets",
    "count_sets",
    "sample_sets",
    "canonical_s2",
    "CensusRow",
    "CensusReport",
    "CensusDisagreement",
    "audit_set",
    "run_census",
    "default_workers",
]

DEFAULT_CAP = 12
WORKERS_ENV = "DIHEDRAL_INTEGRAL_WORKERS"


class CensusDisagreement(InvariantViolation):
    def __init__(self, S: ConnectionSet, exact: bool, brute: bool):
        self.S = S
        self.reproducer = S.to_json()
        super().__init__(
            f"exact checker says {exact}, oracle says {brute} for {json.dumps(self.reproducer)}"
        )


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def negation_blocks(n: int) -> list[tuple[int, ...]]:
    """Orbits {u, n-u} of nonzero rotations; s1 is a union of these."""
    return sorted({tuple(sorted({u, n - u})) for u in range(1, n)})


def canonical_s2(s2: Iterable[int], n: int) -> tuple[int, ...]:
    """Lexicographically least rotation of s2 (rotating S2 gives an isomorphic graph)."""
    s2 = list(s2)
    return min(tuple(sorted((u + r) % n for u in s2)) for r in range(n))


def enumerate_sets(
    n: int,
    nonempty_s2: bool = False,
    connected_only: bool = False,
    s1_in_b_only: bool = False,
    up_to_rotation: bool = False,
    cap: int = DEFAULT_CAP,
) -> Iterator[ConnectionSet]:
    """Yield every valid (s1, s2) for D_n in a fixed order.

    s1 runs over unions of negation blocks (by number of blocks, then
    lexicographically), s2 over subsets of Z_n by bitmask.
    """
    if n < MIN_CHARACTER_N:
        raise BadModulus(n, MIN_CHARACTER_N)
    if n > cap:
        raise ValueError(f"n={n} exceeds the exhaustive cap {cap}")
    blocks = negation_blocks(n)
    for r in range(len(blocks) + 1):
        for chosen in combinations(blocks, r):
            s1 = [u for b in chosen for u in b]
            if s1_in_b_only and in_boolean_algebra(s1, n) is None:
                continue
            for mask in range(1 if nonempty_s2 else 0, 1 << n):
                s2 = [u for u in range(n) if mask >> u & 1]
                if up_to_rotation and tuple(s2) != canonical_s2(s2, n):
                    continue
                S = validate_connection_set(n, s1, s2)
                if connected_only and not is_generating(S):
                    continue
                yield S


def count_sets(n: int) -> int:
    """Number of valid connection sets over D_n with no filters."""
    return 2 ** len(negation_blocks(n)) * 2**n


def sample_sets(n: int, count: int, seed: int | random.Random = 0) -> list[ConnectionSet]:
    """Uniform random valid connection sets over D_n."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    blocks = negation_blocks(n)
    out = []
    for _ in range(count):
        s1 = [u for b in blocks if rng.random() < 0.5 for u in b]
        s2 = [u for u in range(n) if rng.random() < 0.5]
        out.append(validate_connection_set(n, s1, s2))
    return out


@dataclass(frozen=True)
class CensusRow:
    S: ConnectionSet
    verdict_exact: bool
    verdict_oracle: bool
    connected: bool
    sufficient: bool
    k_integrality: Optional[int]
    spectrum: Optional[list[tuple[int, int]]] = None

    @property
    def integral_not_sufficient(self) -> bool:
        """Integral although the atom-union sufficient test does not apply."""
        return self.verdict_exact and not self.sufficient

    def to_json(self) -> dict:
        out = self.S.to_json()
        out.update(
            integral=self.verdict_exact,
            oracle=self.verdict_oracle,
            connected=self.connected,
            sufficient=self.sufficient,
            k_integrality=self.k_integrality,
            spectrum=None if self.spectrum is None else [[str(v), k] for v, k in self.spectrum],
        )
        return out

    def to_csv_fields(self) -> list:
        spec = "" if self.spectrum is None else " ".join(f"{v}^{k}" for v, k in self.spectrum)
        return [
            self.S.n,
            " ".join(map(str, sorted(self.S.s1))),
            " ".join(map(str, sorted(self.S.s2))),
            int(self.verdict_exact),
            int(self.verdict_oracle),
            int(self.connected),
            int(self.sufficient),
            "" if self.k_integrality is None else self.k_integrality,
            spec,
        ]


CSV_HEADER = ["n", "s1", "s2", "integral", "oracle", "connected", "sufficient", "k_integrality", "spectrum"]


def audit_set(S: ConnectionSet) -> CensusRow:
    """Decide S both ways; raise :class:`CensusDisagreement` if they differ."""
    rep = check_integral(S)
    brute = oracle.is_integral(S)
    if rep.integral != brute.integral:
        raise CensusDisagreement(S, rep.integral, brute.integral)
    spec = None
    if rep.integral:
        spec = spectrum(S, "exact").eigenvalues
        if dict(spec) != dict(brute.roots):
            raise InvariantViolation(f"exact spectrum {spec} differs from oracle roots for {S}")
    return CensusRow(S, rep.integral, brute.integral, rep.connected, rep.sufficient, rep.k_integrality, spec)


def _audit_shard(sets: list[ConnectionSet]) -> list[CensusRow]:
    return [audit_set(S) for S in sets]


@dataclass
class CensusReport:
    n: int
    rows: list[CensusRow] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        integral = [r for r in self.rows if r.verdict_exact]
        by_k: dict[str, int] = {}
        for r in integral:
            key = str(r.k_integrality)
            by_k[key] = by_k.get(key, 0) + 1
        return {
            "n": self.n,
            "total": len(self.rows),
            "integral": len(integral),
            "integral_connected": sum(r.connected for r in integral),
            "sufficient": sum(r.sufficient for r in self.rows),
            "integral_not_sufficient": sum(r.integral_not_sufficient for r in self.rows),
            "integral_by_k": dict(sorted(by_k.items())),
            "disagreements": sum(r.verdict_exact != r.verdict_oracle for r in self.rows),
        }

    def integral_sets(self) -> list[ConnectionSet]:
        return [r.S for r in self.rows if r.verdict_exact]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in self.rows:
            w.writerow(r.to_csv_fields())
        return buf.getvalue()

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r.to_json()) + "\n" for r in self.rows)


def _shards(sets: list[ConnectionSet], n: int) -> list[list[ConnectionSet]]:
    # group by the low bits of s2 so each shard is a contiguous-ish slice of work
    nbits = min(4, n)
    keyed: dict[int, list[ConnectionSet]] = {}
    for S in sets:
        key = sum(1 << u for u in S.s2 if u < nbits)
        keyed.setdefault(key, []).append(S)
    return list(keyed.values())


def run_census(
    n: int,
    nonempty_s2: bool = False,
    connected_only: bool = False,
    s1_in_b_only: bool = False,
    up_to_rotation: bool = False,
    cap: int = DEFAULT_CAP,
    workers: int | None = None,
) -> CensusReport:
    """Audit every set from :func:`enumerate_sets`; rows keep enumeration order."""
    sets = list(enumerate_sets(n, nonempty_s2, connected_only, s1_in_b_only, up_to_rotation, cap))
    workers = default_workers() if workers is None else workers
    if workers <= 1:
        rows = [audit_set(S) for S in sets]
    else:
        order = {S: i for i, S in enumerate(sets)}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_audit_shard, _shards(sets, n))
            rows = sorted((r for part in parts for r in part), key=lambda r: order[r.S])
    return CensusReport(n, rows)
