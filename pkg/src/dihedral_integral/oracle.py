"""Brute-force ground truth for Cayley graphs over D_n.

Builds the adjacency matrix straight from the group law, computes the
exact characteristic polynomial with the division-free Berkowitz
recurrence and decides integrality by peeling off integer roots. Nothing
here imports the character-theoretic modules; only :mod:`group` is shared.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .group import ConnectionSet, DihedralElement

__all__ = [
    "vertices",
    "build_adjacency",
    "char_poly",
    "bareiss_det",
    "poly_eval",
    "deflate",
    "OracleVerdict",
    "is_integral",
    "numeric_eigenvalues",
    "to_dot",
]


def vertices(n: int) -> list[DihedralElement]:
    """a^0..a^(n-1) followed by b a^0..b a^(n-1)."""
    return [DihedralElement.rotation(k, n) for k in range(n)] + [
        DihedralElement.reflection(k, n) for k in range(n)
    ]


def build_adjacency(S: ConnectionSet) -> np.ndarray:
    """0/1 adjacency matrix with A[u, v] = 1 iff u^-1 v is in S."""
    verts = vertices(S.n)
    N = len(verts)
    A = np.zeros((N, N), dtype=np.int64)
    for i, u in enumerate(verts):
        uinv = u.inverse()
        for j, v in enumerate(verts):
            if uinv * v in S:
                A[i, j] = 1
    return A


def char_poly(A) -> list[int]:
    """Coefficients of det(xI - A), highest degree first, as exact ints.

    Berkowitz: the polynomial of the leading (r+1)x(r+1) block is a Toeplitz
    matrix built from (1, -a_rr, -R C, -R M C, ...) times the polynomial of
    the leading r x r block M. Only ring operations, so integer in, integer out.
    """
    rows = [[int(x) for x in row] for row in np.asarray(A).tolist()]
    N = len(rows)
    if N == 0:
        return [1]
    if any(len(r) != N for r in rows):
        raise ValueError("matrix must be square")
    # sparse rows speed up the M^k C products on 0/1 adjacency matrices
    nz = [[(j, x) for j, x in enumerate(r) if x] for r in rows]
    poly = [1, -rows[0][0]]
    for r in range(1, N):
        R = [(j, x) for j, x in nz[r] if j < r]
        v = [rows[i][r] for i in range(r)]
        col = [1, -rows[r][r]]
        for _ in range(r):
            col.append(-sum(x * v[j] for j, x in R))
            v = [sum(x * v[j] for j, x in nz[i] if j < r) for i in range(r)]
        new = []
        for i in range(r + 2):
            acc = 0
            for j in range(max(0, i - len(col) + 1), min(i, r) + 1):
                acc += col[i - j] * poly[j]
            new.append(acc)
        poly = new
    return poly


def bareiss_det(M) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    a = [[int(x) for x in row] for row in np.asarray(M).tolist()]
    N = len(a)
    if N == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(N - 1):
        if a[k][k] == 0:
            for i in range(k + 1, N):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, N):
            for j in range(k + 1, N):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[N - 1][N - 1]


def poly_eval(poly: list[int], x: int) -> int:
    acc = 0
    for c in poly:
        acc = acc * x + c
    return acc


def _divide_linear(poly: list[int], r: int) -> tuple[list[int], int]:
    """Synthetic division by (x - r); returns (quotient, remainder)."""
    out = []
    acc = 0
    for c in poly:
        acc = acc * r + c
        out.append(acc)
    return out[:-1], out[-1]


def deflate(poly: list[int], bound: int) -> tuple[Counter, list[int]]:
    """Strip every factor (x - r) with |r| <= bound, repeating for multiplicity.

    Returns the root multiset and the leftover polynomial (``[1]`` when the
    polynomial splits completely over the integers).
    """
    roots: Counter = Counter()
    rest = list(poly)
    for r in range(-bound, bound + 1):
        while len(rest) > 1:
            q, rem = _divide_linear(rest, r)
            if rem:
                break
            roots[r] += 1
            rest = q
    return roots, rest


@dataclass(frozen=True)
class OracleVerdict:
    integral: bool
    char_poly: list[int]
    roots: Counter = field(default_factory=Counter)
    residual: list[int] = field(default_factory=lambda: [1])

    def to_json(self) -> dict:
        return {
            "integral": self.integral,
            "char_poly": [str(c) for c in self.char_poly],
            "roots": {str(r): m for r, m in sorted(self.roots.items(), reverse=True)},
            "residual": [str(c) for c in self.residual],
        }


def is_integral(S: ConnectionSet) -> OracleVerdict:
    """Decide integrality from the characteristic polynomial alone.

    Eigenvalues of an |S|-regular graph lie in [-|S|, |S|], so those are the
    only integer candidates; the constant term may vanish, so the divisors
    of it are no use as a candidate list.
    """
    poly = char_poly(build_adjacency(S))
    roots, rest = deflate(poly, S.size)
    return OracleVerdict(len(rest) == 1, poly, roots, rest)


def numeric_eigenvalues(A) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, sorted descending."""
    A = np.asarray(A, dtype=float)
    if A.size == 0:
        return np.zeros(0)
    return np.sort(np.linalg.eigvalsh(A))[::-1]


def to_dot(S: ConnectionSet, name: str | None = None) -> str:
    """Graphviz description of X(D_n, S) with vertices labelled a^k / ba^k."""

    def label(g: DihedralElement) -> str:
        return ("ba^" if g.flip else "a^") + str(g.rot)

    verts = vertices(S.n)
    A = build_adjacency(S)
    lines = [f'graph "{name or "X(D_%d,S)" % S.n}" {{']
    for g in verts:
        lines.append(f'  "{label(g)}";')
    N = len(verts)
    for i in range(N):
        for j in range(i + 1, N):
            if A[i, j]:
                lines.append(f'  "{label(verts[i])}" -- "{label(verts[j])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
