"""Exact integer number theory used by the character computations.

Everything here works on Python ints and never touches floating point.
Factorisation is plain trial division; the moduli in this package are
graph orders, so that is plenty.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt

__all__ = [
    "factorize",
    "divisors",
    "euler_phi",
    "moebius",
    "ramanujan_sum",
    "is_perfect_square",
    "perfect_square_root",
    "is_prime",
]


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of ``n`` as ``((p, e), ...)`` with p increasing."""
    _require_positive(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of ``n`` in increasing order."""
    _require_positive(n)
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


@lru_cache(maxsize=4096)
def euler_phi(n: int) -> int:
    _require_positive(n)
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


@lru_cache(maxsize=4096)
def moebius(n: int) -> int:
    _require_positive(n)
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def ramanujan_sum(s: int, n: int) -> int:
    """Ramanujan sum c(s, n) from the totient/Moebius closed form.

    With g = gcd(s, n) and q = n // g this is phi(n) // phi(q) * mu(q).
    The division is exact because phi(q) divides phi(n) whenever q | n.
    """
    _require_positive(n)
    if s < 0:
        raise ValueError(f"s must be nonnegative, got {s}")
    q = n // gcd(s, n)
    mu = moebius(q)
    if mu == 0:
        return 0
    return euler_phi(n) // euler_phi(q) * mu


def perfect_square_root(k: int) -> int | None:
    """Return w >= 0 with w*w == k, or None if k is not a perfect square."""
    if k < 0:
        return None
    w = isqrt(k)
    return w if w * w == k else None


def is_perfect_square(k: int) -> bool:
    return perfect_square_root(k) is not None
