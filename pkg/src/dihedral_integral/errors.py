"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class DihedralIntegralError(Exception):
    """Base class for errors raised by this package."""


class ConnectionSetError(DihedralIntegralError, ValueError):
    """The input does not describe a valid connection set."""


class BadModulus(ConnectionSetError):
    def __init__(self, n, minimum: int = 3):
        self.n = n
        self.minimum = minimum
        super().__init__(f"n={n} is not supported here (need n >= {minimum})")


class IdentityInSet(ConnectionSetError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"s1 contains 0, i.e. the identity of D_{n}")


class NotInverseClosed(ConnectionSetError):
    def __init__(self, n: int, offending: list[int]):
        self.n = n
        self.offending = offending
        super().__init__(
            f"s1 is not closed under u -> {n}-u; missing inverses of {offending}"
        )


class ExactPathUnavailable(DihedralIntegralError):
    """Exact spectrum requested for a set whose spectrum is not integral."""

    def __init__(self, reason: str, h: int | None = None, value: int | None = None):
        self.reason = reason
        self.h = h
        self.value = value
        msg = reason if h is None else f"{reason} (h={h}, value={value})"
        super().__init__(msg)


class NotTwoIntegral(DihedralIntegralError, ValueError):
    def __init__(self, k: int | None):
        self.k = k
        what = "is not in the integral cone" if k is None else f"has {k} atoms"
        super().__init__(f"S2^2 {what}; expected exactly 2")


class EvenModulus(DihedralIntegralError, ValueError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"n={n} is even; the two-atom classification needs odd n")


class InvariantViolation(DihedralIntegralError, AssertionError):
    """An internal consistency check failed; this is a bug, not a verdict."""
