"""Integer-certified upper bounds for counts of (k+1)-potent elements.

Every bound here has the shape count <= C * |R|^(2k/(k+1)) / D with integer
C and D, so instead of evaluating fractional powers both sides are raised
to the (k+1)-th power and compared as exact integers.  A verdict stores
the two certificates actually compared; no floating point is involved,
which keeps tight cases (certificates equal) honest.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import prod

from .counting import is_prime

__all__ = [
    "BoundVerdict",
    "RingSpec",
    "ModeMismatch",
    "bound_matrix_ring",
    "bound_finite_ring",
    "RING_MODES",
]

RING_MODES = ("theorem2", "theorem3", "corollary")


class ModeMismatch(ValueError):
    """The requested bound mode does not apply to this ring shape."""


@dataclass(frozen=True)
class BoundVerdict:
    """Outcome of one integer-certified comparison.

    ``holds`` is defined as lhs <= rhs, with both certificates already
    raised to the (k+1)-th power to clear fractional exponents.
    """

    lhs_certificate: int
    rhs_certificate: int

    @property
    def holds(self) -> bool:
        return self.lhs_certificate <= self.rhs_certificate


@dataclass(frozen=True)
class RingSpec:
    """A finite ring described by the prime factorization of its cardinality."""

    prime_powers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.prime_powers:
            raise ValueError("ring spec needs at least one prime power")
        primes = [p for p, _ in self.prime_powers]
        if len(set(primes)) != len(primes):
            raise ValueError("primes must be pairwise distinct")
        for p, r in self.prime_powers:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            if r < 1:
                raise ValueError("exponents must be at least 1")

    @property
    def cardinality(self) -> int:
        return prod(p**r for p, r in self.prime_powers)

    @property
    def smallest_prime(self) -> int:
        return min(p for p, _ in self.prime_powers)

    @property
    def num_primes(self) -> int:
        return len(self.prime_powers)

    @classmethod
    def parse(cls, text: str) -> RingSpec:
        """Parse a factor list like ``2^4`` or ``2^1,3^1`` (p^r pairs)."""
        factors = []
        for token in text.split(","):
            m = re.fullmatch(r"\s*(\d+)\s*\^\s*(\d+)\s*", token)
            if m is None:
                raise ValueError(f"malformed prime power {token!r}; expected p^r")
            factors.append((int(m.group(1)), int(m.group(2))))
        return cls(tuple(factors))

    def __str__(self):
        return ",".join(f"{p}^{r}" for p, r in self.prime_powers)


def bound_matrix_ring(n: int, p: int, k: int, count: int) -> BoundVerdict:
    """Certify count <= (k+1) * p^(2n^2k/(k+1) - 1) over n-by-n matrices.

    Equivalent integer form: (count*p)^(k+1) <= (k+1)^(k+1) * p^(2n^2k).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if count < 0:
        raise ValueError("count must be nonnegative")
    lhs = (count * p) ** (k + 1)
    rhs = (k + 1) ** (k + 1) * p ** (2 * n * n * k)
    return BoundVerdict(lhs, rhs)


def bound_finite_ring(
    ring: RingSpec, k: int, count: int, mode: str = "theorem2"
) -> BoundVerdict:
    """Certify the selected potent-count bound for a finite ring.

    Modes (s = number of distinct primes, R the ring, p_i its primes):

    * ``theorem2``  single-prime rings only:
      (count*p)^(k+1) <= (k+1)^(k+1) * |R|^(2k)
    * ``theorem3``  general rings:
      (count * p_1...p_s)^(k+1) <= (k+1)^(s(k+1)) * |R|^(2k)
    * ``corollary`` general rings, smallest prime p:
      (count * p^s)^(k+1) <= (k+1)^(s(k+1)) * |R|^(2k)
    """
    if k < 1:
        raise ValueError("k must be positive")
    if count < 0:
        raise ValueError("count must be nonnegative")
    if mode not in RING_MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {RING_MODES}")
    card = ring.cardinality
    s = ring.num_primes
    if mode == "theorem2":
        if s != 1:
            raise ModeMismatch(
                "theorem2 mode needs a single-prime ring; got primes "
                + ",".join(str(p) for p, _ in ring.prime_powers)
            )
        p = ring.prime_powers[0][0]
        lhs = (count * p) ** (k + 1)
        rhs = (k + 1) ** (k + 1) * card ** (2 * k)
    elif mode == "theorem3":
        lhs = (count * prod(p for p, _ in ring.prime_powers)) ** (k + 1)
        rhs = (k + 1) ** (s * (k + 1)) * card ** (2 * k)
    else:
        lhs = (count * ring.smallest_prime**s) ** (k + 1)
        rhs = (k + 1) ** (s * (k + 1)) * card ** (2 * k)
    return BoundVerdict(lhs, rhs)
