"""Closed-form counts of diagonalizable matrices with a prescribed spectrum.

For k distinct elements a_1..a_k of a q-element field, the counted sets
inside the n-by-n matrices are

* the M-set: matrices annihilated by (x-a_1)...(x-a_k), i.e. the
  diagonalizable matrices whose eigenvalues all lie among the a_i;
* the E-set: M-set members for which every a_i actually occurs.

Each set is a disjoint union of conjugacy classes of diagonal matrices,
one class per composition of n into k parts (weak for M, strict for E),
and each class has size U_n / (U_{n_1} ... U_{n_k}) where U_m is the order
of the invertible m-by-m matrices.  Those ratios are integer polynomials
in q, so both counts are too, and they depend only on (n, k), never on
which eigenvalues were prescribed.

Everything returns exact polynomials or exact integers; nothing here
touches the brute-force oracle, which independently recounts these sets.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterator, Sequence

from .qpoly import ONE, Q, IntPoly

__all__ = [
    "weak_compositions",
    "strict_compositions",
    "n_strict",
    "gl_order_poly",
    "class_size_poly",
    "count_m_poly",
    "count_e_poly",
    "table_rows",
    "roots_of_unity",
    "potent_count",
    "validate_spectrum",
    "is_prime",
    "UnsupportedField",
]


class UnsupportedField(ValueError):
    """The closed form for potent counts does not apply over this field."""


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def strict_compositions(n: int, s: int) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of s positive integers summing to n, lexicographic.

    Empty when s > n.  There are C(n-1, s-1) tuples, one per choice of
    s-1 cut points among the n-1 gaps.
    """
    if n < 1 or s < 1:
        raise ValueError("n and s must be positive")
    if s > n:
        return
    for cuts in itertools.combinations(range(1, n), s - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def weak_compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of k nonnegative integers summing to n, lexicographic.

    There are C(n+k-1, k-1) of them; shifting every part up by one gives a
    bijection with the strict compositions of n+k into k parts.
    """
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    for parts in strict_compositions(n + k, k):
        yield tuple(part - 1 for part in parts)


def n_strict(n: int, s: int) -> int:
    """Number of strict compositions of n into s parts: C(n-1, s-1)."""
    if n < 1 or s < 1:
        raise ValueError("n and s must be positive")
    return math.comb(n - 1, s - 1)


@lru_cache(maxsize=None)
def gl_order_poly(n: int) -> IntPoly:
    """Order of the invertible n-by-n matrices as a polynomial in q.

    q^(n(n-1)/2) * (q-1)(q^2-1)...(q^n-1); the empty product makes the
    0-by-0 case the constant 1.
    """
    if n < 0:
        raise ValueError("matrix dimension must be nonnegative")
    poly = IntPoly.monomial(n * (n - 1) // 2)
    for i in range(1, n + 1):
        poly = poly * (IntPoly.monomial(i) - ONE)
    return poly


def class_size_poly(parts: Sequence[int]) -> IntPoly:
    """Conjugacy-class size of the diagonal matrix with block multiplicities.

    For distinct eigenvalues with multiplicities ``parts``, the class size
    is U_n divided by the product of the U_{n_i}; zero parts contribute a
    factor of one.  The division is exact by the orbit-stabilizer theorem,
    so a remainder is a fatal internal error.
    """
    parts = tuple(parts)
    if any(p < 0 for p in parts):
        raise ValueError("multiplicities must be nonnegative")
    return _class_size_cached(tuple(sorted(parts)))


@lru_cache(maxsize=None)
def _class_size_cached(sorted_parts: tuple[int, ...]) -> IntPoly:
    n = sum(sorted_parts)
    denominator = ONE
    for part in sorted_parts:
        denominator = denominator * gl_order_poly(part)
    return gl_order_poly(n).divexact(denominator)


@lru_cache(maxsize=None)
def count_m_poly(n: int, k: int) -> IntPoly:
    """Count of diagonalizable matrices with spectrum inside a fixed k-set.

    Sum of class sizes over the weak compositions of n into k parts.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    total = IntPoly()
    for parts in weak_compositions(n, k):
        total = total + class_size_poly(parts)
    return total


@lru_cache(maxsize=None)
def count_e_poly(n: int, k: int) -> IntPoly:
    """Count of diagonalizable matrices with spectrum exactly a fixed k-set.

    Sum of class sizes over the strict compositions; the zero polynomial
    when k > n since n-by-n matrices carry at most n distinct eigenvalues.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    total = IntPoly()
    for parts in strict_compositions(n, k):
        total = total + class_size_poly(parts)
    return total


def table_rows(n_max: int = 6) -> list[tuple[int, int, IntPoly]]:
    """Exact-spectrum count polynomials for n = 3..n_max and k = 2..n.

    Row order is n ascending, then k ascending; n_max = 6 yields the
    fourteen reference rows.
    """
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    return [
        (n, k, count_e_poly(n, k))
        for n in range(3, n_max + 1)
        for k in range(2, n + 1)
    ]


def roots_of_unity(p: int, k: int) -> list[int]:
    """All k-th roots of unity in the p-element field, ascending.

    The list has gcd(k, p-1) entries because the unit group is cyclic of
    order p-1.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("k must be positive")
    return [x for x in range(1, p) if pow(x, k, p) == 1]


def potent_count(n: int, p: int, k: int) -> int:
    """Number of n-by-n matrices A over the p-element field with A^(k+1) = A.

    Requires k to divide p-1: then x^(k+1) - x splits into distinct linear
    factors, the solutions are exactly the diagonalizable matrices with
    spectrum inside {0} and the k-th roots of unity, and the M-count with
    k+1 prescribed values applies, evaluated at q = p.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if (p - 1) % k != 0:
        raise UnsupportedField(
            f"k={k} does not divide p-1={p - 1}: the field has too few k-th "
            "roots of unity; use the brute-force oracle count instead"
        )
    return count_m_poly(n, k + 1)(p)


def validate_spectrum(p: int, alphas: Sequence[int]) -> tuple[int, ...]:
    """Check a concrete spectrum: p prime, alphas distinct residues mod p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    alphas = tuple(alphas)
    if not alphas:
        raise ValueError("spectrum must be nonempty")
    if any(a < 0 or a >= p for a in alphas):
        raise ValueError(f"spectrum entries must lie in [0, {p})")
    if len(set(alphas)) != len(alphas):
        raise ValueError("spectrum entries must be pairwise distinct")
    return alphas


# q is exported for callers building ad-hoc polynomials next to the counts.
q = Q
