"""Exact arbitrary-precision cycle-count combinatorics.

The number of permutations of n letters with exactly k cycles is the
unsigned Stirling number of the first kind, here written c(n, k).  Row n
of the triangle is built from the additive recurrence

    c(n, k) = (n - 1) * c(n-1, k) + c(n-1, k-1),        c(1, 1) = 1,

which is equivalent to reading off the coefficients of the rising
factorial x (x+1) ... (x+n-1).  Everything in this module is exact:
Python integers for the counts, ``fractions.Fraction`` for probabilities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# Practical ceiling for the exact route.  Nothing below enforces it; it is
# the documented point past which row construction (O(n^2) big-int adds on
# entries with tens of thousands of digits) stops being worth the wait and
# callers should switch to the quadrature route.
EXACT_ROUTE_CEILING = 20000


@dataclass(frozen=True)
class StirlingRow:
    """Row n of the cycle-count triangle.

    ``coeffs[k-1]`` is the number of permutations of ``n`` letters with
    exactly ``k`` cycles; the row sums to n!.
    """

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.n:
            raise ValueError("row must have exactly n entries")

    def coeff(self, k: int) -> int:
        """Number of permutations of n letters with exactly k cycles."""
        if not 1 <= k <= self.n:
            raise ValueError(f"k must be in 1..{self.n}, got {k}")
        return self.coeffs[k - 1]

    def row_sum(self) -> int:
        """Total count over all cycle numbers; equals n!."""
        return sum(self.coeffs)


@dataclass(frozen=True)
class ExactProbability:
    """A probability as a reduced fraction plus a float rendering."""

    numerator: int
    denominator: int
    approx: float

    @classmethod
    def from_fraction(cls, value: Fraction) -> "ExactProbability":
        if not 0 < value <= 1:
            raise ValueError(f"probability out of (0, 1]: {value}")
        return cls(value.numerator, value.denominator, float(value))

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


@dataclass(frozen=True)
class CycleDistribution:
    """Exact distribution of the cycle count of a uniform n-permutation.

    ``probs[k-1] = c(n, k) / n!`` and the entries sum to exactly 1.
    """

    n: int
    probs: tuple[Fraction, ...]

    def prob(self, k: int) -> Fraction:
        if not 1 <= k <= self.n:
            raise ValueError(f"k must be in 1..{self.n}, got {k}")
        return self.probs[k - 1]


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")


def _build_row(n: int) -> list[int]:
    """Row n of the triangle via the additive recurrence, one pass per row."""
    row = [1]
    for m in range(2, n + 1):
        prev = row
        row = [0] * m
        w = m - 1
        for j in range(w):
            row[j] = w * prev[j]
        for j in range(1, m):
            row[j] += prev[j - 1]
    return row


def stirling_row(n: int) -> StirlingRow:
    """Counts of permutations of n letters by number of cycles.

    Raises ValueError for n < 1; the n = 0 row is deliberately undefined
    here rather than adopting an empty-product convention.
    """
    _require_positive(n)
    return StirlingRow(n, tuple(_build_row(n)))


def rising_factorial_eval(n: int, x: Fraction | int) -> Fraction:
    """Exact value of x (x+1) ... (x+n-1) for rational x.

    Identical to sum_k c(n, k) x^k, which makes it an independent check on
    `stirling_row`.
    """
    _require_positive(n)
    acc = Fraction(x)
    for j in range(1, n):
        acc *= x + j
    return acc


def f_exact(n: int) -> int:
    """Sum of the squared row entries, sum_k c(n, k)^2.

    Consumes the row as it is squared so only one row is ever held; this
    is the numerator of the collision probability before reduction.
    """
    _require_positive(n)
    return sum(c * c for c in _build_row(n))


def p_exact(n: int) -> ExactProbability:
    """Probability that two independent uniform n-permutations have the
    same number of cycles: sum_k c(n, k)^2 / (n!)^2, reduced."""
    _require_positive(n)
    return ExactProbability.from_fraction(
        Fraction(f_exact(n), math.factorial(n) ** 2)
    )


def cycle_distribution(n: int) -> CycleDistribution:
    """Exact cycle-count law of a uniform random n-permutation."""
    _require_positive(n)
    fact = math.factorial(n)
    return CycleDistribution(n, tuple(Fraction(c, fact) for c in _build_row(n)))
