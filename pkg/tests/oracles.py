"""Independent brute-force oracles used across the test suite.

Everything here counts or enumerates directly from definitions; nothing
imports the recurrence/quadrature code paths under test.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def count_cycles(perm: tuple[int, ...]) -> int:
    """Cycle count by explicit traversal of one permutation of 0..n-1."""
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if not seen[start]:
            cycles += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def cycle_histogram(n: int) -> list[int]:
    """Histogram of cycle counts over all n! permutations."""
    hist = [0] * n
    for perm in itertools.permutations(range(n)):
        hist[count_cycles(perm) - 1] += 1
    return hist


def collision_probability(n: int) -> Fraction:
    """Probability of equal cycle counts over all ordered pairs of
    permutations, by direct double enumeration."""
    counts = [count_cycles(p) for p in itertools.permutations(range(n))]
    equal = sum(1 for a in counts for b in counts if a == b)
    return Fraction(equal, len(counts) ** 2)
