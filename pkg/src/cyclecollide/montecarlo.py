"""Monte Carlo estimation of the cycle-count collision probability.

Two samplers draw the cycle count of a uniform random n-permutation:

* PERMUTATION_DIRECT shuffles 0..n-1 with an unbiased shuffle and counts
  the cycles of the result.  This is the structural ground truth.
* BERNOULLI_SUM uses the classical fact that the cycle count of a uniform
  n-permutation is distributed as 1 + sum_{j=2..n} Bernoulli(1/j) (build
  the permutation by inserting letters one at a time: letter j either
  closes a new cycle, with probability 1/j, or does not).  O(n) time and
  O(1) memory per draw, the default for large n, and validated against
  the direct sampler.

Randomness comes from counter-based Philox streams keyed by
(seed, block index), with trials sharded into fixed-size blocks.  The
result for a given (n, pairs, kind, seed) is therefore reproducible
bit-for-bit no matter how many workers process the blocks.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "SamplerKind",
    "McEstimate",
    "BERNOULLI_DEFAULT_MIN_N",
    "default_sampler",
    "sample_cycle_count",
    "sample_cycle_counts",
    "estimate_collision",
]

# Ordered pairs per RNG block.  Fixed: changing it changes every estimate.
BLOCK_PAIRS = 1 << 14
# Column width of the uniform slabs consumed by the batched Bernoulli
# sampler.  Fixed for the same reason.
_BERNOULLI_SLAB = 256
# Element budget per chunk of batched permutations (rows x n).
_PERM_CHUNK_ELEMS = 1 << 22

# Above this n the O(n)-memory permutation sampler stops being the default.
BERNOULLI_DEFAULT_MIN_N = 10**4


class SamplerKind(Enum):
    PERMUTATION_DIRECT = "permutation"
    BERNOULLI_SUM = "bernoulli"


@dataclass(frozen=True)
class McEstimate:
    """Collision estimate from `samples` independent ordered pairs."""

    n: int
    samples: int
    collisions: int
    p_hat: float
    std_err: float


def default_sampler(n: int) -> SamplerKind:
    """Sampler used when none is requested: direct permutations for small
    n, the Bernoulli representation once n exceeds 1e4."""
    return (
        SamplerKind.BERNOULLI_SUM
        if n > BERNOULLI_DEFAULT_MIN_N
        else SamplerKind.PERMUTATION_DIRECT
    )


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")


def _check_seed(seed: int) -> None:
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")


def _stream(seed: int, block: int) -> np.random.Generator:
    """Philox stream for one block; (seed, block) is the 128-bit key."""
    key = np.array([seed, block], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _count_cycles_rows(perms: np.ndarray) -> np.ndarray:
    """Cycle count of each row of a batch of permutations of 0..n-1.

    Pointer-doubling traversal: label every position with the minimum
    index reachable in its cycle (doubling the stride each round), then
    count the positions that are their own cycle minimum.
    """
    rows, n = perms.shape
    idx = np.arange(n)
    label = np.broadcast_to(idx, (rows, n)).copy()
    ptr = perms.copy()
    for _ in range(max(0, (n - 1).bit_length())):
        label = np.minimum(label, np.take_along_axis(label, ptr, axis=1))
        ptr = np.take_along_axis(ptr, ptr, axis=1)
    return (label == idx).sum(axis=1)


def _permutation_batch(n: int, size: int, rng: np.random.Generator) -> np.ndarray:
    counts = np.empty(size, dtype=np.int64)
    rows_per_chunk = max(1, _PERM_CHUNK_ELEMS // n)
    done = 0
    while done < size:
        rows = min(rows_per_chunk, size - done)
        perms = rng.permuted(np.tile(np.arange(n), (rows, 1)), axis=1)
        counts[done : done + rows] = _count_cycles_rows(perms)
        done += rows
    return counts


def _bernoulli_batch(n: int, size: int, rng: np.random.Generator) -> np.ndarray:
    counts = np.ones(size, dtype=np.int64)
    j = 2
    while j <= n:
        hi = min(n, j + _BERNOULLI_SLAB - 1)
        inv = 1.0 / np.arange(j, hi + 1, dtype=np.float64)
        counts += (rng.random((size, inv.size)) < inv).sum(axis=1)
        j = hi + 1
    return counts


def sample_cycle_counts(
    kind: SamplerKind, n: int, size: int, rng: np.random.Generator
) -> np.ndarray:
    """Draw `size` independent cycle counts; values lie in 1..n."""
    _check_n(n)
    if size < 1:
        raise ValueError(f"size must be >= 1, got {size}")
    if kind is SamplerKind.PERMUTATION_DIRECT:
        return _permutation_batch(n, size, rng)
    return _bernoulli_batch(n, size, rng)


def sample_cycle_count(kind: SamplerKind, n: int, rng: np.random.Generator) -> int:
    """Cycle count of one uniform random n-permutation.

    The PERMUTATION_DIRECT path here is the plain reference: shuffle,
    then walk each unvisited cycle.  Batched draws should go through
    `sample_cycle_counts`.
    """
    _check_n(n)
    if kind is SamplerKind.BERNOULLI_SUM:
        if n == 1:
            return 1
        inv = 1.0 / np.arange(2.0, n + 1.0)
        return 1 + int((rng.random(n - 1) < inv).sum())
    perm = rng.permutation(n)
    seen = np.zeros(n, dtype=bool)
    cycles = 0
    for start in range(n):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return cycles


def _block_collisions(args: tuple[int, int, SamplerKind, int, int]) -> int:
    n, pairs, kind, seed, block = args
    rng = _stream(seed, block)
    first = sample_cycle_counts(kind, n, pairs, rng)
    second = sample_cycle_counts(kind, n, pairs, rng)
    return int((first == second).sum())


def estimate_collision(
    n: int,
    pairs: int,
    kind: SamplerKind | None = None,
    seed: int = 0,
    workers: int = 1,
) -> McEstimate:
    """Estimate the collision probability from `pairs` ordered pairs.

    Each pair is two independent draws, matching the definition of the
    probability being estimated.  The estimate is a deterministic
    function of (n, pairs, kind, seed); `workers` only changes how the
    fixed blocks are scheduled, never the result.
    """
    _check_n(n)
    _check_seed(seed)
    if pairs < 1:
        raise ValueError(f"pairs must be >= 1, got {pairs}")
    if kind is None:
        kind = default_sampler(n)

    tasks = [
        (n, min(BLOCK_PAIRS, pairs - start), kind, seed, block)
        for block, start in enumerate(range(0, pairs, BLOCK_PAIRS))
    ]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_block = list(pool.map(_block_collisions, tasks))
    else:
        per_block = [_block_collisions(t) for t in tasks]
    collisions = sum(per_block)

    p_hat = collisions / pairs
    std_err = math.sqrt(p_hat * (1.0 - p_hat) / pairs)
    return McEstimate(n, pairs, collisions, p_hat, std_err)
