"""Partition enumeration and brute-force parametric minimization.

This module is the exhaustive engine under the principal-sequence search:

* `enumerate_partitions(n, k)` streams all partitions of {0..n-1} (or those
  with exactly k blocks) in canonical order, lazily, O(n) memory,
* `minimize_g(oracle, b)` scans every partition to minimize f(P) - b|P|,
  returning the exact minimum with minimizer count and the finest and
  coarsest minimizers,
* `brute_force_optimal_k_partition(oracle, k)` is the independent optimum
  oracle the approximation ratios are measured against.

Canonical order is lexicographic on restricted-growth strings: element 0
opens block 0, and each later element either joins an existing block
(ascending index) or opens the next fresh block.  That order makes "first
minimizer found" a well-defined deterministic tie-break.

Scans work on a per-oracle integer profile: all 2^n values scaled by the lcm
of their denominators, partition totals and block counts precomputed.  The
profile arrays are cached per oracle for n <= 10 (Bell(10) = 115975 rows);
larger ground sets up to the cap stream partitions without materializing
them.  Comparisons are pure integer arithmetic, so ties are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator
from weakref import WeakKeyDictionary

from .core import (
    Partition,
    ValueOracle,
    as_fraction,
    require_within_cap,
)

__all__ = [
    "BELL",
    "GMinResult",
    "brute_force_all_k",
    "brute_force_optimal_k_partition",
    "enumerate_partitions",
    "minimize_g",
]

# Bell numbers up to the hard cap of 13
BELL = (1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597, 27644437)

_CACHE_MAX_N = 10
_partition_cache: dict[int, tuple[tuple[int, ...], ...]] = {}


def _raw_partitions(n: int, k: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield partitions as canonical tuples of block masks, lexicographically
    by restricted-growth string.  With k, only partitions with k blocks."""
    masks = [0] * n

    def rec(i: int, m: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            if k is None or m == k:
                yield tuple(masks[:m])
            return
        if k is not None and m + (n - i) < k:
            return  # cannot open enough new blocks any more
        bit = 1 << i
        for j in range(m):
            masks[j] |= bit
            yield from rec(i + 1, m)
            masks[j] ^= bit
        if k is None or m < k:
            masks[m] = bit
            yield from rec(i + 1, m + 1)
            masks[m] = 0

    masks[0] = 1
    yield from rec(1, 1)


def enumerate_partitions(n: int, k: int | None = None) -> Iterator[Partition]:
    """Stream Partition objects of {0..n-1} in canonical order, lazily.

    With k, restrict to partitions with exactly k blocks.  Subject to the
    enumeration cap.
    """
    require_within_cap(n, "enumerate_partitions")
    if k is not None and not 1 <= k <= n:
        raise ValueError(f"block count k={k} must be between 1 and n={n}")
    for masks in _raw_partitions(n, k):
        yield Partition._trusted(n, masks)


def _cached_partitions(n: int) -> tuple[tuple[int, ...], ...]:
    parts = _partition_cache.get(n)
    if parts is None:
        parts = tuple(_raw_partitions(n))
        _partition_cache[n] = parts
    return parts


class _Profile:
    """Per-oracle scan arrays: scaled partition totals and block counts."""

    __slots__ = ("denominator", "partitions", "values", "sizes")

    def __init__(self, oracle: ValueOracle):
        d, tab = oracle.scaled_table()
        parts = _cached_partitions(oracle.n)
        values = []
        sizes = []
        for masks in parts:
            total = 0
            for m in masks:
                total += tab[m]
            values.append(total)
            sizes.append(len(masks))
        self.denominator = d
        self.partitions = parts
        self.values = values
        self.sizes = sizes


_profiles: "WeakKeyDictionary[ValueOracle, _Profile]" = WeakKeyDictionary()


def _profile(oracle: ValueOracle) -> _Profile:
    prof = _profiles.get(oracle)
    if prof is None:
        prof = _Profile(oracle)
        _profiles[oracle] = prof
    return prof


def _scored(oracle: ValueOracle):
    """(denominator, iterator of (block_masks, scaled_value, size)) over all
    partitions in canonical order.  Cached arrays for n <= 10, streamed above."""
    n = oracle.n
    if n <= _CACHE_MAX_N:
        prof = _profile(oracle)
        return prof.denominator, zip(prof.partitions, prof.values, prof.sizes)
    d, tab = oracle.scaled_table()

    def stream():
        for masks in _raw_partitions(n):
            total = 0
            for m in masks:
                total += tab[m]
            yield masks, total, len(masks)

    return d, stream()


@dataclass(frozen=True)
class GMinResult:
    """Exact minimum of f(P) - b|P| over all partitions at one parameter b."""

    b: Fraction
    value: Fraction
    num_minimizers: int
    finest: Partition
    coarsest: Partition


def minimize_g(oracle: ValueOracle, b) -> GMinResult:
    """Minimize f(P) - b * |P| over all partitions of the ground set.

    Returns the exact minimum value, how many partitions attain it, and the
    finest (most blocks) and coarsest (fewest blocks) minimizers.  Ties at
    equal block count keep the canonically first partition.
    """
    n = oracle.n
    require_within_cap(n, "minimize_g")
    b = as_fraction(b)
    p, q = b.numerator, b.denominator
    d, rows = _scored(oracle)
    dp = d * p

    best = None
    count = 0
    fine_masks = coarse_masks = None
    fine_size = coarse_size = 0
    for masks, value, size in rows:
        score = q * value - dp * size
        if best is None or score < best:
            best = score
            count = 1
            fine_masks = coarse_masks = masks
            fine_size = coarse_size = size
        elif score == best:
            count += 1
            if size > fine_size:
                fine_size, fine_masks = size, masks
            elif size < coarse_size:
                coarse_size, coarse_masks = size, masks
    return GMinResult(
        b=b,
        value=Fraction(best, d * q),
        num_minimizers=count,
        finest=Partition._trusted(n, fine_masks),
        coarsest=Partition._trusted(n, coarse_masks),
    )


def brute_force_optimal_k_partition(oracle: ValueOracle, k: int) -> tuple[Partition, Fraction]:
    """Exact optimum over partitions with exactly k blocks, by enumeration.

    Ties are broken canonically (first in enumeration order).
    """
    n = oracle.n
    require_within_cap(n, "brute_force_optimal_k_partition")
    if not 1 <= k <= n:
        raise ValueError(f"k={k} must be between 1 and n={n}")
    d, tab = oracle.scaled_table()
    best = None
    best_masks = None
    for masks in _raw_partitions(n, k):
        total = 0
        for m in masks:
            total += tab[m]
        if best is None or total < best:
            best = total
            best_masks = masks
    return Partition._trusted(n, best_masks), Fraction(best, d)


def brute_force_all_k(oracle: ValueOracle) -> dict[int, tuple[Partition, Fraction]]:
    """Exact optimum for every k in one pass over all partitions."""
    n = oracle.n
    require_within_cap(n, "brute_force_all_k")
    d, rows = _scored(oracle)
    best: dict[int, tuple[tuple[int, ...], int]] = {}
    for masks, value, size in rows:
        cur = best.get(size)
        if cur is None or value < cur[1]:
            best[size] = (masks, value)
    return {
        size: (Partition._trusted(n, masks), Fraction(value, d))
        for size, (masks, value) in sorted(best.items())
    }
