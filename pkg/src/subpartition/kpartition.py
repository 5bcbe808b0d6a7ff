"""Submodular k-partition from the principal sequence, with baselines.

The main entry point `pps_k_partition` minimizes sum_i f(V_i) over
partitions into exactly k blocks, approximately, by reading the principal
sequence of f:

* if some chain member has exactly k blocks, return it (this is provably an
  optimal k-partition, re-checkable with `check_exact_hit_optimality`);
* otherwise two neighbors straddle k.  The finer one splits a single block S
  of the coarser one into smaller pieces; keep the cheapest of those pieces
  as their own blocks, as many as needed to reach k, and merge the rest back
  into one block.

Approximation guarantees depend on the declared function class:
4/3 - 4/(9n+3) for monotone, 2 - 2/n for symmetric, 2 - 2/(n+1) for
posimodular, none for general submodular.  `ratio_report` measures a run
against the brute-force optimum and its class bound; the two chain lower
bounds on the optimum (`check_chain_lower_bounds`) are what the guarantees
rest on and hold exactly on every non-exact-hit run.

Baselines: `cheapest_singleton` (split off the k-1 cheapest singletons,
within 2 - 1/k of optimal for monotone f) and `greedy_splitting` (k-1
rounds of the cheapest single-block 2-split).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    Partition,
    ValueOracle,
    partition_value,
    refined_part,
)
from .partition_opt import brute_force_optimal_k_partition
from .pps import PrincipalSequence, compute_pps

__all__ = [
    "BaselineResult",
    "ChainBoundsReport",
    "ExactHitReport",
    "KPartitionRun",
    "RatioReport",
    "approximation_bound",
    "cheapest_singleton",
    "check_chain_lower_bounds",
    "check_exact_hit_optimality",
    "greedy_splitting",
    "pps_k_partition",
    "ratio_report",
]


@dataclass(frozen=True)
class KPartitionRun:
    """One run of the sequence-based k-partition algorithm, with diagnostics.

    On an exact hit, `partition` is the chain member with k blocks and the
    straddle fields are None.  Otherwise `below`/`above` are the chain
    neighbors with fewer/more than k blocks, `split_block` is the block of
    `below` that `above` refines, `piece_order` lists the pieces sorted by
    ascending value (ties by minimum element), and the first `num_taken` of
    them became blocks while the remaining `gap_above + 1` were merged.
    """

    k: int
    partition: Partition
    value: Fraction
    exact_hit: bool
    sequence: PrincipalSequence
    below: Partition | None = None
    above: Partition | None = None
    split_block: int | None = None
    piece_order: tuple[int, ...] | None = None
    num_taken: int | None = None
    gap_above: int | None = None
    oracle_evaluations: int = 0


def pps_k_partition(
    oracle: ValueOracle, k: int, pps: PrincipalSequence | None = None
) -> KPartitionRun:
    """Approximate minimum k-partition read off the principal sequence.

    Pass a precomputed sequence to amortize it across several k values.
    """
    n = oracle.n
    if not 1 <= k <= n:
        raise ValueError(f"k={k} must be between 1 and n={n}")
    if pps is None:
        pps = compute_pps(oracle)
    counts = pps.block_counts()

    if k in counts:
        partition = pps.partitions[counts.index(k)]
        return KPartitionRun(
            k=k,
            partition=partition,
            value=partition_value(oracle, partition),
            exact_hit=True,
            sequence=pps,
            oracle_evaluations=oracle.distinct_evaluations,
        )

    above_index = next(i for i, c in enumerate(counts) if c > k)
    below = pps.partitions[above_index - 1]
    above = pps.partitions[above_index]
    split = refined_part(below, above)
    if split is None:
        raise ValueError("chain violates single-block refinement; repair it first")
    pieces = sorted(
        (blk for blk in above.blocks if blk & split),
        key=lambda blk: (oracle.eval(blk), blk & -blk),
    )
    num_taken = k - len(below)
    merged = 0
    for blk in pieces[num_taken:]:
        merged |= blk
    blocks = [blk for blk in below.blocks if blk != split]
    blocks.extend(pieces[:num_taken])
    blocks.append(merged)
    partition = Partition(n, blocks)
    return KPartitionRun(
        k=k,
        partition=partition,
        value=partition_value(oracle, partition),
        exact_hit=False,
        sequence=pps,
        below=below,
        above=above,
        split_block=split,
        piece_order=tuple(pieces),
        num_taken=num_taken,
        gap_above=len(above) - k,
        oracle_evaluations=oracle.distinct_evaluations,
    )


@dataclass(frozen=True)
class BaselineResult:
    algorithm: str
    partition: Partition
    value: Fraction


def cheapest_singleton(oracle: ValueOracle, k: int) -> BaselineResult:
    """Split off the k-1 cheapest singletons, keep the rest as one block.

    Ties are broken by element index.  For monotone f this is within a
    factor 2 - 1/k of the optimal k-partition.
    """
    n = oracle.n
    if not 1 <= k <= n:
        raise ValueError(f"k={k} must be between 1 and n={n}")
    order = sorted(range(n), key=lambda i: (oracle.eval(1 << i), i))
    taken = order[: k - 1]
    rest = oracle.ground_set.full_mask
    blocks = []
    for i in taken:
        blocks.append(1 << i)
        rest ^= 1 << i
    blocks.append(rest)
    partition = Partition(n, blocks)
    return BaselineResult("singleton", partition, partition_value(oracle, partition))


def _submasks_with_low_bit(mask: int):
    """Proper nonempty submasks of `mask` containing its lowest set bit,
    ascending.  Covers each 2-split of the block exactly once."""
    low = mask & -mask
    rest_bits = []
    rest = mask ^ low
    while rest:
        bit = rest & -rest
        rest_bits.append(bit)
        rest ^= bit
    for t in range(1 << len(rest_bits)):
        sub = low
        tt = t
        idx = 0
        while tt:
            if tt & 1:
                sub |= rest_bits[idx]
            tt >>= 1
            idx += 1
        if sub != mask:
            yield sub


def greedy_splitting(oracle: ValueOracle, k: int) -> BaselineResult:
    """k-1 rounds of the globally cheapest single-block 2-split.

    Each round scans blocks in canonical order and, within a block, the
    candidate halves containing the block's minimum element in ascending
    mask order; the first split minimizing f(X) + f(A-X) - f(A) wins.
    """
    n = oracle.n
    if not 1 <= k <= n:
        raise ValueError(f"k={k} must be between 1 and n={n}")
    blocks = [oracle.ground_set.full_mask]
    for _ in range(k - 1):
        best = None  # (cost, block_index, submask)
        for bi, blk in enumerate(blocks):
            if blk.bit_count() < 2:
                continue
            f_blk = oracle.eval(blk)
            for sub in _submasks_with_low_bit(blk):
                cost = oracle.eval(sub) + oracle.eval(blk ^ sub) - f_blk
                if best is None or cost < best[0]:
                    best = (cost, bi, sub)
        if best is None:
            raise ValueError("ran out of splittable blocks before reaching k")
        _, bi, sub = best
        blk = blocks.pop(bi)
        blocks.extend([sub, blk ^ sub])
        blocks.sort(key=lambda m: m & -m)
    partition = Partition(n, blocks)
    return BaselineResult("greedy", partition, partition_value(oracle, partition))


def approximation_bound(function_class: str, n: int) -> Fraction | None:
    """Class-specific guarantee for the sequence-based algorithm, or None."""
    if function_class == "monotone":
        return Fraction(4, 3) - Fraction(4, 9 * n + 3)
    if function_class == "symmetric":
        return 2 - Fraction(2, n)
    if function_class == "posimodular":
        return 2 - Fraction(2, n + 1)
    if function_class == "general":
        return None
    raise ValueError(f"unknown function class {function_class!r}")


@dataclass(frozen=True)
class ChainBoundsReport:
    """The two chain lower bounds on the optimal k-partition value.

    Applicable on straddled (non-exact-hit) runs: with L = |below|, U =
    |above|, the optimum is at least the interpolation
    ((U - k) f(below) + (k - L) f(above)) / (U - L) and at least f(below).
    """

    applicable: bool
    interpolated_bound: Fraction | None = None
    coarse_bound: Fraction | None = None
    interpolated_ok: bool | None = None
    coarse_ok: bool | None = None


def check_chain_lower_bounds(
    oracle: ValueOracle,
    k: int,
    pps: PrincipalSequence,
    optimal_value: Fraction,
) -> ChainBoundsReport:
    """Evaluate both chain lower bounds against a known optimal value."""
    counts = pps.block_counts()
    if k in counts:
        return ChainBoundsReport(applicable=False)
    above_index = next(i for i, c in enumerate(counts) if c > k)
    below = pps.partitions[above_index - 1]
    above = pps.partitions[above_index]
    low, up = len(below), len(above)
    f_below = partition_value(oracle, below)
    f_above = partition_value(oracle, above)
    interpolated = ((up - k) * f_below + (k - low) * f_above) / (up - low)
    return ChainBoundsReport(
        applicable=True,
        interpolated_bound=interpolated,
        coarse_bound=f_below,
        interpolated_ok=optimal_value >= interpolated,
        coarse_ok=optimal_value >= f_below,
    )


@dataclass(frozen=True)
class ExactHitReport:
    """Exact-hit optimality check: a chain member with k blocks must match
    the brute-force optimum value exactly."""

    applicable: bool
    chain_value: Fraction | None = None
    brute_value: Fraction | None = None
    ok: bool | None = None


def check_exact_hit_optimality(
    oracle: ValueOracle, k: int, pps: PrincipalSequence | None = None
) -> ExactHitReport:
    if pps is None:
        pps = compute_pps(oracle)
    counts = pps.block_counts()
    if k not in counts:
        return ExactHitReport(applicable=False)
    chain_value = partition_value(oracle, pps.partitions[counts.index(k)])
    _, brute_value = brute_force_optimal_k_partition(oracle, k)
    return ExactHitReport(
        applicable=True,
        chain_value=chain_value,
        brute_value=brute_value,
        ok=chain_value == brute_value,
    )


@dataclass(frozen=True)
class RatioReport:
    """Run value vs brute-force optimum vs class bound, all exact.

    `ratio` is algorithm/optimum as a Fraction; when the optimum is 0 it is
    1 if the algorithm also returned 0 and the float infinity sentinel
    otherwise (with bound_ok False).  `chain_coarse_ratio` is
    f(below)/optimum on straddled runs, the quantity the class analyses
    bound away from the worst case.
    """

    n: int
    k: int
    function_class: str
    algorithm_value: Fraction
    optimal_value: Fraction
    optimal_partition: Partition
    ratio: Fraction | float
    bound: Fraction | None
    bound_ok: bool
    exact_hit: bool
    chain_coarse_ratio: Fraction | None
    run: KPartitionRun


def ratio_report(
    oracle: ValueOracle,
    k: int,
    function_class: str = "general",
    pps: PrincipalSequence | None = None,
) -> RatioReport:
    """Run the algorithm, brute-force the optimum, compare against the bound."""
    run = pps_k_partition(oracle, k, pps=pps)
    opt_partition, opt_value = brute_force_optimal_k_partition(oracle, k)
    if opt_value > 0:
        ratio: Fraction | float = run.value / opt_value
    elif run.value == 0:
        ratio = Fraction(1)
    else:
        ratio = float("inf")
    bound = approximation_bound(function_class, oracle.n)
    if bound is None:
        bound_ok = True
    elif isinstance(ratio, Fraction):
        bound_ok = ratio <= bound
    else:
        bound_ok = False
    coarse_ratio = None
    if not run.exact_hit and opt_value > 0:
        coarse_ratio = partition_value(oracle, run.below) / opt_value
    return RatioReport(
        n=oracle.n,
        k=k,
        function_class=function_class,
        algorithm_value=run.value,
        optimal_value=opt_value,
        optimal_partition=opt_partition,
        ratio=ratio,
        bound=bound,
        bound_ok=bound_ok,
        exact_hit=run.exact_hit,
        chain_coarse_ratio=coarse_ratio,
        run=run,
    )
