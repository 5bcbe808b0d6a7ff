"""Exact primitives: ground sets, subset masks, partitions, value oracles.

Everything in this package works with set functions f: 2^V -> Q given by
value oracles over a small ground set V = {0, ..., n-1}.  This module fixes
the representations the rest of the package builds on:

* subsets are n-bit integer masks (bit i set means element i is present),
* values are `fractions.Fraction`; floats are rejected everywhere,
* partitions are tuples of disjoint nonempty masks covering V, stored in a
  canonical order (blocks sorted by their minimum element).

The canonical block order induces a restricted-growth encoding of each
partition, and lexicographic order on those encodings is the canonical
total order on partitions of a fixed ground set.  Every "ties broken
canonically" rule in this package means exactly that order.

Exhaustive operations (partition enumeration, property checking) are capped
at n <= 13 ground elements; the SUBMOD_N_CAP environment variable can lower
the cap but never raise it.
"""

from __future__ import annotations

import os
import string
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Callable, Iterable, Iterator

__all__ = [
    "ENUMERATION_CAP",
    "GroundSet",
    "GroundSetCapError",
    "NonSubmodularError",
    "Partition",
    "ValueOracle",
    "as_fraction",
    "default_labels",
    "enumeration_cap",
    "g_value",
    "partition_value",
    "refined_part",
    "refines",
    "require_within_cap",
    "singleton_partition",
    "trivial_partition",
]

ENUMERATION_CAP = 13


class NonSubmodularError(RuntimeError):
    """An internal consistency check failed in a way only a non-submodular
    oracle can produce (broken minimizer nesting, unattained breakpoint)."""


class GroundSetCapError(ValueError):
    """An operation would enumerate over a ground set above the configured cap."""


def enumeration_cap() -> int:
    """Current cap on ground-set size for exhaustive paths.

    Defaults to 13.  SUBMOD_N_CAP may lower the cap (values above 13 are
    clamped down to 13).  Read on every call, so tests can adjust it.
    """
    raw = os.environ.get("SUBMOD_N_CAP")
    if raw is None:
        return ENUMERATION_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"SUBMOD_N_CAP must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("SUBMOD_N_CAP must be at least 1")
    return min(value, ENUMERATION_CAP)


def require_within_cap(n: int, operation: str) -> None:
    cap = enumeration_cap()
    if n > cap:
        raise GroundSetCapError(
            f"{operation} enumerates over a ground set of {n} elements, "
            f"above the cap of {cap} (cap is min(13, SUBMOD_N_CAP))"
        )


def as_fraction(x) -> Fraction:
    """Coerce an exact number to Fraction.

    Accepts Fraction, int, and 'p/q' strings.  Floats are rejected: they are
    not exact and would silently poison every downstream comparison.
    """
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction, int, or 'p/q' string")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact Fraction")


def default_labels(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple(string.ascii_lowercase[:n])
    return tuple(f"e{i}" for i in range(n))


@dataclass(frozen=True)
class GroundSet:
    """Ground set {0, ..., n-1} with display labels for each element."""

    n: int
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ValueError("a ground set needs an integer size of at least 1")
        labels = tuple(self.labels) if self.labels else default_labels(self.n)
        if len(labels) != self.n:
            raise ValueError(f"expected {self.n} labels, got {len(labels)}")
        if len(set(labels)) != len(labels):
            raise ValueError("element labels must be distinct")
        object.__setattr__(self, "labels", labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def validate_mask(self, mask: int) -> None:
        if not isinstance(mask, int) or isinstance(mask, bool):
            raise TypeError("subset masks must be ints")
        if mask < 0 or mask > self.full_mask:
            raise ValueError(f"mask {mask:#x} is not a subset of a {self.n}-element ground set")

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown element label {label!r}") from None

    def subset(self, labels: Iterable[str]) -> int:
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return mask

    def elements(self, mask: int) -> tuple[str, ...]:
        self.validate_mask(mask)
        return tuple(self.labels[i] for i in range(self.n) if mask >> i & 1)

    def format_subset(self, mask: int) -> str:
        return "{" + ",".join(self.elements(mask)) + "}"

    def format_partition(self, partition: "Partition") -> str:
        return " | ".join(self.format_subset(b) for b in partition.blocks)


class Partition:
    """A partition of {0..n-1} into nonempty blocks, canonically ordered.

    Blocks are stored as masks sorted by ascending minimum element.  The
    constructor validates disjointness and coverage; enumeration code uses
    the trusted classmethod to skip re-validation of blocks it built itself.
    """

    __slots__ = ("n", "blocks")

    def __init__(self, n: int, blocks: Iterable[int]):
        block_tuple = tuple(int(b) for b in blocks)
        if not isinstance(n, int) or n < 1:
            raise ValueError("partition ground size must be a positive int")
        full = (1 << n) - 1
        seen = 0
        for b in block_tuple:
            if b <= 0 or b > full:
                raise ValueError(f"block {b:#x} is not a nonempty subset of {n} elements")
            if seen & b:
                raise ValueError("partition blocks overlap")
            seen |= b
        if seen != full:
            raise ValueError("partition blocks do not cover the ground set")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", tuple(sorted(block_tuple, key=lambda m: m & -m)))

    @classmethod
    def _trusted(cls, n: int, blocks: tuple[int, ...]) -> "Partition":
        # blocks already disjoint, covering, and in canonical order
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", blocks)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[int]:
        return iter(self.blocks)

    def __contains__(self, mask: int) -> bool:
        return mask in self.blocks

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Partition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return hash((self.n, self.blocks))

    def __repr__(self) -> str:
        sets = [sorted(i for i in range(self.n) if b >> i & 1) for b in self.blocks]
        return f"Partition({self.n}, {sets})"

    def block_of(self, element: int) -> int:
        """Mask of the block containing the given element index."""
        if not 0 <= element < self.n:
            raise ValueError(f"element {element} out of range")
        bit = 1 << element
        for b in self.blocks:
            if b & bit:
                return b
        raise AssertionError("unreachable: partition covers the ground set")

    def rgs(self) -> tuple[int, ...]:
        """Restricted-growth encoding; lexicographic order on these tuples is
        the canonical total order on partitions of the same ground set."""
        out = [0] * self.n
        for bi, b in enumerate(self.blocks):
            m = b
            while m:
                low = m & -m
                out[low.bit_length() - 1] = bi
                m ^= low
        return tuple(out)


def trivial_partition(n: int) -> Partition:
    """The one-block partition {V}."""
    return Partition._trusted(n, ((1 << n) - 1,))


def singleton_partition(n: int) -> Partition:
    """The all-singletons partition."""
    return Partition._trusted(n, tuple(1 << i for i in range(n)))


def refines(p: Partition, q: Partition) -> bool:
    """True when every block of p is contained in some block of q."""
    if p.n != q.n:
        raise ValueError("partitions are over different ground sets")
    for b in p.blocks:
        w = q.block_of((b & -b).bit_length() - 1)
        if b & ~w:
            return False
    return True


def refined_part(coarse: Partition, fine: Partition) -> int | None:
    """The unique block of `coarse` that `fine` splits, if there is exactly one.

    Returns the mask of the block S when exactly one block of `coarse` is
    missing from `fine` and every block of `fine` is either a block of
    `coarse` or a proper subset of S.  Returns None otherwise (equal
    partitions, more than one split part, or no refinement at all).
    """
    if coarse.n != fine.n:
        raise ValueError("partitions are over different ground sets")
    coarse_set = set(coarse.blocks)
    fine_set = set(fine.blocks)
    missing = [b for b in coarse.blocks if b not in fine_set]
    if len(missing) != 1:
        return None
    s = missing[0]
    for b in fine.blocks:
        if b in coarse_set:
            continue
        if b & ~s or b == s:
            return None
    return s


_MISSING = object()


class ValueOracle:
    """Memoizing, thread-safe wrapper around an exact set function.

    `fn` maps a subset mask to a Fraction (ints are coerced; floats raise).
    The oracle counts total eval calls and distinct evaluations; the number
    of distinct evaluations can never exceed 2^n.
    """

    def __init__(self, ground_set: GroundSet, fn: Callable[[int], Fraction], name: str = "oracle"):
        self.ground_set = ground_set
        self.name = name
        self._fn = fn
        self._memo: dict[int, Fraction] = {}
        self._lock = threading.Lock()
        self._total_calls = 0
        self._scaled: tuple[int, tuple[int, ...]] | None = None

    @property
    def n(self) -> int:
        return self.ground_set.n

    @property
    def total_calls(self) -> int:
        return self._total_calls

    @property
    def distinct_evaluations(self) -> int:
        return len(self._memo)

    def eval(self, mask: int) -> Fraction:
        self.ground_set.validate_mask(mask)
        with self._lock:
            self._total_calls += 1
            value = self._memo.get(mask, _MISSING)
            if value is not _MISSING:
                return value
            raw = self._fn(mask)
            if isinstance(raw, float):
                raise TypeError(
                    f"oracle {self.name!r} returned a float for mask {mask:#x}; "
                    "set functions must return exact Fractions"
                )
            if isinstance(raw, Fraction):
                value = raw
            elif isinstance(raw, int):
                value = Fraction(raw)
            else:
                raise TypeError(
                    f"oracle {self.name!r} returned {type(raw).__name__}; expected Fraction or int"
                )
            self._memo[mask] = value
            return value

    def full_table(self) -> tuple[Fraction, ...]:
        """Values on every subset, indexed by mask."""
        return tuple(self.eval(m) for m in range(self.ground_set.full_mask + 1))

    def scaled_table(self) -> tuple[int, tuple[int, ...]]:
        """(D, values) with D the lcm of all denominators and values integers,
        so that f(mask) = values[mask] / D.  Cached after the first call."""
        if self._scaled is None:
            table = self.full_table()
            d = reduce(lcm, (v.denominator for v in table), 1)
            scaled = tuple(v.numerator * (d // v.denominator) for v in table)
            self._scaled = (d, scaled)
        return self._scaled


def partition_value(oracle: ValueOracle, partition: Partition) -> Fraction:
    """Sum of oracle values over the blocks of the partition."""
    total = Fraction(0)
    for b in partition.blocks:
        total += oracle.eval(b)
    return total


def g_value(oracle: ValueOracle, partition: Partition, b) -> Fraction:
    """The parametric objective f(P) - b * |P| for one partition."""
    return partition_value(oracle, partition) - as_fraction(b) * len(partition)
