"""Named test instances.

Everything here is tiny and fully determined, so expected values in the
tests can be frozen as exact rationals.
"""

from fractions import Fraction

import subpartition as sp

EPS = Fraction(1, 10**6)
BIG_A = Fraction(10**6)


def mono3(eps=EPS) -> sp.MonoTight3Fn:
    return sp.MonoTight3Fn(eps)


def posi3(eps=EPS) -> sp.PosiTight3Fn:
    return sp.PosiTight3Fn(eps)


def mono_n(n: int, eps=EPS) -> sp.MonoTightNFn:
    return sp.MonoTightNFn(n, eps)


def omega(n: int = 8, a=BIG_A) -> sp.DigraphHyperFn:
    return sp.DigraphHyperFn(n, a)


def weighted_path4() -> sp.GraphCutFn:
    """Path a-b-c-d with weights 3, 1, 2; chain has all four levels."""
    return sp.GraphCutFn(4, [(0, 1, 3), (1, 2, 1), (2, 3, 2)])


def two_edges() -> sp.GraphCutFn:
    """Two disjoint unit edges a-b, c-d; forces one chain repair."""
    return sp.GraphCutFn(4, [(0, 1, 1), (2, 3, 1)])


def unit_path3() -> sp.GraphCutFn:
    return sp.GraphCutFn(3, [(0, 1, 1), (1, 2, 1)])


def coverage_path3() -> sp.GraphCoverageFn:
    return sp.GraphCoverageFn(3, [(0, 1, 1), (1, 2, 1)])


def footnote_matroid(k: int = 4) -> sp.PartitionMatroidRankFn:
    """k base blocks of size 2 laid out so the first k-1 indices come from
    distinct blocks; the worst case for the cheapest-singleton baseline."""
    return sp.PartitionMatroidRankFn(2 * k, [[i, i + k] for i in range(k)])


def two_triangles() -> sp.GraphCutFn:
    """Two disjoint unit triangles on 6 elements; component split is free."""
    edges = [(0, 1, 1), (1, 2, 1), (0, 2, 1), (3, 4, 1), (4, 5, 1), (3, 5, 1)]
    return sp.GraphCutFn(6, edges)


def cardinality(n: int) -> sp.ExplicitTableFn:
    values = [Fraction(m.bit_count()) for m in range(1 << n)]
    return sp.ExplicitTableFn(n, values, "monotone", name="cardinality")


def zero_fn(n: int) -> sp.ExplicitTableFn:
    return sp.ExplicitTableFn(n, [Fraction(0)] * (1 << n), "symmetric", name="zero")
