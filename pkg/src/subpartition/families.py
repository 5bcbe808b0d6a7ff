"""Submodular set-function families: graph-style instances and tight constructions.

Each family is a small object with a ground-set size, display labels, a
declared function class, and an exact `value(mask)` method; `oracle()` wraps
it in a memoizing ValueOracle.  The declared class is what the approximation
bounds key on:

* "monotone":     f(A) <= f(B) for A subset of B (coverage, matroid ranks),
* "symmetric":    f(A) = f(V - A) (graph and hypergraph cuts),
* "posimodular":  f(A) + f(B) >= f(A - B) + f(B - A),
* "general":      submodular with none of the above promised.

Monotone and symmetric functions are both posimodular, as are nonnegative
combinations of them.  The declarations are verified exhaustively by the
checkers in tests; the tight families at the bottom of this module are the
instances that meet their class bounds with equality in the limit.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .core import GroundSet, ValueOracle, as_fraction, default_labels

__all__ = [
    "FUNCTION_CLASSES",
    "SetFunctionFamily",
    "GraphCutFn",
    "HypergraphCutFn",
    "GraphCoverageFn",
    "PartitionMatroidRankFn",
    "GraphicMatroidRankFn",
    "ExplicitTableFn",
    "CombinationFn",
    "MonoTight3Fn",
    "MonoTightNFn",
    "PosiTight3Fn",
    "DigraphHyperFn",
]

FUNCTION_CLASSES = ("monotone", "symmetric", "posimodular", "general")


class SetFunctionFamily:
    """Base class carrying the ground set and oracle plumbing."""

    name = "family"
    function_class = "general"

    def __init__(self, n: int, labels: Sequence[str] | None = None):
        if not isinstance(n, int) or n < 1:
            raise ValueError("family ground-set size must be a positive int")
        self.n = n
        self.labels = tuple(labels) if labels else default_labels(n)
        if len(self.labels) != n:
            raise ValueError(f"expected {n} labels, got {len(self.labels)}")

    def ground_set(self) -> GroundSet:
        return GroundSet(self.n, self.labels)

    def value(self, mask: int) -> Fraction:
        raise NotImplementedError

    def oracle(self) -> ValueOracle:
        return ValueOracle(self.ground_set(), self.value, name=self.name)


def _check_endpoint(i, n, what):
    if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < n:
        raise ValueError(f"{what} index {i!r} out of range for {n} elements")


def _nonneg_weight(w):
    w = as_fraction(w)
    if w < 0:
        raise ValueError("weights must be nonnegative")
    return w


class GraphCutFn(SetFunctionFamily):
    """Weighted graph cut: f(S) = total weight of edges with one endpoint in S.

    Edges are (u, v, weight) with u != v; parallel edges add up.  Symmetric.
    """

    name = "graph_cut"
    function_class = "symmetric"

    def __init__(self, n, edges, labels=None):
        super().__init__(n, labels)
        cleaned = []
        for u, v, w in edges:
            _check_endpoint(u, n, "edge endpoint")
            _check_endpoint(v, n, "edge endpoint")
            if u == v:
                raise ValueError("graph cut edges must join distinct elements")
            cleaned.append((u, v, _nonneg_weight(w)))
        self.edges = tuple(cleaned)

    def value(self, mask: int) -> Fraction:
        total = Fraction(0)
        for u, v, w in self.edges:
            if (mask >> u ^ mask >> v) & 1:
                total += w
        return total


class HypergraphCutFn(SetFunctionFamily):
    """Weighted hypergraph cut: f(S) = total weight of hyperedges split by S.

    A hyperedge (members, weight) is split when S contains some but not all
    of its members.  Symmetric.
    """

    name = "hypergraph_cut"
    function_class = "symmetric"

    def __init__(self, n, hyperedges, labels=None):
        super().__init__(n, labels)
        cleaned = []
        for members, w in hyperedges:
            emask = 0
            for m in members:
                _check_endpoint(m, n, "hyperedge member")
                emask |= 1 << m
            if emask.bit_count() < 2:
                raise ValueError("hyperedges need at least two distinct members")
            cleaned.append((tuple(sorted(set(members))), emask, _nonneg_weight(w)))
        self.hyperedges = tuple(cleaned)

    def value(self, mask: int) -> Fraction:
        total = Fraction(0)
        for _, emask, w in self.hyperedges:
            inside = mask & emask
            if inside and inside != emask:
                total += w
        return total


class GraphCoverageFn(SetFunctionFamily):
    """Edge coverage: f(S) = total weight of edges with at least one endpoint
    in S, i.e. w(E[S]) + w(delta(S)).  Monotone."""

    name = "graph_coverage"
    function_class = "monotone"

    def __init__(self, n, edges, labels=None):
        super().__init__(n, labels)
        cleaned = []
        for u, v, w in edges:
            _check_endpoint(u, n, "edge endpoint")
            _check_endpoint(v, n, "edge endpoint")
            if u == v:
                raise ValueError("coverage edges must join distinct elements")
            cleaned.append((u, v, _nonneg_weight(w)))
        self.edges = tuple(cleaned)

    def value(self, mask: int) -> Fraction:
        total = Fraction(0)
        for u, v, w in self.edges:
            if (mask >> u | mask >> v) & 1:
                total += w
        return total


class PartitionMatroidRankFn(SetFunctionFamily):
    """Partition matroid rank: the ground set is split into base blocks and
    f(S) counts how many base blocks S intersects.  Monotone."""

    name = "partition_matroid"
    function_class = "monotone"

    def __init__(self, n, blocks, labels=None):
        super().__init__(n, labels)
        seen = 0
        masks = []
        for block in blocks:
            bmask = 0
            for e in block:
                _check_endpoint(e, n, "base block element")
                bmask |= 1 << e
            if bmask == 0:
                raise ValueError("base blocks must be nonempty")
            if seen & bmask:
                raise ValueError("base blocks overlap")
            seen |= bmask
            masks.append(bmask)
        if seen != (1 << n) - 1:
            raise ValueError("base blocks must cover the ground set")
        self.block_masks = tuple(masks)
        self.blocks = tuple(tuple(sorted(i for i in range(n) if m >> i & 1)) for m in masks)

    def value(self, mask: int) -> Fraction:
        return Fraction(sum(1 for bm in self.block_masks if mask & bm))


class GraphicMatroidRankFn(SetFunctionFamily):
    """Graphic matroid rank: elements are the edges of a multigraph and
    f(S) = (number of vertices) - (components of the subgraph with edge set S).
    Monotone."""

    name = "graphic_matroid"
    function_class = "monotone"

    def __init__(self, num_vertices, edges, labels=None):
        edges = tuple((int(u), int(v)) for u, v in edges)
        if not edges:
            raise ValueError("a graphic matroid needs at least one edge")
        if not isinstance(num_vertices, int) or num_vertices < 1:
            raise ValueError("num_vertices must be a positive int")
        for u, v in edges:
            _check_endpoint(u, num_vertices, "vertex")
            _check_endpoint(v, num_vertices, "vertex")
        super().__init__(len(edges), labels)
        self.num_vertices = num_vertices
        self.edges = edges

    def value(self, mask: int) -> Fraction:
        parent = list(range(self.num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        rank = 0
        for i, (u, v) in enumerate(self.edges):
            if mask >> i & 1:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    rank += 1
        return Fraction(rank)


class ExplicitTableFn(SetFunctionFamily):
    """Set function given by its full value table, indexed by subset mask."""

    name = "explicit_table"

    def __init__(self, n, values, function_class="general", labels=None, name=None):
        super().__init__(n, labels)
        values = tuple(as_fraction(v) for v in values)
        if len(values) != 1 << n:
            raise ValueError(f"expected {1 << n} table entries, got {len(values)}")
        if function_class not in FUNCTION_CLASSES:
            raise ValueError(f"unknown function class {function_class!r}")
        self.table = values
        self.function_class = function_class
        if name:
            self.name = name

    def value(self, mask: int) -> Fraction:
        return self.table[mask]


class CombinationFn(SetFunctionFamily):
    """Nonnegative combination sum_i c_i * f_i of families on one ground set.

    The caller declares the class of the result; a nonnegative combination
    of monotone and symmetric parts is posimodular.
    """

    name = "combination"

    def __init__(self, parts, coefficients, function_class, name=None):
        parts = tuple(parts)
        if not parts:
            raise ValueError("a combination needs at least one part")
        n = parts[0].n
        for p in parts[1:]:
            if p.n != n:
                raise ValueError("combination parts live on different ground sets")
        super().__init__(n, parts[0].labels)
        coefficients = tuple(_nonneg_weight(c) for c in coefficients)
        if len(coefficients) != len(parts):
            raise ValueError("one coefficient per part, please")
        if function_class not in FUNCTION_CLASSES:
            raise ValueError(f"unknown function class {function_class!r}")
        self.parts = parts
        self.coefficients = coefficients
        self.function_class = function_class
        if name:
            self.name = name

    def value(self, mask: int) -> Fraction:
        total = Fraction(0)
        for c, p in zip(self.coefficients, self.parts):
            total += c * p.value(mask)
        return total


def _eps_in_window(eps):
    eps = as_fraction(eps)
    if not 0 < eps <= Fraction(1, 2):
        raise ValueError("eps must satisfy 0 < eps <= 1/2")
    return eps


class MonoTight3Fn(SetFunctionFamily):
    """Monotone 3-element instance meeting the 6/5 class bound in the eps -> 0
    limit.  Values on {a, b, c}:

        {}: 0          {a}: 1         {b}: 1+e      {a,b}: 3/2+e
        {c}: 1+e       {a,c}: 3/2+e   {b,c}: 2+2e   {a,b,c}: 2+2e

    Its principal sequence is ({V}, singletons) with breakpoint 1/2; the
    2-partition returned from it costs 3+2e against an optimum of 5/2+2e.
    """

    name = "mono_tight3"
    function_class = "monotone"

    def __init__(self, eps=Fraction(1, 10**6)):
        super().__init__(3, ("a", "b", "c"))
        e = _eps_in_window(eps)
        self.eps = e
        self.table = (
            Fraction(0),      # {}
            Fraction(1),      # {a}
            1 + e,            # {b}
            Fraction(3, 2) + e,  # {a,b}
            1 + e,            # {c}
            Fraction(3, 2) + e,  # {a,c}
            2 + 2 * e,        # {b,c}
            2 + 2 * e,        # {a,b,c}
        )

    def value(self, mask: int) -> Fraction:
        return self.table[mask]


class MonoTightNFn(SetFunctionFamily):
    """Monotone family on odd n >= 5 approaching the 4/3 - 4/(3n+3) ratio.

    The ground set splits into U (the first (n-1)/2 elements) and D (the
    remaining (n+1)/2).  With g(T) = 1/2 + |T|/2 for nonempty T, g({}) = 0:

        h(S) = g(S & U) + (1 + eps) * |S & D|
        f(S) = min(h(S), (n+1)/2)

    Its principal sequence is ({V}, singletons); for k = (n+1)/2 the returned
    partition ({u} for u in U, D as one block) costs exactly n, while the
    comparison partition (U + one D element, remaining D singletons) costs
    (3n+3)/4 + (n+1)eps/2.
    """

    name = "mono_tight_n"
    function_class = "monotone"

    def __init__(self, n, eps=Fraction(1, 10**6)):
        if not isinstance(n, int) or n < 5 or n % 2 == 0:
            raise ValueError("this family needs odd n >= 5")
        super().__init__(n, tuple(f"v{i}" for i in range(1, n + 1)))
        self.eps = _eps_in_window(eps)
        self.u_mask = (1 << ((n - 1) // 2)) - 1
        self.d_mask = ((1 << n) - 1) ^ self.u_mask
        self.cap_value = Fraction(n + 1, 2)

    def unclamped(self, mask: int) -> Fraction:
        su = mask & self.u_mask
        g = Fraction(0) if su == 0 else Fraction(1, 2) + Fraction(su.bit_count(), 2)
        return g + (1 + self.eps) * (mask & self.d_mask).bit_count()

    def value(self, mask: int) -> Fraction:
        return min(self.unclamped(mask), self.cap_value)


class PosiTight3Fn(SetFunctionFamily):
    """Posimodular (not monotone, not symmetric) 3-element instance meeting
    the 2 - 2/(n+1) = 3/2 bound in the eps -> 0 limit.  Values on {a, b, c}:

        {}: 0        {a}: 1       {b}: 1      {a,b}: 1+e
        {c}: 1+e     {a,c}: 2     {b,c}: 2    {a,b,c}: 1+e

    Its principal sequence is ({V}, singletons) with breakpoint 1; the
    2-partition returned from it costs 3 against an optimum of 2+2e.
    """

    name = "posi_tight3"
    function_class = "posimodular"

    def __init__(self, eps=Fraction(1, 10**6)):
        super().__init__(3, ("a", "b", "c"))
        e = _eps_in_window(eps)
        self.eps = e
        self.table = (
            Fraction(0),  # {}
            Fraction(1),  # {a}
            Fraction(1),  # {b}
            1 + e,        # {a,b}
            1 + e,        # {c}
            Fraction(2),  # {a,c}
            Fraction(2),  # {b,c}
            1 + e,        # {a,b,c}
        )

    def value(self, mask: int) -> Fraction:
        return self.table[mask]


class DigraphHyperFn(SetFunctionFamily):
    """General submodular instance forcing an Omega(n/k) gap.

    On {v0, ..., v_{n-1}}: arcs v0 -> vi of weight a for every i >= 1, plus
    one unit hyperedge over {v1, ..., v_{n-1}}.  f(S) charges a per arc whose
    head lies in S and tail outside, plus 1 if the hyperedge is split by S.
    Submodular but neither monotone, symmetric, nor posimodular (n >= 4).

    Its principal sequence is ({V}, singletons).  For k blocks the returned
    partition keeps {v0} as a block and costs at least a(n-1), while grouping
    v0 with the bulk achieves (1+a)(k-1) + 1.
    """

    name = "digraph_hyper"
    function_class = "general"

    def __init__(self, n, a=10**6):
        if not isinstance(n, int) or n < 3:
            raise ValueError("this family needs n >= 3")
        super().__init__(n, tuple(f"v{i}" for i in range(n)))
        a = as_fraction(a)
        if a < 1:
            raise ValueError("arc weight a must be at least 1")
        self.a = a
        self.rest_mask = ((1 << n) - 1) ^ 1  # {v1, ..., v_{n-1}}

    def value(self, mask: int) -> Fraction:
        total = Fraction(0)
        if not mask & 1:
            # tail v0 outside: every head inside pays its arc
            total += self.a * (mask & self.rest_mask).bit_count()
        inside = mask & self.rest_mask
        if inside and inside != self.rest_mask:
            total += 1
        return total
