"""Exhaustive property checkers for value oracles at desk scale.

Each checker scans the whole value table (or all subset pairs, 4^n of them),
so they are meant for ground sets within the enumeration cap.  A failed
check returns the first counterexample in the documented scan order, which
makes failures reproducible and comparable across runs:

* submodular / posimodular: pairs (A, B) with A ascending, then B ascending,
* monotone: sets S ascending, then added elements ascending,
* symmetric: sets S ascending (each violation is met first at min(S, V-S)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import GroundSet, ValueOracle, require_within_cap

__all__ = [
    "CheckResult",
    "check_monotone",
    "check_posimodular",
    "check_submodular",
    "check_symmetric",
]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one property check.

    On failure, `witness` holds the pair of subset masks of the first
    counterexample and lhs/rhs the two sides of the violated inequality
    (for symmetry, the two values that should have been equal).
    """

    property_name: str
    ok: bool
    witness: tuple[int, int] | None = None
    lhs: Fraction | None = None
    rhs: Fraction | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self, ground_set: GroundSet | None = None) -> str:
        if self.ok:
            return f"{self.property_name}: ok"
        a, b = self.witness
        if ground_set is not None:
            sa, sb = ground_set.format_subset(a), ground_set.format_subset(b)
        else:
            sa, sb = f"{a:#b}", f"{b:#b}"
        return (
            f"{self.property_name}: violated at A={sa}, B={sb} "
            f"(lhs={self.lhs}, rhs={self.rhs})"
        )


def _descale(d, x):
    return Fraction(x, d)


def check_submodular(oracle: ValueOracle) -> CheckResult:
    """f(A) + f(B) >= f(A | B) + f(A & B) for all subset pairs."""
    require_within_cap(oracle.n, "check_submodular")
    d, tab = oracle.scaled_table()
    full = oracle.ground_set.full_mask
    for a in range(full + 1):
        fa = tab[a]
        for b in range(full + 1):
            lhs = fa + tab[b]
            rhs = tab[a | b] + tab[a & b]
            if lhs < rhs:
                return CheckResult(
                    "submodular", False, (a, b), _descale(d, lhs), _descale(d, rhs)
                )
    return CheckResult("submodular", True)


def check_monotone(oracle: ValueOracle) -> CheckResult:
    """f(S) <= f(S + {v}) for all S and v outside S (implies f(A) <= f(B)
    for every A subset of B)."""
    require_within_cap(oracle.n, "check_monotone")
    d, tab = oracle.scaled_table()
    n = oracle.n
    full = oracle.ground_set.full_mask
    for s in range(full + 1):
        fs = tab[s]
        for v in range(n):
            bit = 1 << v
            if s & bit:
                continue
            t = s | bit
            if fs > tab[t]:
                return CheckResult(
                    "monotone", False, (s, t), _descale(d, fs), _descale(d, tab[t])
                )
    return CheckResult("monotone", True)


def check_symmetric(oracle: ValueOracle) -> CheckResult:
    """f(S) = f(V - S) for all S."""
    require_within_cap(oracle.n, "check_symmetric")
    d, tab = oracle.scaled_table()
    full = oracle.ground_set.full_mask
    for s in range(full + 1):
        c = full ^ s
        if tab[s] != tab[c]:
            return CheckResult(
                "symmetric", False, (s, c), _descale(d, tab[s]), _descale(d, tab[c])
            )
    return CheckResult("symmetric", True)


def check_posimodular(oracle: ValueOracle) -> CheckResult:
    """f(A) + f(B) >= f(A - B) + f(B - A) for all subset pairs."""
    require_within_cap(oracle.n, "check_posimodular")
    d, tab = oracle.scaled_table()
    full = oracle.ground_set.full_mask
    for a in range(full + 1):
        fa = tab[a]
        for b in range(full + 1):
            lhs = fa + tab[b]
            rhs = tab[a & ~b] + tab[b & ~a]
            if lhs < rhs:
                return CheckResult(
                    "posimodular", False, (a, b), _descale(d, lhs), _descale(d, rhs)
                )
    return CheckResult("posimodular", True)
