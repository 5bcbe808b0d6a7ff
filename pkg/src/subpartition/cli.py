"""Command line driver: solve instances, verify sequences, reproduce examples.

Subcommands:

    pps        compute and verify the principal partition sequence
    solve      run the chain algorithm and baselines on an instance
    reproduce  rebuild the named worst-case constructions and check them
    random     write seeded random instance files
    verify     exhaustive function-class report for an instance

Exit codes: 0 success, 1 failed check (a reproduce FAIL, a violated bound,
a non-submodular instance under `verify`), 2 usage, parse, or validation
error, 3 internal invariant failure.

CSV rows keep a fixed column prefix (instance, n, k, algorithm, value, opt,
ratio, bound, bound_ok, oracle_evals, wall_time_s) followed by decimal
companion columns (value_dec, opt_dec, ratio_dec, bound_dec).  Exact values
are serialized as "num/den"; the companions carry 12 significant digits.
With --no-timing the wall_time_s cell is 0, which makes whole files
byte-deterministic.
"""

from __future__ import annotations

import argparse
import csv
import decimal
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .checkers import (
    check_monotone,
    check_posimodular,
    check_submodular,
    check_symmetric,
)
from .core import GroundSetCapError, NonSubmodularError, ValueOracle
from .families import (
    FUNCTION_CLASSES,
    DigraphHyperFn,
    MonoTight3Fn,
    MonoTightNFn,
    PartitionMatroidRankFn,
    PosiTight3Fn,
)
from .instances import InstanceFormatError, generate_batch, load_instance
from .kpartition import (
    approximation_bound,
    cheapest_singleton,
    greedy_splitting,
    pps_k_partition,
    ratio_report,
)
from .partition_opt import brute_force_optimal_k_partition
from .pps import compute_pps, verify_pps

__all__ = ["CSV_COLUMNS", "main", "run"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

CSV_COLUMNS = (
    "instance",
    "n",
    "k",
    "algorithm",
    "value",
    "opt",
    "ratio",
    "bound",
    "bound_ok",
    "oracle_evals",
    "wall_time_s",
    "value_dec",
    "opt_dec",
    "ratio_dec",
    "bound_dec",
)

RANDOM_FAMILIES = (
    "graph_cut",
    "hypergraph_cut",
    "graph_coverage",
    "partition_matroid",
    "graphic_matroid",
)

_DEC = decimal.Context(prec=12)


def fmt_rational(x) -> str:
    """Exact "num/den" form; "" for missing, "inf" for the infinite ratio."""
    if x is None:
        return ""
    if isinstance(x, float):
        return "inf"
    return f"{x.numerator}/{x.denominator}"


def fmt_decimal(x) -> str:
    """12 significant digits; "" for missing, "inf" for the infinite ratio."""
    if x is None:
        return ""
    if isinstance(x, float):
        return "inf"
    return str(_DEC.divide(decimal.Decimal(x.numerator), decimal.Decimal(x.denominator)))


def _fmt_bool(b) -> str:
    if b is None:
        return ""
    return "true" if b else "false"


def _print_table(headers, rows) -> None:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    line = "  ".join(h.ljust(w) for h, w in zip(headers, widths))
    print(line.rstrip())
    for row in rows:
        print("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())


def _blocks_as_indices(partition) -> list[list[int]]:
    return [
        [i for i in range(partition.n) if mask >> i & 1] for mask in partition
    ]


# ---------------------------------------------------------------------------
# pps

def cmd_pps(args) -> int:
    fam = load_instance(args.instance, validate=not args.no_validate)
    oracle = fam.oracle()
    sequence = compute_pps(oracle)
    report = verify_pps(oracle, sequence, interior_samples=args.interior_samples)
    gs = oracle.ground_set

    if args.json:
        doc = {
            "breakpoints": [[b.numerator, b.denominator] for b in sequence.breakpoints],
            "labels": list(gs.labels),
            "minimize_calls": sequence.minimize_calls,
            "n": gs.n,
            "partitions": [_blocks_as_indices(p) for p in sequence.partitions],
            "verification": {
                "ok": report.ok,
                "endpoints_ok": report.endpoints_ok,
                "refinement_ok": report.refinement_ok,
                "breakpoints_nondecreasing_ok": report.breakpoints_nondecreasing_ok,
                "breakpoints_attained_ok": report.breakpoints_attained_ok,
                "segments_optimal_ok": report.segments_optimal_ok,
                "formula_ok": report.formula_ok,
                "samples_checked": report.samples_checked,
                "failures": list(report.failures),
            },
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(f"instance: {fam.name} (n={gs.n}, class {fam.function_class})")
        print(
            f"principal partition sequence: {len(sequence)} partitions, "
            f"{sequence.minimize_calls} parametric minimizations"
        )
        for i, part in enumerate(sequence.partitions):
            print(f"  P{i + 1} ({len(part)} blocks): {gs.format_partition(part)}")
            if i < len(sequence.breakpoints):
                print(f"      breakpoint {sequence.breakpoints[i]}")
        checks = [
            ("endpoints", report.endpoints_ok),
            ("stepwise refinement", report.refinement_ok),
            ("nondecreasing breakpoints", report.breakpoints_nondecreasing_ok),
            ("breakpoints attained", report.breakpoints_attained_ok),
            ("segment optimality", report.segments_optimal_ok),
            ("breakpoint formula", report.formula_ok),
        ]
        for label, ok in checks:
            print(f"  {label:<26} {'PASS' if ok else 'FAIL'}")
        print(f"verified at {report.samples_checked} parameter samples")
        for failure in report.failures:
            print(f"  failure: {failure}")
        print(f"verification: {'PASS' if report.ok else 'FAIL'}")

    return EXIT_OK if report.ok else EXIT_INTERNAL


# ---------------------------------------------------------------------------
# solve

def _solve_one(oracle: ValueOracle, algorithm: str, k: int):
    if algorithm == "pps":
        run = pps_k_partition(oracle, k)
        return run.partition, run.value
    if algorithm == "greedy":
        res = greedy_splitting(oracle, k)
        return res.partition, res.value
    if algorithm == "singleton":
        res = cheapest_singleton(oracle, k)
        return res.partition, res.value
    raise ValueError(f"unknown algorithm {algorithm!r}")


def _row_bound(algorithm: str, function_class: str, n: int, k: int):
    """Proved guarantee for this algorithm on this class, if any."""
    if algorithm == "pps":
        return approximation_bound(function_class, n)
    if algorithm == "singleton" and function_class == "monotone":
        return 2 - Fraction(1, k)
    return None


def cmd_solve(args) -> int:
    fam = load_instance(args.instance, validate=not args.no_validate)
    n = fam.n
    k = args.k
    if not 1 <= k <= n:
        print(f"error: k={k} out of range for n={n}", file=sys.stderr)
        return EXIT_USAGE
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    known = ("pps", "greedy", "singleton")
    for a in algorithms:
        if a not in known:
            print(
                f"error: unknown algorithm {a!r} (choose from {', '.join(known)})",
                file=sys.stderr,
            )
            return EXIT_USAGE
    function_class = args.function_class or fam.function_class
    instance_id = Path(args.instance).stem

    opt_value = None
    if args.brute_force:
        _, opt_value = brute_force_optimal_k_partition(fam.oracle(), k)

    gs = fam.ground_set()
    rows = []
    printed = []
    any_violation = False
    for algorithm in algorithms:
        oracle = fam.oracle()
        started = time.perf_counter()
        partition, value = _solve_one(oracle, algorithm, k)
        elapsed = time.perf_counter() - started
        evals = oracle.distinct_evaluations

        ratio = bound = bound_ok = None
        if opt_value is not None:
            if value == 0 and opt_value == 0:
                ratio = Fraction(1)
            elif opt_value == 0:
                ratio = float("inf")
            else:
                ratio = value / opt_value
            bound = _row_bound(algorithm, function_class, n, k)
            if bound is not None:
                bound_ok = not isinstance(ratio, float) and ratio <= bound
                if not bound_ok:
                    any_violation = True

        wall = "0" if args.no_timing else f"{elapsed:.6f}"
        rows.append(
            {
                "instance": instance_id,
                "n": str(n),
                "k": str(k),
                "algorithm": algorithm,
                "value": fmt_rational(value),
                "opt": fmt_rational(opt_value),
                "ratio": fmt_rational(ratio),
                "bound": fmt_rational(bound),
                "bound_ok": _fmt_bool(bound_ok),
                "oracle_evals": str(evals),
                "wall_time_s": wall,
                "value_dec": fmt_decimal(value),
                "opt_dec": fmt_decimal(opt_value),
                "ratio_dec": fmt_decimal(ratio),
                "bound_dec": fmt_decimal(bound),
            }
        )
        printed.append((algorithm, partition, value, ratio, bound, bound_ok))

    print(f"instance: {instance_id} (n={n}, k={k}, class {function_class})")
    if opt_value is not None:
        print(f"optimal value: {opt_value} ({fmt_decimal(opt_value)})")
    table = []
    for algorithm, partition, value, ratio, bound, bound_ok in printed:
        table.append(
            (
                algorithm,
                fmt_decimal(value),
                fmt_decimal(ratio) or "-",
                fmt_decimal(bound) or "-",
                _fmt_bool(bound_ok) or "-",
                gs.format_partition(partition),
            )
        )
    _print_table(("algorithm", "value", "ratio", "bound", "bound_ok", "partition"), table)

    if args.csv:
        with open(args.csv, "w", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            for row in rows:
                writer.writerow([row[c] for c in CSV_COLUMNS])
        print(f"wrote {args.csv}")

    return EXIT_FAIL if any_violation else EXIT_OK


# ---------------------------------------------------------------------------
# reproduce

def _case_mono3(args):
    fam = MonoTight3Fn(args.eps)
    e = fam.eps
    rr = ratio_report(fam.oracle(), 2, "monotone")
    tol = Fraction(1, 10**5)
    return [
        (
            "mono3",
            "chain 2-partition value",
            fmt_rational(3 + 2 * e),
            fmt_rational(rr.algorithm_value),
            rr.algorithm_value == 3 + 2 * e,
        ),
        (
            "mono3",
            "optimal 2-partition value",
            fmt_rational(Fraction(5, 2) + 2 * e),
            fmt_rational(rr.optimal_value),
            rr.optimal_value == Fraction(5, 2) + 2 * e,
        ),
        (
            "mono3",
            "ratio within 1e-5 of 6/5",
            fmt_decimal(Fraction(6, 5)),
            fmt_decimal(rr.ratio),
            abs(rr.ratio - Fraction(6, 5)) <= tol,
        ),
    ]


def _case_mono_n(args):
    n = 9 if args.n is None else args.n
    k = (n + 1) // 2
    fam = MonoTightNFn(n, args.eps)
    rr = ratio_report(fam.oracle(), k, "monotone")
    comparison = Fraction(3 * n + 3, 4) + Fraction(n + 1, 2) * fam.eps
    lower = Fraction(4, 3) - Fraction(4, 3 * n + 3) - Fraction(1, 10**5)
    case = f"monoN(n={n})"
    return [
        (
            case,
            f"chain {k}-partition value is n",
            fmt_rational(Fraction(n)),
            fmt_rational(rr.algorithm_value),
            rr.algorithm_value == n,
        ),
        (
            case,
            "optimum at most the split-one-deep partition",
            "<= " + fmt_rational(comparison),
            fmt_rational(rr.optimal_value),
            rr.optimal_value <= comparison,
        ),
        (
            case,
            "ratio >= 4/3 - 4/(3n+3) - 1e-5",
            ">= " + fmt_decimal(lower),
            fmt_decimal(rr.ratio),
            rr.ratio >= lower,
        ),
        (
            case,
            "ratio within the class bound 4/3 - 4/(9n+3)",
            "<= " + fmt_decimal(rr.bound),
            fmt_decimal(rr.ratio),
            bool(rr.bound_ok),
        ),
    ]


def _case_posi3(args):
    fam = PosiTight3Fn(args.eps)
    e = fam.eps
    rr = ratio_report(fam.oracle(), 2, "posimodular")
    tol = Fraction(1, 10**5)
    return [
        (
            "posi3",
            "chain 2-partition value",
            "3/1",
            fmt_rational(rr.algorithm_value),
            rr.algorithm_value == 3,
        ),
        (
            "posi3",
            "optimal 2-partition value",
            fmt_rational(2 + 2 * e),
            fmt_rational(rr.optimal_value),
            rr.optimal_value == 2 + 2 * e,
        ),
        (
            "posi3",
            "ratio within 1e-5 of 3/2",
            fmt_decimal(Fraction(3, 2)),
            fmt_decimal(rr.ratio),
            abs(rr.ratio - Fraction(3, 2)) <= tol,
        ),
    ]


def _case_omega(args):
    n = 8 if args.n is None else args.n
    k = 3 if args.k is None else args.k
    fam = DigraphHyperFn(n, args.a)
    a = fam.a
    if not 2 <= k <= n:
        raise ValueError(f"omega case needs 2 <= k <= n, got k={k}, n={n}")
    rr = ratio_report(fam.oracle(), k, "general")
    expected_alg = (n - 1) * a if k == 2 else (n - 1) * a + k - 1
    comparison = (k - 1) * (1 + a) + 1
    case = f"omega(n={n},k={k})"
    return [
        (
            case,
            "chain jumps from trivial to singletons",
            "2 partitions",
            f"{len(rr.run.sequence)} partitions",
            len(rr.run.sequence) == 2,
        ),
        (
            case,
            "chain partition isolates the arc tail",
            "true",
            _fmt_bool(1 in rr.run.partition),
            1 in rr.run.partition,
        ),
        (
            case,
            "chain value",
            fmt_rational(expected_alg),
            fmt_rational(rr.algorithm_value),
            rr.algorithm_value == expected_alg,
        ),
        (
            case,
            "optimum at most the tail-grouped partition",
            "<= " + fmt_rational(comparison),
            fmt_rational(rr.optimal_value),
            rr.optimal_value <= comparison,
        ),
        (
            case,
            "ratio at least their quotient",
            ">= " + fmt_decimal(expected_alg / comparison),
            fmt_decimal(rr.ratio),
            rr.ratio >= expected_alg / comparison,
        ),
    ]


def _case_footnote(args):
    k = 4 if args.k is None else args.k
    if k < 2:
        raise ValueError("matroid-footnote needs k >= 2")
    n = 2 * k
    fam = PartitionMatroidRankFn(n, [[i, i + k] for i in range(k)])
    oracle = fam.oracle()
    base = cheapest_singleton(oracle, k)
    _, opt_value = brute_force_optimal_k_partition(oracle, k)
    case = f"matroid-footnote(k={k})"
    return [
        (
            case,
            "cheapest-singleton value is 2k-1",
            fmt_rational(Fraction(2 * k - 1)),
            fmt_rational(base.value),
            base.value == 2 * k - 1,
        ),
        (
            case,
            "optimal value is k",
            fmt_rational(Fraction(k)),
            fmt_rational(opt_value),
            opt_value == k,
        ),
        (
            case,
            "singleton guarantee 2 - 1/k holds",
            "<= " + fmt_rational((2 - Fraction(1, k)) * opt_value),
            fmt_rational(base.value),
            base.value <= (2 - Fraction(1, k)) * opt_value,
        ),
    ]


REPRODUCE_CASES = {
    "mono3": _case_mono3,
    "monoN": _case_mono_n,
    "posi3": _case_posi3,
    "omega": _case_omega,
    "matroid-footnote": _case_footnote,
}


def cmd_reproduce(args) -> int:
    if args.case == "all":
        cases = list(REPRODUCE_CASES)
    else:
        cases = [args.case]
    rows = []
    for name in cases:
        rows.extend(REPRODUCE_CASES[name](args))
    table = [
        (case, check, expected, observed, "PASS" if ok else "FAIL")
        for case, check, expected, observed, ok in rows
    ]
    _print_table(("case", "check", "expected", "observed", "status"), table)
    failed = sum(1 for row in rows if not row[4])
    if failed:
        print(f"reproduce: FAIL ({failed} of {len(rows)} checks failed)")
        return EXIT_FAIL
    print(f"reproduce: PASS ({len(rows)} checks)")
    return EXIT_OK


# ---------------------------------------------------------------------------
# random / verify

def cmd_random(args) -> int:
    if args.count < 1:
        print("error: --count must be positive", file=sys.stderr)
        return EXIT_USAGE
    paths = generate_batch(args.family, args.n, args.seed, args.count, args.out_dir)
    for path in paths:
        print(path)
    return EXIT_OK


def cmd_verify(args) -> int:
    fam = load_instance(args.instance, validate=False)
    oracle = fam.oracle()
    gs = oracle.ground_set
    results = {
        "submodular": check_submodular(oracle),
        "monotone": check_monotone(oracle),
        "symmetric": check_symmetric(oracle),
        "posimodular": check_posimodular(oracle),
    }
    print(f"instance: {fam.name} (n={gs.n}, declared class {fam.function_class})")
    for name, res in results.items():
        status = "PASS" if res.ok else "FAIL"
        line = f"  {name:<12} {status}"
        if not res.ok:
            line += f"  [{res.describe(gs)}]"
        print(line)

    required = {"monotone", "symmetric", "posimodular"} & {fam.function_class}
    declared_ok = all(results[name].ok for name in required)
    failed = not results["submodular"].ok or not declared_ok
    if not declared_ok:
        print(f"  declared class {fam.function_class!r} not confirmed")
    print(f"verify: {'FAIL' if failed else 'PASS'}")
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------------------
# parser and entry points

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subpartition",
        description="Submodular k-partition via the principal partition sequence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "pps", help="compute and verify the principal partition sequence"
    )
    p.add_argument("instance", help="instance JSON file")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument(
        "--interior-samples",
        type=int,
        default=3,
        metavar="COUNT",
        help="parameter samples strictly inside each optimality segment (default 3)",
    )
    p.add_argument(
        "--no-validate",
        action="store_true",
        help="skip the exhaustive submodularity check on load",
    )
    p.set_defaults(func=cmd_pps)

    p = sub.add_parser("solve", help="run the chain algorithm and baselines")
    p.add_argument("instance", help="instance JSON file")
    p.add_argument("--k", type=int, required=True, help="number of blocks")
    p.add_argument(
        "--algorithms",
        default="pps,greedy,singleton",
        help="comma-separated subset of pps,greedy,singleton",
    )
    p.add_argument(
        "--brute-force",
        action="store_true",
        help="also compute the exact optimum and fill opt/ratio/bound columns",
    )
    p.add_argument("--csv", metavar="PATH", help="write report rows to this CSV file")
    p.add_argument(
        "--function-class",
        choices=FUNCTION_CLASSES,
        default=None,
        help="override the declared class used for the bound column",
    )
    p.add_argument("--no-validate", action="store_true")
    p.add_argument(
        "--no-timing",
        action="store_true",
        help="write 0 in wall_time_s so output is byte-deterministic",
    )
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser(
        "reproduce", help="rebuild the named worst-case constructions and check them"
    )
    p.add_argument(
        "--case",
        choices=("all",) + tuple(REPRODUCE_CASES),
        default="all",
    )
    p.add_argument("--n", type=int, default=None, help="ground-set size override")
    p.add_argument(
        "--eps",
        type=Fraction,
        default=Fraction(1, 10**6),
        help="epsilon for the tight tables (rational, e.g. 1/1000000)",
    )
    p.add_argument(
        "--a",
        type=Fraction,
        default=Fraction(10**6),
        help="arc weight for the gap construction (rational)",
    )
    p.add_argument("--k", type=int, default=None, help="block count override")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("random", help="write seeded random instance files")
    p.add_argument("--family", required=True, choices=RANDOM_FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser(
        "verify", help="exhaustive submodular/monotone/symmetric/posimodular report"
    )
    p.add_argument("instance", help="instance JSON file")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (InstanceFormatError, GroundSetCapError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NonSubmodularError, AssertionError) as exc:
        print(f"internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def run() -> None:
    sys.exit(main())
