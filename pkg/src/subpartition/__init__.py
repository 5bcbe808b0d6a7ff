"""Submodular k-partition via the principal partition sequence.

Exact-arithmetic implementation of the parametric-chain approximation
algorithm for minimum submodular k-partition, with the function families,
baselines, brute-force oracles, and worst-case constructions needed to
check its guarantees at small n.
"""

from .core import (
    ENUMERATION_CAP,
    GroundSet,
    GroundSetCapError,
    NonSubmodularError,
    Partition,
    ValueOracle,
    as_fraction,
    enumeration_cap,
    g_value,
    partition_value,
    refined_part,
    refines,
    singleton_partition,
    trivial_partition,
)
from .families import (
    FUNCTION_CLASSES,
    CombinationFn,
    DigraphHyperFn,
    ExplicitTableFn,
    GraphCoverageFn,
    GraphCutFn,
    GraphicMatroidRankFn,
    HypergraphCutFn,
    MonoTight3Fn,
    MonoTightNFn,
    PartitionMatroidRankFn,
    PosiTight3Fn,
    SetFunctionFamily,
)
from .checkers import (
    CheckResult,
    check_monotone,
    check_posimodular,
    check_submodular,
    check_symmetric,
)
from .partition_opt import (
    GMinResult,
    brute_force_all_k,
    brute_force_optimal_k_partition,
    enumerate_partitions,
    minimize_g,
)
from .pps import (
    PpsVerification,
    PrincipalSequence,
    check_two_level_condition,
    compute_pps,
    repair_chain,
    verify_pps,
)
from .kpartition import (
    BaselineResult,
    ChainBoundsReport,
    ExactHitReport,
    KPartitionRun,
    RatioReport,
    approximation_bound,
    check_chain_lower_bounds,
    check_exact_hit_optimality,
    cheapest_singleton,
    greedy_splitting,
    pps_k_partition,
    ratio_report,
)
from .instances import (
    GENERATOR_FAMILIES,
    InstanceFormatError,
    generate_batch,
    instance_from_json,
    instance_to_json,
    load_instance,
    random_instance,
    save_instance,
)

__version__ = "0.1.0"

__all__ = [
    "ENUMERATION_CAP",
    "FUNCTION_CLASSES",
    "GENERATOR_FAMILIES",
    "BaselineResult",
    "ChainBoundsReport",
    "CheckResult",
    "CombinationFn",
    "DigraphHyperFn",
    "ExactHitReport",
    "ExplicitTableFn",
    "GMinResult",
    "GraphCoverageFn",
    "GraphCutFn",
    "GraphicMatroidRankFn",
    "GroundSet",
    "GroundSetCapError",
    "HypergraphCutFn",
    "InstanceFormatError",
    "KPartitionRun",
    "MonoTight3Fn",
    "MonoTightNFn",
    "NonSubmodularError",
    "Partition",
    "PartitionMatroidRankFn",
    "PosiTight3Fn",
    "PpsVerification",
    "PrincipalSequence",
    "RatioReport",
    "SetFunctionFamily",
    "ValueOracle",
    "approximation_bound",
    "as_fraction",
    "brute_force_all_k",
    "brute_force_optimal_k_partition",
    "check_chain_lower_bounds",
    "check_exact_hit_optimality",
    "check_monotone",
    "check_posimodular",
    "check_submodular",
    "check_symmetric",
    "check_two_level_condition",
    "cheapest_singleton",
    "compute_pps",
    "enumerate_partitions",
    "enumeration_cap",
    "g_value",
    "generate_batch",
    "greedy_splitting",
    "instance_from_json",
    "instance_to_json",
    "load_instance",
    "minimize_g",
    "partition_value",
    "pps_k_partition",
    "random_instance",
    "ratio_report",
    "refined_part",
    "refines",
    "repair_chain",
    "save_instance",
    "singleton_partition",
    "trivial_partition",
    "verify_pps",
    "__version__",
]
