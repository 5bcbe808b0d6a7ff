from fractions import Fraction
from itertools import islice

import pytest

import subpartition as sp
from subpartition.partition_opt import BELL

from helpers import EPS, cardinality, mono3, posi3, weighted_path4, zero_fn

STIRLING = {(4, 2): 7, (5, 3): 25, (6, 3): 90, (7, 4): 350, (8, 4): 1701}


def test_bell_counts():
    for n in range(1, 9):
        assert sum(1 for _ in sp.enumerate_partitions(n)) == BELL[n]


def test_stirling_counts():
    for (n, k), count in STIRLING.items():
        assert sum(1 for _ in sp.enumerate_partitions(n, k)) == count


def test_block_counts_partition_bell():
    n = 6
    assert sum(
        sum(1 for _ in sp.enumerate_partitions(n, k)) for k in range(1, n + 1)
    ) == BELL[n]


def test_single_element_ground_set():
    parts = list(sp.enumerate_partitions(1))
    assert parts == [sp.Partition(1, [0b1])]
    assert parts[0].rgs() == (0,)


def test_canonical_order_n3():
    assert [p.rgs() for p in sp.enumerate_partitions(3)] == [
        (0, 0, 0),
        (0, 0, 1),
        (0, 1, 0),
        (0, 1, 1),
        (0, 1, 2),
    ]


def test_order_is_lex_on_growth_strings():
    seen = [p.rgs() for p in sp.enumerate_partitions(5)]
    assert seen == sorted(seen)
    assert len(set(seen)) == BELL[5]


def test_k_out_of_range():
    with pytest.raises(ValueError):
        list(sp.enumerate_partitions(3, 0))
    with pytest.raises(ValueError):
        list(sp.enumerate_partitions(3, 4))


def test_streaming_is_lazy():
    # Bell(13) is 27.6 million; taking a prefix must not materialize the rest
    first = list(islice(sp.enumerate_partitions(13), 2))
    assert first[0] == sp.trivial_partition(13)
    assert first[1].rgs() == (0,) * 12 + (1,)


def test_minimize_g_zero_oracle():
    oracle = zero_fn(4).oracle()
    res = sp.minimize_g(oracle, 1)
    assert res.value == Fraction(-4)
    assert res.num_minimizers == 1
    assert res.finest == res.coarsest == sp.singleton_partition(4)


def test_minimize_g_tie_handling():
    oracle = zero_fn(3).oracle()
    res = sp.minimize_g(oracle, 0)
    assert res.value == 0
    assert res.num_minimizers == BELL[3]
    assert res.finest == sp.singleton_partition(3)
    assert res.coarsest == sp.trivial_partition(3)


def test_minimize_g_mono3_small_b():
    oracle = mono3().oracle()
    res = sp.minimize_g(oracle, Fraction(1, 4))
    assert res.value == Fraction(7, 4) + 2 * EPS
    assert res.num_minimizers == 1
    assert res.coarsest == sp.trivial_partition(3)


def test_minimize_g_mono3_breakpoint():
    # b = 1/2 is a breakpoint: the whole chain from {V} to singletons ties
    oracle = mono3().oracle()
    res = sp.minimize_g(oracle, Fraction(1, 2))
    assert res.value == Fraction(3, 2) + 2 * EPS
    assert res.num_minimizers == 4
    assert res.finest == sp.singleton_partition(3)
    assert res.coarsest == sp.trivial_partition(3)


def test_minimize_g_result_is_global_minimum():
    for fam in (weighted_path4(), posi3()):
        oracle = fam.oracle()
        for b in (0, Fraction(1, 3), 1, Fraction(5, 2)):
            res = sp.minimize_g(oracle, b)
            for p in sp.enumerate_partitions(oracle.n):
                assert res.value <= sp.g_value(oracle, p, b)
            assert res.value == sp.g_value(oracle, res.finest, b)
            assert res.value == sp.g_value(oracle, res.coarsest, b)


def test_minimizer_line_bounds_h_everywhere():
    # h(b) = min_P f(P) - b|P| is concave piecewise linear; the line of any
    # minimizer at b0 must dominate h on the whole axis
    oracle = weighted_path4().oracle()
    grid = [Fraction(i, 4) for i in range(20)]
    for b0 in (Fraction(1, 2), Fraction(3, 2), Fraction(7, 2)):
        star = sp.minimize_g(oracle, b0).finest
        for bp in grid:
            assert sp.minimize_g(oracle, bp).value <= sp.g_value(oracle, star, bp)


def test_minimize_g_rejects_float_parameter():
    oracle = zero_fn(3).oracle()
    with pytest.raises(TypeError):
        sp.minimize_g(oracle, 0.5)


def test_brute_force_k_equals_n():
    for fam in (mono3(), posi3(), weighted_path4()):
        oracle = fam.oracle()
        n = oracle.n
        _, value = sp.brute_force_optimal_k_partition(oracle, n)
        assert value == sum(oracle.eval(1 << i) for i in range(n))


def test_brute_force_k2_symmetric_is_min_cut():
    for seed in (3, 11):
        fam = sp.random_instance("graph_cut", 6, seed)
        oracle = fam.oracle()
        _, value = sp.brute_force_optimal_k_partition(oracle, 2)
        full = oracle.ground_set.full_mask
        assert value == 2 * min(oracle.eval(s) for s in range(1, full))


def test_brute_force_frozen_small_cases():
    p, v = sp.brute_force_optimal_k_partition(mono3().oracle(), 2)
    assert v == Fraction(5, 2) + 2 * EPS
    assert p == sp.Partition(3, [0b011, 0b100])

    p, v = sp.brute_force_optimal_k_partition(posi3().oracle(), 2)
    assert v == 2 + 2 * EPS
    assert p == sp.Partition(3, [0b011, 0b100])

    p, v = sp.brute_force_optimal_k_partition(cardinality(5).oracle(), 3)
    assert v == 5
    assert p == sp.Partition(5, [0b00111, 0b01000, 0b10000])


def test_brute_force_canonical_tie_break():
    p, v = sp.brute_force_optimal_k_partition(zero_fn(3).oracle(), 2)
    assert v == 0
    assert p == sp.Partition(3, [0b011, 0b100])


def test_brute_force_k_out_of_range():
    oracle = zero_fn(3).oracle()
    with pytest.raises(ValueError):
        sp.brute_force_optimal_k_partition(oracle, 0)
    with pytest.raises(ValueError):
        sp.brute_force_optimal_k_partition(oracle, 4)


def test_brute_force_all_k_matches_per_k():
    oracle = weighted_path4().oracle()
    table = sp.brute_force_all_k(oracle)
    assert sorted(table) == [1, 2, 3, 4]
    assert table[1] == (sp.trivial_partition(4), oracle.eval(0b1111))
    for k, (part, value) in table.items():
        pk, vk = sp.brute_force_optimal_k_partition(oracle, k)
        assert (part, value) == (pk, vk)
        assert len(part.blocks) == k


def test_enumeration_cap_enforced(monkeypatch):
    monkeypatch.setenv("SUBMOD_N_CAP", "4")
    with pytest.raises(sp.GroundSetCapError):
        next(sp.enumerate_partitions(5))
    oracle5 = zero_fn(5).oracle()
    with pytest.raises(sp.GroundSetCapError):
        sp.minimize_g(oracle5, 1)
    with pytest.raises(sp.GroundSetCapError):
        sp.brute_force_optimal_k_partition(oracle5, 2)
