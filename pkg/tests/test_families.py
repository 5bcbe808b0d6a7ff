from fractions import Fraction

import pytest

import subpartition as sp

from helpers import EPS, cardinality, coverage_path3, mono3, mono_n, omega, posi3

E = EPS


def table_of(fam):
    return tuple(fam.value(m) for m in range(1 << fam.n))


def test_graph_cut_values():
    fam = sp.GraphCutFn(3, [(0, 1, 3), (1, 2, 1)])
    assert fam.value(0) == 0
    assert fam.value(0b001) == 3
    assert fam.value(0b010) == 4
    assert fam.value(0b011) == 1
    assert fam.value(0b111) == 0
    # parallel edges add up
    fam2 = sp.GraphCutFn(2, [(0, 1, 1), (1, 0, Fraction(1, 2))])
    assert fam2.value(0b01) == Fraction(3, 2)


def test_graph_cut_rejects_bad_edges():
    with pytest.raises(ValueError):
        sp.GraphCutFn(3, [(0, 0, 1)])
    with pytest.raises(ValueError):
        sp.GraphCutFn(3, [(0, 3, 1)])
    with pytest.raises(ValueError):
        sp.GraphCutFn(3, [(0, 1, -2)])
    with pytest.raises(TypeError):
        sp.GraphCutFn(3, [(0, 1, 0.5)])


def test_hypergraph_cut_values():
    fam = sp.HypergraphCutFn(4, [([0, 1, 2], 2), ([2, 3], Fraction(1, 2))])
    assert fam.value(0) == 0
    assert fam.value(0b0001) == 2  # splits the triple only
    assert fam.value(0b0111) == Fraction(1, 2)  # triple whole, pair split
    assert fam.value(0b1111) == 0
    assert fam.value(0b0100) == Fraction(5, 2)
    with pytest.raises(ValueError):
        sp.HypergraphCutFn(3, [([1], 1)])
    with pytest.raises(ValueError):
        sp.HypergraphCutFn(3, [([1, 1], 1)])


def test_coverage_values():
    fam = coverage_path3()
    assert table_of(fam) == (0, 1, 2, 2, 1, 2, 2, 2)


def test_partition_matroid_rank_values():
    fam = sp.PartitionMatroidRankFn(4, [[0, 2], [1], [3]])
    assert fam.value(0) == 0
    assert fam.value(0b0101) == 1  # both in one base block
    assert fam.value(0b0011) == 2
    assert fam.value(0b1111) == 3
    with pytest.raises(ValueError):
        sp.PartitionMatroidRankFn(3, [[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        sp.PartitionMatroidRankFn(3, [[0, 1]])


def test_graphic_matroid_rank_values():
    # triangle plus a pendant edge on 4 vertices
    fam = sp.GraphicMatroidRankFn(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert fam.n == 4
    assert fam.value(0) == 0
    assert fam.value(0b0111) == 2  # triangle edges: one is dependent
    assert fam.value(0b1111) == 3
    assert fam.value(0b1000) == 1
    # parallel edges: second copy never adds rank
    multi = sp.GraphicMatroidRankFn(2, [(0, 1), (0, 1)])
    assert multi.value(0b11) == 1


def test_explicit_table_validation():
    with pytest.raises(ValueError):
        sp.ExplicitTableFn(2, [0, 1, 1], "general")
    with pytest.raises(ValueError):
        sp.ExplicitTableFn(1, [0, 1], "convex")
    fam = sp.ExplicitTableFn(2, [0, 1, 1, 2], "monotone")
    assert fam.value(0b11) == 2


def test_combination_values():
    cov = coverage_path3()
    cut = sp.GraphCutFn(3, [(0, 2, 2)])
    combo = sp.CombinationFn((cov, cut), (Fraction(1, 2), 3), "posimodular")
    for m in range(8):
        assert combo.value(m) == cov.value(m) / 2 + 3 * cut.value(m)
    with pytest.raises(ValueError):
        sp.CombinationFn((cov, cut), (1,), "posimodular")
    with pytest.raises(ValueError):
        sp.CombinationFn((cov, sp.GraphCutFn(4, [(0, 1, 1)])), (1, 1), "posimodular")


def test_tight_monotone3_table():
    fam = mono3()
    assert table_of(fam) == (
        0,
        1,
        1 + E,
        Fraction(3, 2) + E,
        1 + E,
        Fraction(3, 2) + E,
        2 + 2 * E,
        2 + 2 * E,
    )
    assert fam.function_class == "monotone"


def test_tight_posimodular3_table():
    fam = posi3()
    assert table_of(fam) == (0, 1, 1, 1 + E, 1 + E, 2, 2, 1 + E)
    assert fam.function_class == "posimodular"


def test_eps_window_enforced():
    for make in (sp.MonoTight3Fn, sp.PosiTight3Fn):
        with pytest.raises(ValueError):
            make(Fraction(0))
        with pytest.raises(ValueError):
            make(Fraction(2, 3))
    with pytest.raises(ValueError):
        sp.MonoTightNFn(5, Fraction(-1, 4))


def test_tight_monotone_odd_family_values():
    n = 7
    fam = mono_n(n)
    full = (1 << n) - 1
    assert fam.value(0) == 0
    assert fam.value(full) == Fraction(n + 1, 2)
    assert fam.value(fam.u_mask) == Fraction(n + 1, 4)
    assert fam.value(fam.d_mask) == Fraction(n + 1, 2)
    for i in range(n):
        expected = Fraction(1) if (1 << i) & fam.u_mask else 1 + E
        assert fam.value(1 << i) == expected
    # the clamp is what keeps large sets cheap
    assert fam.unclamped(full) > fam.value(full)
    with pytest.raises(ValueError):
        sp.MonoTightNFn(6)
    with pytest.raises(ValueError):
        sp.MonoTightNFn(3)


def test_digraph_hyper_values():
    n = 5
    fam = omega(n, 10)
    a = Fraction(10)
    assert fam.value(0) == 0
    assert fam.value(0b00001) == 0  # the tail alone: no arc enters it
    assert fam.value(0b00010) == a + 1
    rest = ((1 << n) - 1) ^ 1
    assert fam.value(rest) == a * (n - 1)  # all heads, tail outside, edge whole
    assert fam.value((1 << n) - 1) == 0
    assert fam.value(0b00011) == 1  # tail plus one head: edge split only
    with pytest.raises(ValueError):
        sp.DigraphHyperFn(2, 10)
    with pytest.raises(ValueError):
        sp.DigraphHyperFn(5, Fraction(1, 2))


def test_cardinality_is_modular():
    fam = cardinality(4)
    for m in range(16):
        assert fam.value(m) == m.bit_count()
