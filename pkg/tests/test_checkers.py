from fractions import Fraction

import pytest

import subpartition as sp

from helpers import cardinality, mono3, omega, posi3, two_edges, zero_fn


def verify_witness(oracle, result):
    """Recompute the violated inequality from the reported witness; a FAIL
    with a witness that does not actually violate would be a checker bug."""
    assert result.witness is not None
    a, b = result.witness
    f = oracle.eval
    name = result.property_name
    if name == "submodular":
        assert f(a) + f(b) < f(a | b) + f(a & b)
    elif name == "monotone":
        assert a & ~b == 0 and f(a) > f(b)
    elif name == "symmetric":
        assert b == oracle.ground_set.full_mask ^ a and f(a) != f(b)
    elif name == "posimodular":
        assert f(a) + f(b) < f(a & ~b) + f(b & ~a)
    else:
        raise AssertionError(f"unknown property {name}")


def test_zero_function_passes_everything():
    oracle = zero_fn(4).oracle()
    assert sp.check_submodular(oracle).ok
    assert sp.check_monotone(oracle).ok
    assert sp.check_symmetric(oracle).ok
    assert sp.check_posimodular(oracle).ok


def test_graph_cut_class_profile():
    oracle = two_edges().oracle()
    assert sp.check_submodular(oracle).ok
    assert sp.check_symmetric(oracle).ok
    mono = sp.check_monotone(oracle)
    assert not mono.ok
    verify_witness(oracle, mono)
    # symmetric implies posimodular
    assert sp.check_posimodular(oracle).ok


def test_matroid_rank_class_profile():
    fam = sp.GraphicMatroidRankFn(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    oracle = fam.oracle()
    assert sp.check_submodular(oracle).ok
    assert sp.check_monotone(oracle).ok
    assert sp.check_posimodular(oracle).ok
    sym = sp.check_symmetric(oracle)
    assert not sym.ok
    verify_witness(oracle, sym)


def test_posimodular_but_not_monotone_or_symmetric():
    oracle = posi3().oracle()
    assert sp.check_submodular(oracle).ok
    assert sp.check_posimodular(oracle).ok
    mono = sp.check_monotone(oracle)
    sym = sp.check_symmetric(oracle)
    assert not mono.ok and not sym.ok
    verify_witness(oracle, mono)
    verify_witness(oracle, sym)


def test_general_instance_fails_all_three_subclasses():
    oracle = omega(5, 10).oracle()
    assert sp.check_submodular(oracle).ok
    for check in (sp.check_monotone, sp.check_symmetric, sp.check_posimodular):
        res = check(oracle)
        assert not res.ok
        verify_witness(oracle, res)


def test_non_submodular_table_is_caught():
    fam = sp.ExplicitTableFn(3, [0, 0, 0, 1, 0, 0, 0, 1], "general")
    oracle = fam.oracle()
    res = sp.check_submodular(oracle)
    assert not res.ok
    verify_witness(oracle, res)
    assert "violated" in res.describe(oracle.ground_set)


def test_first_counterexample_is_reported():
    # f({a}) > f({a,b}) and f({a}) > f({a,c}); scanning supersets of the
    # smallest failing subset in ascending order must report {a,b} first
    fam = sp.ExplicitTableFn(3, [0, 2, 1, 1, 1, 1, 2, 0], "general")
    oracle = fam.oracle()
    res = sp.check_monotone(oracle)
    assert not res.ok
    assert res.witness == (0b001, 0b011)


def test_modular_function_is_monotone_and_posimodular():
    oracle = cardinality(4).oracle()
    assert sp.check_submodular(oracle).ok
    assert sp.check_monotone(oracle).ok
    assert sp.check_posimodular(oracle).ok
    assert not sp.check_symmetric(oracle).ok


def test_checkers_respect_cap(monkeypatch):
    monkeypatch.setenv("SUBMOD_N_CAP", "3")
    oracle = zero_fn(4).oracle()
    with pytest.raises(sp.GroundSetCapError):
        sp.check_submodular(oracle)


def test_mono3_is_monotone_submodular():
    oracle = mono3().oracle()
    assert sp.check_submodular(oracle).ok
    assert sp.check_monotone(oracle).ok
    assert not sp.check_symmetric(oracle).ok
