"""Minimal generators, powers, and the quasi-equigeneration witness."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freiman import (
    MonomialIdeal,
    PointSet,
    minimalize,
    power,
    quasi_equigenerated_witness,
    with_witness,
)
from freiman.errors import PreconditionError
from helpers import (
    brute_ksum,
    brute_minimalize,
    complete_graph,
    cycle_graph,
    edge_vectors,
)


def ideal_of(vectors, witness=None):
    vecs = [tuple(v) for v in vectors]
    return MonomialIdeal(len(vecs[0]), PointSet.of(vecs), witness)


def test_minimalize_divisibility():
    ideal = minimalize([(1, 0), (1, 1)])  # (x1, x1 x2) -> (x1)
    assert ideal.generators.sorted_points() == [(1, 0)]
    assert ideal.mu == 1


def test_minimalize_four_cycle_edges():
    vecs = edge_vectors(cycle_graph(4))
    ideal = minimalize(vecs)
    assert ideal.mu == 4
    assert ideal.generators.points == brute_minimalize(vecs)


def test_minimalize_spanning_tree_monomials():
    # all 16 spanning trees of K4: equal-degree squarefree, pairwise incomparable
    from freiman import spanning_forests

    k4 = complete_graph(4)
    forests = spanning_forests(k4)
    vecs = [tuple(1 if i in f else 0 for i in range(6)) for f in forests]
    ideal = minimalize(vecs)
    assert ideal.mu == 16
    assert ideal.generators.points == brute_minimalize(vecs)


def test_minimalize_rejects_empty_and_mixed():
    with pytest.raises(ValueError):
        minimalize([])
    with pytest.raises(ValueError):
        minimalize([(1, 0), (1, 0, 0)])


def test_antichain_enforced_on_construction():
    with pytest.raises(ValueError):
        ideal_of([(1, 0), (1, 1)])


def test_zero_and_unit_ideals_rejected():
    with pytest.raises(ValueError):
        MonomialIdeal(2, PointSet(2, frozenset()))
    with pytest.raises(ValueError):
        ideal_of([(0, 0)])


def test_power_principal():
    ideal = ideal_of([(2, 1)])
    for k in (1, 2, 5):
        assert power(ideal, k).generators.sorted_points() == [(2 * k, k)]


def test_power_four_cycle_and_k4():
    c4 = with_witness(ideal_of(edge_vectors(cycle_graph(4))))
    assert power(c4, 2).mu == 9
    k4 = with_witness(ideal_of(edge_vectors(complete_graph(4))))
    assert power(k4, 2).mu == 19


def test_power_fast_path_matches_general_path():
    # the same ideal with and without its witness must give identical powers
    for g in (cycle_graph(4), complete_graph(4)):
        vecs = edge_vectors(g)
        plain = ideal_of(vecs)
        witnessed = with_witness(plain)
        for k in (2, 3):
            assert (
                power(witnessed, k).generators.points
                == power(plain, k).generators.points
            )


def test_power_of_power():
    ideal = with_witness(ideal_of(edge_vectors(cycle_graph(4))))
    assert (
        power(power(ideal, 2), 2).generators.points
        == power(ideal, 4).generators.points
    )
    assert (
        power(power(ideal, 3), 2).generators.points
        == power(ideal, 6).generators.points
    )


def test_power_weighted_degrees():
    ideal = with_witness(ideal_of([(3, 0), (0, 1)]))
    a, d = ideal.witness
    for k in (2, 3):
        pk = power(ideal, k)
        wa, wd = pk.witness
        assert wa == a and wd == k * d
        for c in pk.generators.points:
            assert sum(x * y for x, y in zip(a, c)) == k * d


def test_witness_equigenerated_fast_path():
    ideal = ideal_of([(2, 0), (1, 1), (0, 2)])
    assert quasi_equigenerated_witness(ideal) == ((1, 1), 2)


def test_witness_weighted_example():
    ideal = ideal_of([(3, 0), (0, 1)])
    assert quasi_equigenerated_witness(ideal) == ((1, 3), 3)


def test_witness_absent():
    ideal = ideal_of([(2, 0), (0, 1)])
    assert quasi_equigenerated_witness(ideal) == ((1, 2), 2)
    # 3a1 = 2a1 + 2a2 = 3a2 forces a1 = 2a2 and a1 = a2, so a = 0: no witness
    bad = ideal_of([(3, 0), (2, 2), (0, 3)])
    assert quasi_equigenerated_witness(bad) is None
    with pytest.raises(PreconditionError):
        with_witness(bad)


def test_witness_validation_on_construction():
    with pytest.raises(ValueError):
        ideal_of([(1, 0), (0, 1)], witness=((1, 2), 1))
    with pytest.raises(ValueError):
        ideal_of([(1, 0), (0, 1)], witness=((1, 0), 1))


def test_minimalize_idempotent_on_examples():
    vecs = [(2, 0, 1), (1, 1, 1), (0, 3, 0), (2, 1, 0), (2, 2, 2)]
    first = minimalize(vecs)
    again = minimalize(first.generators.points)
    assert first.generators.points == again.generators.points


vector_lists = st.integers(min_value=1, max_value=4).flatmap(
    lambda dim: st.lists(
        st.tuples(*[st.integers(min_value=0, max_value=4)] * dim).filter(
            lambda v: any(v)
        ),
        min_size=1,
        max_size=8,
    )
)


@given(vector_lists)
def test_minimalize_matches_brute_force(vecs):
    assert minimalize(vecs).generators.points == brute_minimalize(vecs)


@given(vector_lists)
def test_minimalize_idempotent(vecs):
    ideal = minimalize(vecs)
    assert minimalize(ideal.generators.points).generators.points == (
        ideal.generators.points
    )


@settings(max_examples=50)
@given(vector_lists, st.integers(min_value=2, max_value=3))
def test_general_power_is_minimalized_ksum(vecs, k):
    ideal = minimalize(vecs)
    expected = brute_minimalize(brute_ksum(ideal.generators.points, k))
    assert power(ideal, k).generators.points == expected


@settings(max_examples=50)
@given(vector_lists)
def test_witness_is_valid_when_found(vecs):
    ideal = minimalize(vecs)
    w = quasi_equigenerated_witness(ideal)
    if w is not None:
        a, d = w
        assert all(x >= 1 for x in a) and d >= 1
        for c in ideal.generators.points:
            assert sum(x * y for x, y in zip(a, c)) == d
