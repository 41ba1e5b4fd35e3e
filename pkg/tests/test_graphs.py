"""Graph structure, cycle enumeration, and the Freiman-graph classifier."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freiman import (
    SimpleGraph,
    classify_freiman_graph,
    components,
    cyclomatic_number,
    edge_ideal,
    enumerate_simple_cycles,
    four_cycle_union_subgraph,
    has_long_primitive_even_walk,
    is_bipartite,
    is_freiman,
    is_polynomial_edge_ring,
)
from freiman.errors import PreconditionError, ResourceCapError
from helpers import (
    bowtie,
    brute_simple_cycles,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    graph,
    path_graph,
)


def two_four_cycles():
    return graph(8, [(1, 2), (2, 3), (3, 4), (4, 1), (5, 6), (6, 7), (7, 8), (8, 5)])


def test_simple_graph_validation():
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        SimpleGraph(3, frozenset({(1, 4)}))
    with pytest.raises(ValueError):
        SimpleGraph(3, frozenset({(2, 1)}))  # must be stored (min, max)


def test_components_ordering_and_relabeling():
    g = graph(6, [(5, 6), (1, 3)])
    comps = components(g)
    assert [c.n for c in comps] == [2, 1, 1, 2]
    assert comps[0].sorted_edges() == [(1, 2)]  # vertices 1,3 relabeled
    assert comps[3].sorted_edges() == [(1, 2)]  # vertices 5,6 relabeled


def test_cyclomatic_number():
    assert cyclomatic_number(path_graph(5)) == 0
    assert cyclomatic_number(cycle_graph(4)) == 1
    assert cyclomatic_number(complete_graph(4)) == 3
    # isolated vertices do not change the count
    assert cyclomatic_number(graph(6, [(1, 2), (2, 3), (1, 3)])) == 1


def test_is_bipartite():
    parts = is_bipartite(cycle_graph(4))
    assert parts == (frozenset({1, 3}), frozenset({2, 4}))
    assert is_bipartite(complete_graph(4)) is None
    assert is_bipartite(path_graph(5)) is not None


def test_cycles_tree_empty():
    assert enumerate_simple_cycles(path_graph(5)) == []


def test_cycles_k4():
    cycles = enumerate_simple_cycles(complete_graph(4))
    assert len(cycles) == 7  # 4 triangles + 3 squares
    assert cycles == brute_simple_cycles(complete_graph(4))


def test_cycles_bowtie():
    cycles = enumerate_simple_cycles(bowtie())
    assert cycles == [(1, 2, 3), (3, 4, 5)]


def test_cycles_canonical_form():
    for c in enumerate_simple_cycles(complete_graph(5)):
        assert c[0] == min(c)
        assert c[1] < c[-1]


def test_cycles_cap():
    with pytest.raises(ResourceCapError):
        enumerate_simple_cycles(complete_graph(6), cap=5)


def test_polynomial_edge_ring_examples():
    assert is_polynomial_edge_ring(cycle_graph(5))
    assert not is_polynomial_edge_ring(cycle_graph(4))
    assert not is_polynomial_edge_ring(bowtie())
    assert is_polynomial_edge_ring(path_graph(4))
    # odd cycle plus disjoint tree is still polynomial
    assert is_polynomial_edge_ring(graph(5, [(1, 2), (2, 3), (1, 3), (4, 5)]))


def test_four_cycle_union_examples():
    assert four_cycle_union_subgraph(path_graph(5)).edges == frozenset()
    k23 = complete_bipartite(2, 3)
    assert four_cycle_union_subgraph(k23).edges == k23.edges
    diamond = graph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])
    assert four_cycle_union_subgraph(diamond).edges == frozenset(
        {(1, 3), (1, 4), (2, 3), (2, 4)}
    )


def test_long_walk_even_cycle():
    witness = has_long_primitive_even_walk(cycle_graph(6))
    assert witness == {"kind": "even-cycle", "cycle": [1, 2, 3, 4, 5, 6]}


def test_long_walk_bowtie():
    witness = has_long_primitive_even_walk(bowtie())
    assert witness["kind"] == "odd-cycles-sharing-one-vertex"
    assert witness["cycles"] == [[1, 2, 3], [3, 4, 5]]


def test_long_walk_disjoint_odd_cycles():
    # two triangles joined by a bridge
    g = graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)])
    witness = has_long_primitive_even_walk(g)
    assert witness["kind"] == "disjoint-odd-cycles"


def test_long_walk_absent_on_diamond():
    diamond = graph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])
    assert has_long_primitive_even_walk(diamond) is None


def test_long_walk_requires_connected():
    with pytest.raises(PreconditionError):
        has_long_primitive_even_walk(two_four_cycles())


def test_edge_ideal_examples():
    single = edge_ideal(graph(2, [(1, 2)]))
    assert single.generators.sorted_points() == [(1, 1)]
    c4 = edge_ideal(cycle_graph(4))
    assert c4.mu == 4 and c4.witness == ((1, 1, 1, 1), 2)
    assert edge_ideal(complete_graph(4)).mu == 6
    with pytest.raises(PreconditionError):
        edge_ideal(SimpleGraph(3, frozenset()))


def test_classify_trees():
    for g in (path_graph(2), path_graph(5), graph(4, [(1, 2), (1, 3), (1, 4)])):
        verdict = classify_freiman_graph(g)
        assert verdict.freiman and verdict.reason == "no-primitive-walks"


def test_classify_complete_bipartite_2s():
    for s in (2, 3, 4):
        g = complete_bipartite(2, s)
        verdict = classify_freiman_graph(g)
        assert verdict.freiman, s
        assert is_freiman(edge_ideal(g)).freiman, s


def test_classify_k4():
    verdict = classify_freiman_graph(complete_graph(4))
    assert not verdict.freiman
    assert verdict.witness is not None
    assert "four_cycle_union" in verdict.witness


def test_classify_two_four_cycles():
    verdict = classify_freiman_graph(two_four_cycles())
    assert not verdict.freiman
    assert verdict.reason == "component-rule"
    assert verdict.witness["non_polynomial_components"] == [[1, 2, 3, 4], [5, 6, 7, 8]]


def test_classify_c6_long_walk():
    verdict = classify_freiman_graph(cycle_graph(6))
    assert not verdict.freiman
    assert verdict.reason == "witness-long-walk"
    assert verdict.witness == {"kind": "even-cycle", "cycle": [1, 2, 3, 4, 5, 6]}


def test_classify_k23_with_pendant_triangle():
    g = graph(
        7,
        [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (1, 6), (6, 7), (1, 7)],
    )
    verdict = classify_freiman_graph(g)
    assert verdict.freiman
    assert is_freiman(edge_ideal(g)).freiman


def test_classify_matches_numeric_on_named_graphs():
    cases = [
        cycle_graph(3),
        cycle_graph(4),
        cycle_graph(5),
        cycle_graph(6),
        complete_graph(4),
        complete_graph(5),
        complete_bipartite(2, 3),
        complete_bipartite(3, 3),
        bowtie(),
        two_four_cycles(),
        graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]),
    ]
    for g in cases:
        assert (
            classify_freiman_graph(g).freiman == is_freiman(edge_ideal(g)).freiman
        ), g


def test_classify_isolated_vertices_ignored():
    g = graph(6, [(1, 2), (2, 3), (3, 4), (4, 1)])
    verdict = classify_freiman_graph(g)
    assert verdict.freiman


def test_witness_present_whenever_false():
    failing = [
        complete_graph(4),
        complete_graph(5),
        cycle_graph(6),
        two_four_cycles(),
        bowtie(),
    ]
    for g in failing:
        verdict = classify_freiman_graph(g)
        assert not verdict.freiman
        assert verdict.witness is not None, g


small_graphs = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.builds(
        lambda edges: SimpleGraph(n, frozenset(edges)),
        st.sets(
            st.tuples(
                st.integers(min_value=1, max_value=n),
                st.integers(min_value=1, max_value=n),
            )
            .filter(lambda e: e[0] != e[1])
            .map(lambda e: (min(e), max(e))),
            max_size=12,
        ),
    )
)


@given(small_graphs)
def test_cycle_enumeration_matches_brute_force(g):
    assert enumerate_simple_cycles(g) == brute_simple_cycles(g)


@settings(max_examples=60)
@given(small_graphs, st.randoms(use_true_random=False))
def test_classifier_is_relabeling_invariant(g, rng):
    perm = list(range(1, g.n + 1))
    rng.shuffle(perm)
    relabeled = SimpleGraph.from_edges(
        g.n, [(perm[u - 1], perm[v - 1]) for u, v in g.edges]
    )
    assert (
        classify_freiman_graph(relabeled).freiman == classify_freiman_graph(g).freiman
    )


@given(small_graphs)
def test_polynomial_ring_iff_cycle_structure(g):
    # cross-check the peeled-cycle implementation against brute cycles
    cycles = brute_simple_cycles(g)
    expected = True
    if any(len(c) % 2 == 0 for c in cycles):
        expected = False
    else:
        # more than one cycle in one component?
        adj = {v: set() for v in range(1, g.n + 1)}
        for u, v in g.edges:
            adj[u].add(v)
            adj[v].add(u)
        seen = set()
        for start in range(1, g.n + 1):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            in_comp = sum(1 for c in cycles if set(c) <= comp)
            if in_comp > 1:
                expected = False
    assert is_polynomial_edge_ring(g) == expected
