"""Cross-validation harness: combinatorial classifiers vs. the numeric
sumset oracle over exhaustive and randomized graph corpora.

Every named row below is an identity or bound that must hold on every
instance; the summary is a pass/fail matrix.  Instances that trip a
resource guard are counted as skipped for that row, never as passes.
Aggregation is order-independent, so chunks may be verified in parallel.
"""

import os
import random
from itertools import combinations, permutations
from math import comb
from multiprocessing import get_context

from .errors import ResourceCapError
from .fiber import h_vector, is_freiman, mu_from_h, mu_series
from .formats import graph_to_dict
from .graphs import (
    SimpleGraph,
    _adjacency,
    _component_vertex_sets,
    _four_cycle_union_edges,
    classify_freiman_graph,
    edge_ideal,
    is_polynomial_edge_ring,
)
from .ideals import with_witness
from .lattice import generalized_lower_bound
from .matroids import (
    base_ring_regularity,
    classify_freiman_matroid,
    cut_vertices,
    is_two_connected,
    matrix_tree_count,
    matroidal_ideal,
    spanning_forests,
)

GRAPH_ROWS = [
    "graph-classifier-vs-numeric",
    "doubling-h2-nonnegative",
    "spread-upper-bound",
    "edge-ring-spread-identity",
    "bipartite-rule-vs-general",
    "four-cycle-doubling-deficit",
    "polynomial-growth-forward",
]

DEEP_ROWS = [
    "growth-lower-bound",
    "partial-sums-nonnegative",
    "growth-equality-transfer",
    "h-mu-roundtrip",
]

MATROID_ROWS = [
    "matroid-classifier-vs-numeric",
    "matroid-spread-formula-vs-numeric",
    "forest-count-matrix-tree",
    "matroid-polynomial-growth",
    "matroid-regularity-bounds",
]

ALL_ROWS = GRAPH_ROWS + DEEP_ROWS + MATROID_ROWS

MAX_COUNTEREXAMPLES = 3


class _Tally:
    """Per-row instance/failure/skip counts plus a few counterexamples."""

    def __init__(self):
        self.rows = {name: [0, 0, 0] for name in ALL_ROWS}
        self.counterexamples = []

    def record(self, name, ok, g):
        row = self.rows[name]
        row[0] += 1
        if not ok:
            row[1] += 1
            if sum(1 for r, _ in self.counterexamples if r == name) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append((name, graph_to_dict(g)))

    def skip(self, name):
        self.rows[name][2] += 1

    def merge(self, other):
        for name, (inst, fail, skipped) in other.rows.items():
            row = self.rows[name]
            row[0] += inst
            row[1] += fail
            row[2] += skipped
        for name, gdict in other.counterexamples:
            if sum(1 for r, _ in self.counterexamples if r == name) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append((name, gdict))


def _bipartite_component_count(adj):
    """(number of components, number of bipartite components); isolated
    vertices are bipartite components."""
    total = 0
    bipartite = 0
    color = {}
    for start in sorted(adj):
        if start in color:
            continue
        total += 1
        color[start] = 0
        queue = [start]
        two_colorable = True
        while queue:
            u = queue.pop()
            for w in adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    two_colorable = False
        if two_colorable:
            bipartite += 1
    return total, bipartite


def _check_graph_instance(g, tally, cap, deep):
    """All graph-side rows on one graph with at least one edge."""
    adj = _adjacency(g)
    verdict = classify_freiman_graph(g, cap=cap)
    profile = is_freiman(edge_ideal(g), cap=cap)

    tally.record("graph-classifier-vs-numeric", verdict.freiman == profile.freiman, g)
    tally.record("doubling-h2-nonnegative", profile.h2 >= 0, g)
    tally.record(
        "spread-upper-bound", profile.ell <= min(profile.mu_series[1], g.n), g
    )
    ncomp, nbip = _bipartite_component_count(adj)
    tally.record("edge-ring-spread-identity", profile.ell == g.n - nbip, g)

    if nbip == ncomp:  # every component bipartite: the structural rule applies
        try:
            general = classify_freiman_graph(g, cap=cap, _bipartite_rule=False)
            tally.record(
                "bipartite-rule-vs-general", general.freiman == verdict.freiman, g
            )
        except ResourceCapError:
            tally.skip("bipartite-rule-vs-general")

    m = g.num_edges
    has_c4 = bool(_four_cycle_union_edges(adj))
    tally.record(
        "four-cycle-doubling-deficit",
        has_c4 == (profile.mu_series[2] < comb(m + 1, 2)),
        g,
    )

    if is_polynomial_edge_ring(g):
        try:
            mu = mu_series(with_witness(edge_ideal(g)), 3, cap=cap)
            ok = all(mu[k] == comb(m + k - 1, k) for k in (2, 3))
            tally.record("polynomial-growth-forward", ok, g)
        except ResourceCapError:
            tally.skip("polynomial-growth-forward")

    if deep:
        _check_deep_instance(g, profile, tally, cap)


def _check_deep_instance(g, profile, tally, cap):
    """Series-level rows (powers up to 4) on one graph."""
    try:
        ideal = with_witness(edge_ideal(g))
        mu = mu_series(ideal, 4, cap=cap)
    except ResourceCapError:
        for name in DEEP_ROWS:
            tally.skip(name)
        return
    ell = profile.ell
    bounds = [generalized_lower_bound(mu[1], ell, k) for k in range(1, 5)]
    tally.record(
        "growth-lower-bound",
        all(mu[k] >= bounds[k - 1] for k in range(1, 5)),
        g,
    )
    h = h_vector(mu, ell)
    partials = [
        sum(comb(ell + k - i - 1, k - i) * h[i] for i in range(2, k + 1))
        for k in range(2, 5)
    ]
    tally.record("partial-sums-nonnegative", all(p >= 0 for p in partials), g)
    if profile.h2 == 0:
        ok = all(mu[k] == bounds[k - 1] for k in range(2, 5))
    else:
        ok = mu[2] > bounds[1]
    tally.record("growth-equality-transfer", ok, g)
    tally.record("h-mu-roundtrip", mu_from_h(h, ell, 4) == mu, g)


def _check_matroid_instance(g, tally, cap, regularity_max_edges):
    """All matroid-side rows on one graph with at least one edge."""
    try:
        verdict = classify_freiman_matroid(g, cap=cap)
        ideal = matroidal_ideal(g, cap=cap)
        profile = is_freiman(ideal, cap=cap)
    except ResourceCapError:
        for name in MATROID_ROWS:
            tally.skip(name)
        return
    tally.record(
        "matroid-classifier-vs-numeric", verdict.freiman == profile.freiman, g
    )
    tally.record(
        "matroid-spread-formula-vs-numeric",
        verdict.spread_formula == verdict.spread_numeric,
        g,
    )
    tally.record(
        "forest-count-matrix-tree",
        len(spanning_forests(g, cap=cap)) == matrix_tree_count(g),
        g,
    )
    if verdict.freiman:
        try:
            mu = mu_series(ideal, 3, cap=cap)
            ell = profile.ell
            ok = all(mu[k] == comb(ell + k - 1, k) for k in range(1, 4))
            tally.record("matroid-polynomial-growth", ok, g)
        except ResourceCapError:
            tally.skip("matroid-polynomial-growth")
    elif g.num_edges <= regularity_max_edges:
        try:
            reg = base_ring_regularity(g, cap=cap)
            e = g.num_edges
            if is_two_connected(g):
                ok = 3 <= reg <= e - 1
            else:
                c = len(cut_vertices(g))
                s = len([
                    vs for vs in _component_vertex_sets(_adjacency(g)) if len(vs) > 1
                ])
                ok = 3 <= reg <= e - c - s
            tally.record("matroid-regularity-bounds", ok, g)
        except ResourceCapError:
            tally.skip("matroid-regularity-bounds")


def _graph_from_mask(n, mask, pairs):
    edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
    return SimpleGraph(n, frozenset(edges))


def _connected_spanning(n, mask, pairs):
    adj = [0] * (n + 1)
    for i in range(len(pairs)):
        if mask >> i & 1:
            u, v = pairs[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    seen = 2  # vertex 1
    stack = [1]
    while stack:
        u = stack.pop()
        rest = adj[u] & ~seen
        while rest:
            bit = rest & -rest
            rest ^= bit
            seen |= bit
            stack.append(bit.bit_length() - 1)
    return seen == (1 << (n + 1)) - 2


def _is_canonical_mask(n, mask, pairs):
    """Smallest mask among all vertex relabelings (used by --up-to-iso)."""
    index = {e: i for i, e in enumerate(pairs)}
    edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
    for perm in permutations(range(1, n + 1)):
        remapped = 0
        for u, v in edges:
            a, b = perm[u - 1], perm[v - 1]
            remapped |= 1 << index[(min(a, b), max(a, b))]
        if remapped < mask:
            return False
    return True


def _sweep_chunk(args):
    (n, lo, hi, cap, deep_max_vertices, max_edges, regularity_max_edges, up_to_iso) = args
    pairs = list(combinations(range(1, n + 1), 2))
    tally = _Tally()
    graphs_seen = 0
    for mask in range(lo, hi):
        if not _connected_spanning(n, mask, pairs):
            continue
        if up_to_iso and not _is_canonical_mask(n, mask, pairs):
            continue
        g = _graph_from_mask(n, mask, pairs)
        graphs_seen += 1
        _check_graph_instance(g, tally, cap, deep=n <= deep_max_vertices)
        if g.num_edges <= max_edges:
            _check_matroid_instance(g, tally, cap, regularity_max_edges)
    return tally.rows, tally.counterexamples, graphs_seen


def _random_chunk(args):
    (graph_dicts, cap, deep_max_vertices, max_edges, regularity_max_edges) = args
    tally = _Tally()
    for gd in graph_dicts:
        g = SimpleGraph(gd["n"], frozenset(tuple(e) for e in gd["edges"]))
        _check_graph_instance(g, tally, cap, deep=g.n <= deep_max_vertices)
        if g.num_edges <= max_edges:
            _check_matroid_instance(g, tally, cap, regularity_max_edges)
    return tally.rows, tally.counterexamples, len(graph_dicts)


def random_graph(rng, max_vertices, min_vertices=2):
    """One seeded random graph with at least one edge; may be disconnected."""
    n = rng.randint(min_vertices, max_vertices)
    p = rng.uniform(0.15, 0.85)
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
    if not edges:
        u = rng.randint(1, n - 1) if n > 1 else 1
        v = rng.randint(u + 1, n)
        edges = [(u, v)]
    return SimpleGraph(n, frozenset(edges))


def _merge_results(results):
    tally = _Tally()
    graphs_total = 0
    for rows, counters, seen in results:
        other = _Tally()
        other.rows = rows
        other.counterexamples = counters
        tally.merge(other)
        graphs_total += seen
    return tally, graphs_total


def _run_chunks(worker, chunk_args, jobs):
    if jobs <= 1 or len(chunk_args) <= 1:
        return [worker(a) for a in chunk_args]
    with get_context("fork").Pool(jobs) as pool:
        return pool.map(worker, chunk_args)


def run_verify(
    mode="exhaustive",
    max_vertices=6,
    max_edges=6,
    count=200,
    seed=0,
    cap=None,
    up_to_iso=False,
    jobs=None,
    deep_max_vertices=5,
    regularity_max_edges=7,
    no_timing=False,
) -> dict:
    """Run the whole matrix and return the summary report dict."""
    import time

    started = time.perf_counter()
    if jobs is None:
        jobs = max(1, min(4, os.cpu_count() or 1))
    if mode not in ("exhaustive", "random"):
        raise ValueError("mode must be 'exhaustive' or 'random'")

    chunk_args = []
    if mode == "exhaustive":
        for n in range(2, max_vertices + 1):
            nbits = comb(n, 2)
            total = 1 << nbits
            pieces = max(1, min(jobs * 8, total // 4096)) if n >= 6 else 1
            step = (total + pieces - 1) // pieces
            for lo in range(1, total, step):
                chunk_args.append(
                    (
                        n,
                        lo,
                        min(lo + step, total),
                        cap,
                        deep_max_vertices,
                        max_edges,
                        regularity_max_edges,
                        up_to_iso,
                    )
                )
        results = _run_chunks(_sweep_chunk, chunk_args, jobs)
    else:
        rng = random.Random(seed)
        graphs = [graph_to_dict(random_graph(rng, max_vertices)) for _ in range(count)]
        step = max(1, (len(graphs) + jobs * 4 - 1) // (jobs * 4))
        for lo in range(0, len(graphs), step):
            chunk_args.append(
                (
                    graphs[lo : lo + step],
                    cap,
                    deep_max_vertices,
                    max_edges,
                    regularity_max_edges,
                )
            )
        results = _run_chunks(_random_chunk, chunk_args, jobs)

    tally, graphs_total = _merge_results(results)
    rows = []
    all_passed = True
    for name in ALL_ROWS:
        inst, fail, skipped = tally.rows[name]
        status = "pass" if fail == 0 else "FAIL"
        if fail:
            all_passed = False
        rows.append(
            {
                "name": name,
                "instances": inst,
                "failures": fail,
                "skipped": skipped,
                "status": status,
            }
        )
    report = {
        "command": "verify",
        "mode": mode,
        "parameters": {
            "max_vertices": max_vertices,
            "max_edges": max_edges,
            "count": count if mode == "random" else None,
            "seed": seed if mode == "random" else None,
            "up_to_iso": up_to_iso,
            "deep_max_vertices": deep_max_vertices,
            "regularity_max_edges": regularity_max_edges,
        },
        "graphs_checked": graphs_total,
        "rows": rows,
        "counterexamples": [
            {"row": name, "graph": gdict} for name, gdict in tally.counterexamples
        ],
        "all_passed": all_passed,
    }
    if not no_timing:
        report["timing"] = {"seconds": round(time.perf_counter() - started, 6)}
    return report
