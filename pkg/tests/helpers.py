"""Shared test fixtures and independent brute-force oracles.

The oracles here deliberately use different algorithms from the package
(combinations_with_replacement instead of incremental accumulation,
Fraction Gauss-Jordan instead of fraction-free elimination, permutation
scans instead of DFS) so the two sides stay independent.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations

from freiman import SimpleGraph


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def brute_ksum(points, k):
    """k-fold sumset by enumerating all multisets of k summands."""
    out = set()
    for combo in combinations_with_replacement(points, k):
        total = combo[0]
        for p in combo[1:]:
            total = vadd(total, p)
        out.add(total)
    return out


def brute_rank(vectors):
    """Rank over Q by Gauss-Jordan on Fractions."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        rank += 1
    return rank


def brute_affine_dim(points):
    pts = sorted(points)
    return brute_rank([[a - b for a, b in zip(p, pts[0])] for p in pts[1:]])


def brute_minimalize(vectors):
    """Antichain of minimal vectors by the quadratic definition."""
    vecs = sorted(set(map(tuple, vectors)))
    keep = []
    for v in vecs:
        if not any(
            w != v and all(a <= b for a, b in zip(w, v)) for w in vecs
        ):
            keep.append(v)
    return set(keep)


def brute_simple_cycles(g: SimpleGraph):
    """Every simple cycle as a canonical tuple, by checking all vertex
    arrangements of all subsets.  Exponential; fine for tiny graphs."""
    adj = {v: set() for v in range(1, g.n + 1)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    found = set()
    verts = list(range(1, g.n + 1))
    for size in range(3, g.n + 1):
        for subset in combinations(verts, size):
            first = subset[0]
            for rest in permutations(subset[1:]):
                cycle = (first,) + rest
                if all(
                    cycle[(i + 1) % size] in adj[cycle[i]] for i in range(size)
                ):
                    if cycle[1] < cycle[-1]:
                        found.add(cycle)
    return sorted(found, key=lambda c: (len(c), c))


def brute_articulation_points(g: SimpleGraph):
    """Vertices whose removal increases the component count of their
    component, by direct recount."""

    def count_components(vertices, edges):
        parent = {v: v for v in vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        return len({find(v) for v in vertices})

    base = count_components(range(1, g.n + 1), g.edges)
    points = set()
    for v in range(1, g.n + 1):
        rest = [u for u in range(1, g.n + 1) if u != v]
        edges = [e for e in g.edges if v not in e]
        if rest and count_components(rest, edges) > base:
            points.add(v)
    return points


def graph(n, edges):
    return SimpleGraph.from_edges(n, edges)


def cycle_graph(r):
    return graph(r, [(i, i % r + 1) for i in range(1, r + 1)])


def path_graph(r):
    return graph(r, [(i, i + 1) for i in range(1, r)])


def complete_graph(n):
    return graph(n, list(combinations(range(1, n + 1), 2)))


def complete_bipartite(a, b):
    left = range(1, a + 1)
    right = range(a + 1, a + b + 1)
    return graph(a + b, [(u, v) for u in left for v in right])


def bowtie():
    """Two triangles sharing vertex 3."""
    return graph(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])


def edge_vectors(g: SimpleGraph):
    return [
        tuple(1 if k in (u, v) else 0 for k in range(1, g.n + 1))
        for u, v in g.sorted_edges()
    ]
