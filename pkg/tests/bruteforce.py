"""Brute-force test oracles: exhaustive subgraph enumeration, critical sets
and small-graph isomorphism.  Capped at small vertex counts by design."""

from __future__ import annotations

from itertools import combinations, permutations

import numpy as np

from lqrig.graphs import Graph, SparsityParams

BRUTE_CAP = 6


def brute_sparse(g: Graph, params: SparsityParams, cap: int = BRUTE_CAP) -> bool:
    """Check the count on every induced vertex subset with at least one edge."""
    assert g.n <= cap, "brute-force oracle is for small instances only"
    for r in range(2, g.n + 1):
        for subset in combinations(range(g.n), r):
            i = g.induced_count(subset)
            if i and params.edge_multiplier * i > params.k * r - params.l:
                return False
    return True


def brute_critical_sets(g: Graph, d: int, cap: int = BRUTE_CAP) -> list[tuple[int, ...]]:
    """All U with |U| > 1 and i(U) = d|U| - d."""
    assert g.n <= cap
    out = []
    for r in range(2, g.n + 1):
        for subset in combinations(range(g.n), r):
            if g.induced_count(subset) == d * r - d:
                out.append(subset)
    return out


def brute_addable(g: Graph, d: int, x: int, y: int, cap: int = BRUTE_CAP) -> bool:
    if g.has_edge(x, y):
        return False
    return brute_sparse(g.with_edge(x, y), SparsityParams(d, d), cap=cap)


def random_graph(n: int, m: int, rng: np.random.Generator) -> Graph:
    pairs = list(combinations(range(n), 2))
    idx = rng.choice(len(pairs), size=min(m, len(pairs)), replace=False)
    return Graph(n, [pairs[i] for i in idx])


def is_isomorphic(a: Graph, b: Graph) -> bool:
    """Permutation brute force; fine up to 7 vertices."""
    if a.n != b.n or a.m != b.m:
        return False
    assert a.n <= 7
    edges_b = set(b.edges)
    degs_a = sorted(a.degree(v) for v in range(a.n))
    degs_b = sorted(b.degree(v) for v in range(b.n))
    if degs_a != degs_b:
        return False
    for perm in permutations(range(a.n)):
        mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in a.edges}
        if mapped == edges_b:
            return True
    return False
