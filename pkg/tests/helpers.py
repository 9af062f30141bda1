"""Shared test utilities: random instance generators and brute-force
cross-checks that stay independent of the library code paths they test."""

from __future__ import annotations

import random
from itertools import combinations

from htspec import UniformHypergraph, build, disjoint_union, random_hypertree


def random_nonpower_hypertree(
    total_edges: int, k: int, rng: random.Random
) -> UniformHypergraph:
    """Hypertree guaranteed not to be a power tree: one edge is forced to
    carry three vertices of degree >= 2 by hanging three fresh edges off
    three distinct vertices of the first edge."""
    if total_edges < 4:
        raise ValueError("need at least 4 edges to force a non-power tree")
    base = random_hypertree(total_edges - 3, k, rng)
    edges = [list(e) for e in base.edges]
    n = base.n
    for anchor in rng.sample(base.edges[0], 3):
        edges.append([anchor] + list(range(n + 1, n + k)))
        n += k - 1
    return build(k, n, edges)


def random_hyperforest(
    component_edge_counts: list[int], k: int, rng: random.Random
) -> tuple[UniformHypergraph, list[UniformHypergraph]]:
    parts = [random_hypertree(m, k, rng) for m in component_edge_counts]
    return disjoint_union(*parts), parts


def brute_matching_counts(H: UniformHypergraph) -> tuple[int, ...]:
    """Oracle reimplementation: scan all edge subsets with itertools."""
    sets = [frozenset(e) for e in H.edges]
    counts = [1]
    for size in range(1, H.m + 1):
        total = 0
        for combo in combinations(range(H.m), size):
            union: set[int] = set()
            ok = True
            for i in combo:
                if union & sets[i]:
                    ok = False
                    break
                union |= sets[i]
            if ok:
                total += 1
        if total == 0:
            break
        counts.append(total)
    return tuple(counts)


def brute_connected_edge_masks(H: UniformHypergraph) -> set[int]:
    """All nonempty edge subsets forming a connected sub-hypergraph,
    checked with a scan over all 2^m subsets and union-find."""
    sets = [frozenset(e) for e in H.edges]
    out: set[int] = set()
    for mask in range(1, 1 << H.m):
        members = [i for i in range(H.m) if mask >> i & 1]
        parent = {i: i for i in members}

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a, b in combinations(members, 2):
            if sets[a] & sets[b]:
                parent[find(a)] = find(b)
        if len({find(i) for i in members}) == 1:
            out.add(mask)
    return out


def brute_connected_vertex_subsets(H: UniformHypergraph) -> set[tuple[int, ...]]:
    """All U subseteq V whose induced subgraph is connected (2^n scan)."""
    out: set[tuple[int, ...]] = set()
    for mask in range(1, 1 << H.n):
        members = [v for v in range(1, H.n + 1) if mask >> (v - 1) & 1]
        inside = set(members)
        index = {v: i for i, v in enumerate(members)}
        parent = list(range(len(members)))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in H.edges:
            if inside.issuperset(e):
                r = find(index[e[0]])
                for v in e[1:]:
                    parent[find(index[v])] = r
                    r = find(r)
        if len({find(i) for i in range(len(members))}) == 1:
            out.add(tuple(members))
    return out
