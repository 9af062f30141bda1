"""Connected edge-subset enumeration and the subtree polynomial catalog."""

import random

import pytest

import helpers
from htspec import (
    alpha_poly,
    build,
    comb,
    connected_edge_subsets,
    distinct_matching_polynomials,
    induced,
    induced_closure_holds,
    is_hypertree,
    loose_path,
    matching_counts_tree,
    pendant_edges,
    random_hypertree,
    subtree_hypergraph,
)
from htspec.core import vertex_union
from htspec.errors import CatalogTooLarge, NotAHypertree
from htspec.fixtures import hypergraph
from htspec.subtrees import EdgeSubset


def test_single_edge_catalog():
    H = build(3, 3, [[1, 2, 3]])
    assert [s.indices for s in connected_edge_subsets(H)] == [(0,)]
    assert distinct_matching_polynomials(H).polys == (alpha_poly([-1, 1]),)


def test_loose_path_two_edges():
    subsets = connected_edge_subsets(loose_path(2, 3))
    assert [s.indices for s in subsets] == [(0,), (1,), (0, 1)]


def test_comb3_subsets():
    H = comb(3)  # edge 0 is the spine after canonical sort
    subsets = {s.indices for s in connected_edge_subsets(H)}
    assert len(subsets) == 11
    spine_containing = {s for s in subsets if 0 in s}
    assert len(spine_containing) == 8  # spine plus any tooth subset
    assert {s for s in subsets if 0 not in s} == {(1,), (2,), (3,)}


def test_enumeration_matches_bruteforce_masks():
    rng = random.Random(41)
    for _ in range(20):
        H = random_hypertree(rng.randint(1, 7), rng.choice([2, 3, 4]), rng)
        masks = {s.mask() for s in connected_edge_subsets(H)}
        assert masks == helpers.brute_connected_edge_masks(H)


def test_catalog_size_of_combs():
    # k single teeth plus spine together with any tooth subset
    for k in range(2, 6):
        subsets = connected_edge_subsets(comb(k))
        assert len(subsets) == k + 2**k
        assert {s.mask() for s in subsets} == helpers.brute_connected_edge_masks(
            comb(k)
        )


def test_subset_cap():
    with pytest.raises(CatalogTooLarge):
        connected_edge_subsets(comb(4), max_subsets=10)


def test_requires_hypertree():
    with pytest.raises(NotAHypertree):
        connected_edge_subsets(build(3, 4, [[1, 2, 3], [1, 2, 4]]))


def test_every_subset_is_an_induced_hypertree():
    rng = random.Random(43)
    for _ in range(10):
        H = random_hypertree(rng.randint(1, 6), rng.choice([3, 4]), rng)
        for F in connected_edge_subsets(H):
            assert induced_closure_holds(H, F)
            assert is_hypertree(subtree_hypergraph(H, F))


def test_closure_examples():
    H = comb(3)
    assert induced_closure_holds(H, EdgeSubset((0,)))  # spine alone
    H3 = hypergraph("H3")
    assert induced_closure_holds(H3, EdgeSubset(tuple(range(5))))


def test_enumeration_completeness_against_vertex_scan():
    rng = random.Random(47)
    hosts = [comb(3), hypergraph("H3")]
    hosts += [random_hypertree(rng.randint(2, 6), 3, rng) for _ in range(3)]
    hosts += [random_hypertree(7, 3, rng)]  # n = 15
    for H in hosts:
        from_edges = {
            vertex_union(H, F.indices).members
            for F in connected_edge_subsets(H)
        }
        singletons = {(v,) for v in range(1, H.n + 1)}
        assert from_edges | singletons == helpers.brute_connected_vertex_subsets(H)


def test_pendant_deletion_reachability():
    rng = random.Random(53)
    for _ in range(8):
        H = random_hypertree(rng.randint(2, 6), rng.choice([3, 4]), rng)
        for F in connected_edge_subsets(H):
            target = set(F.indices)
            current = set(range(H.m))
            while current != target:
                sub = induced(H, vertex_union(H, current))
                pend = pendant_edges(sub)
                # map pendant edges of the sub back to host indices
                back = dict(
                    zip(
                        range(1, sub.n + 1),
                        sub.parent_vertices,
                    )
                )
                host_pendants = {
                    tuple(sorted(back[v] for v in e)) for e in pend
                }
                candidates = [
                    i
                    for i in current - target
                    if H.edges[i] in host_pendants
                ]
                assert candidates, "no pendant deletion available"
                current.remove(min(candidates))


def test_catalog_h3_polynomials():
    catalog = distinct_matching_polynomials(hypergraph("H3"))
    expected = {
        (-1, 1),
        (-2, 1),
        (1, -3, 1),
        (-3, 1),
        (-1, 3, -4, 1),
        (2, -4, 1),
        (-2, 5, -5, 1),
    }
    assert {p.coeffs for p in catalog.polys} == expected
    assert len(catalog.polys) == 7


def test_catalog_comb3_polynomials():
    catalog = distinct_matching_polynomials(comb(3))
    assert {p.coeffs for p in catalog.polys} == {
        (-1, 1),
        (-2, 1),
        (1, -3, 1),
        (-1, 3, -4, 1),
    }
    assert len(catalog.subsets) == 11


def test_catalog_polys_match_per_subset_dp():
    rng = random.Random(59)
    H = random_hypertree(6, 3, rng)
    catalog = distinct_matching_polynomials(H)
    for F, idx in zip(catalog.subsets, catalog.poly_of_subset):
        sub = subtree_hypergraph(H, F)
        from htspec import to_alpha_poly

        assert to_alpha_poly(matching_counts_tree(sub)) == catalog.polys[idx]
        assert F.indices in {
            catalog.subsets[j].indices for j in catalog.witnesses(idx)
        }


def test_catalog_json_shape():
    blob = distinct_matching_polynomials(loose_path(2, 3)).to_json_dict()
    assert blob["subtrees"] == [
        {"edges": [0], "phi_alpha": ["-1", "1"]},
        {"edges": [1], "phi_alpha": ["-1", "1"]},
        {"edges": [0, 1], "phi_alpha": ["-2", "1"]},
    ]
    assert blob["distinct_polys"] == [["-2", "1"], ["-1", "1"]]
