"""k-uniform hypergraphs: representation, validation, generators, transforms.

Vertices are labeled 1..n.  Every hypergraph is stored in canonical form
(each edge sorted ascending, edge list sorted lexicographically), so two
equal hypergraphs compare bit-identically and hash consistently.  All
values are immutable after construction.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    NonUniformEdge,
    NotAHypertree,
    PowerBelowUniformity,
    ValidationError,
    VertexOutOfRange,
)


@dataclass(frozen=True)
class VertexSet:
    """Sorted set of vertex labels of some host hypergraph."""

    members: tuple[int, ...]

    @classmethod
    def of(cls, items: Iterable[int]) -> "VertexSet":
        return cls(tuple(sorted(set(items))))

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


@dataclass(frozen=True)
class UniformHypergraph:
    """Canonical k-uniform hypergraph on vertices 1..n.

    ``parent_vertices`` is populated by :func:`induced`: entry ``i``
    holds the label, in the graph this one was induced from, of vertex
    ``i + 1`` here.  It is metadata only and excluded from equality.
    """

    k: int
    n: int
    edges: tuple[tuple[int, ...], ...]
    parent_vertices: tuple[int, ...] | None = field(
        default=None, compare=False, repr=False
    )

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def degrees(self) -> list[int]:
        """Vertex degrees, 1-indexed (entry 0 is a dummy)."""
        deg = [0] * (self.n + 1)
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def edge_vertex_set(self, i: int) -> frozenset[int]:
        return frozenset(self.edges[i])


def build(
    k: int,
    n: int,
    edges: Sequence[Sequence[int]],
    parent_vertices: tuple[int, ...] | None = None,
) -> UniformHypergraph:
    """Validate and canonicalize a k-uniform hypergraph.

    Raises:
        NonUniformEdge: an edge has a number of distinct vertices != k.
        VertexOutOfRange: a vertex label lies outside 1..n.
        DuplicateEdge: two edges coincide as sets.
    """
    if k < 2:
        raise ValidationError(f"uniformity k must be >= 2, got {k}")
    if n < 1:
        raise ValidationError(f"vertex count n must be >= 1, got {n}")
    canon: list[tuple[int, ...]] = []
    for e in edges:
        distinct = set(e)
        if len(distinct) != k or len(tuple(e)) != k:
            raise NonUniformEdge(
                f"edge {sorted(distinct)} has {len(distinct)} distinct "
                f"vertices, expected {k}"
            )
        for v in distinct:
            if not isinstance(v, int) or v < 1 or v > n:
                raise VertexOutOfRange(f"vertex {v} outside 1..{n}")
        canon.append(tuple(sorted(distinct)))
    canon.sort()
    for a, b in zip(canon, canon[1:]):
        if a == b:
            raise DuplicateEdge(f"edge {list(a)} occurs twice")
    return UniformHypergraph(k, n, tuple(canon), parent_vertices)


def is_connected(H: UniformHypergraph) -> bool:
    """True iff the incidence structure has a single component.

    Isolated vertices count as components of their own.
    """
    parent = list(range(H.n + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in H.edges:
        r = find(e[0])
        for v in e[1:]:
            parent[find(v)] = r
    roots = {find(v) for v in range(1, H.n + 1)}
    return len(roots) == 1


def is_hypertree(H: UniformHypergraph) -> bool:
    """Connected and acyclic, i.e. connected with n = m(k-1) + 1."""
    return H.n == H.m * (H.k - 1) + 1 and is_connected(H)


def is_hyperforest(H: UniformHypergraph) -> bool:
    """Every connected component is a hypertree (or an isolated vertex)."""
    parent = list(range(H.n + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in H.edges:
        r = find(e[0])
        for v in e[1:]:
            parent[find(v)] = r
    comp_vertices: dict[int, int] = {}
    comp_edges: dict[int, int] = {}
    for v in range(1, H.n + 1):
        r = find(v)
        comp_vertices[r] = comp_vertices.get(r, 0) + 1
    for e in H.edges:
        r = find(e[0])
        comp_edges[r] = comp_edges.get(r, 0) + 1
    return all(
        comp_vertices[r] == comp_edges.get(r, 0) * (H.k - 1) + 1
        for r in comp_vertices
    )


def induced(H: UniformHypergraph, U: VertexSet | Iterable[int]) -> UniformHypergraph:
    """Induced sub-hypergraph on U, relabeled to 1..|U|.

    Edges are exactly those of H fully contained in U.  The original
    labels are retained in ``parent_vertices`` so eigenvector support
    arguments can map back into H.
    """
    members = U.members if isinstance(U, VertexSet) else tuple(sorted(set(U)))
    if not members:
        raise ValidationError("induced subgraph needs a nonempty vertex set")
    for v in members:
        if v < 1 or v > H.n:
            raise VertexOutOfRange(f"vertex {v} outside 1..{H.n}")
    relabel = {v: i + 1 for i, v in enumerate(members)}
    inside = set(members)
    sub_edges = [
        tuple(relabel[v] for v in e) for e in H.edges if inside.issuperset(e)
    ]
    return build(H.k, len(members), sub_edges, parent_vertices=members)


def pendant_edges(H: UniformHypergraph) -> list[tuple[int, ...]]:
    """Edges with exactly k-1 vertices of degree 1.

    An isolated edge has k such vertices and is therefore not pendant.
    """
    deg = H.degrees()
    return [
        e for e in H.edges if sum(1 for v in e if deg[v] == 1) == H.k - 1
    ]


def vertex_union(H: UniformHypergraph, edge_indices: Iterable[int]) -> VertexSet:
    """Union of the vertex sets of the given edges of H."""
    verts: set[int] = set()
    for i in edge_indices:
        verts.update(H.edges[i])
    return VertexSet.of(verts)


# -- generators ------------------------------------------------------------


def loose_path(t: int, k: int) -> UniformHypergraph:
    """Loose path with t edges: consecutive edges share exactly one vertex."""
    if t < 1:
        raise ValidationError("loose_path needs t >= 1")
    edges = [
        tuple(range((i - 1) * (k - 1) + 1, (i - 1) * (k - 1) + k + 1))
        for i in range(1, t + 1)
    ]
    return build(k, t * (k - 1) + 1, edges)


def star(t: int, k: int) -> UniformHypergraph:
    """Star with t edges all sharing vertex 1, otherwise disjoint."""
    if t < 1:
        raise ValidationError("star needs t >= 1")
    edges = []
    nxt = 2
    for _ in range(t):
        edges.append((1,) + tuple(range(nxt, nxt + k - 1)))
        nxt += k - 1
    return build(k, t * (k - 1) + 1, edges)


def comb(k: int) -> UniformHypergraph:
    """The k-comb: spine edge {1..k} plus k pairwise disjoint teeth.

    Tooth i is {i, i+k, ..., i+(k-1)k}; it meets the spine in vertex i
    only.  k*k vertices, k+1 edges.
    """
    if k < 2:
        raise ValidationError("comb needs k >= 2")
    edges = [tuple(range(1, k + 1))]
    for i in range(1, k + 1):
        edges.append(tuple(i + t * k for t in range(k)))
    return build(k, k * k, edges)


def power(G: UniformHypergraph, k: int) -> UniformHypergraph:
    """k-th power: pad every edge with fresh degree-1 vertices up to size k.

    Edge count is unchanged; the vertex count grows by m*(k - G.k).
    ``power(G, G.k)`` is G itself.
    """
    if k < G.k:
        raise PowerBelowUniformity(
            f"cannot lower uniformity: k={k} < base {G.k}"
        )
    if k == G.k:
        return G
    pad = k - G.k
    nxt = G.n
    edges = []
    for e in G.edges:
        edges.append(e + tuple(range(nxt + 1, nxt + pad + 1)))
        nxt += pad
    return build(k, nxt, edges)


def is_power_tree(H: UniformHypergraph) -> bool:
    """True iff H is the power of some 2-uniform tree.

    Structural test: a hypertree is a power tree exactly when no edge
    contains three or more vertices of degree >= 2 (three such vertices
    would carry three mutually disjoint neighbor edges, the comb-shaped
    obstruction; in a hypertree two neighbors through distinct vertices
    cannot meet again without closing a cycle).
    """
    if not is_hypertree(H):
        raise NotAHypertree("is_power_tree requires a hypertree")
    deg = H.degrees()
    return all(
        sum(1 for v in e if deg[v] >= 2) <= 2 for e in H.edges
    )


def disjoint_union(*graphs: UniformHypergraph) -> UniformHypergraph:
    """Disjoint union with vertex labels shifted into consecutive blocks."""
    if not graphs:
        raise ValidationError("disjoint_union needs at least one hypergraph")
    k = graphs[0].k
    if any(g.k != k for g in graphs):
        raise ValidationError("disjoint_union requires equal uniformity")
    edges: list[tuple[int, ...]] = []
    offset = 0
    for g in graphs:
        edges.extend(tuple(v + offset for v in e) for e in g.edges)
        offset += g.n
    return build(k, offset, edges)


def random_hypertree(
    edge_count: int, k: int, rng: random.Random
) -> UniformHypergraph:
    """Random hypertree grown by attaching pendant edges one at a time.

    Every hypertree arises this way (reverse pendant-edge deletion), so
    the generator spans the whole class, though not uniformly.
    """
    if edge_count < 1:
        raise ValidationError("random_hypertree needs edge_count >= 1")
    n = k
    edges = [tuple(range(1, k + 1))]
    for _ in range(edge_count - 1):
        anchor = rng.randint(1, n)
        edges.append((anchor,) + tuple(range(n + 1, n + k)))
        n += k - 1
    return build(k, n, edges)


# -- canonical JSON file format ---------------------------------------------


def to_json_dict(H: UniformHypergraph) -> dict:
    return {"k": H.k, "n": H.n, "edges": [list(e) for e in H.edges]}


def from_json_dict(obj: object) -> UniformHypergraph:
    """Parse the hypergraph JSON object, canonicalizing unsorted input."""
    if not isinstance(obj, dict):
        raise ValidationError("hypergraph JSON must be an object")
    try:
        k, n, edges = obj["k"], obj["n"], obj["edges"]
    except KeyError as missing:
        raise ValidationError(f"hypergraph JSON missing key {missing}") from None
    if not isinstance(k, int) or not isinstance(n, int):
        raise ValidationError("hypergraph JSON: k and n must be integers")
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise ValidationError("hypergraph JSON: edges must be a list of lists")
    return build(k, n, edges)


def dumps(H: UniformHypergraph) -> str:
    """Canonical JSON text: fixed key order, edges sorted, one line."""
    return json.dumps(to_json_dict(H))


def loads(text: str) -> UniformHypergraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON: {exc}") from None
    return from_json_dict(obj)
