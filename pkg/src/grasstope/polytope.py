"""Vertex and edge combinatorics of matroid basis polytopes, all in integers.

Vertices are the 0/1 indicator vectors of bases; two bases span an edge
exactly when they differ by a single swap. The local shape at a vertex is
captured by a bipartite swap graph on [n]: element i outside the basis and
j inside it are joined when swapping j out for i lands on another basis.
The vertex is simple (meets only dim-many edges) exactly when that graph is
acyclic, which union-find detects during edge insertion.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .matroid import (
    ComponentDecomposition,
    ConsistencyError,
    Matroid,
    as_mask,
    components,
    subset_elements,
)
from .unionfind import DisjointSet


def vertices(m: Matroid) -> tuple[tuple[int, ...], ...]:
    """0/1 coordinate vectors of the polytope vertices, one per basis."""
    return tuple(tuple((b >> i) & 1 for i in range(m.n)) for b in m.bases)


def edges(m: Matroid) -> tuple[tuple[int, int], ...]:
    """All basis pairs (I, J), I < J as masks, with |I & J| = k - 1."""
    out = []
    bs = m.bases
    for x in range(len(bs)):
        bx = bs[x]
        for y in range(x + 1, len(bs)):
            if (bx & ~bs[y]).bit_count() == 1:
                out.append((bx, bs[y]))
    return tuple(out)


def dimension(m: Matroid) -> int:
    """Dimension of the basis polytope: n minus the number of blocks."""
    return m.n - components(m).q


@dataclass(frozen=True)
class VertexGraph:
    """The bipartite swap graph at one vertex of the basis polytope.

    `edges` holds pairs (i, j) with i outside the base and j inside it,
    sorted ascending; each pair corresponds to the edge vector e_i - e_j
    pointing to the adjacent vertex, so `edges` and `roots` are in bijection.
    """

    n: int
    base: int
    edges: tuple[tuple[int, int], ...]

    @property
    def roots(self) -> tuple[tuple[int, int], ...]:
        """Edge vectors as (plus, minus) element pairs: e_plus - e_minus."""
        return self.edges

    def degree(self, v: int) -> int:
        return sum(1 for i, j in self.edges if v == i or v == j)

    def degrees(self) -> list[int]:
        """Degree of every vertex, index 1..n (slot 0 unused)."""
        deg = [0] * (self.n + 1)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def is_forest(self) -> bool:
        dsu = DisjointSet(self.n + 1)
        return all(dsu.union(i, j) for i, j in self.edges)

    def partition(self) -> tuple[tuple[int, ...], ...]:
        """Connected components of [n], isolated vertices included."""
        dsu = DisjointSet(self.n + 1)
        for i, j in self.edges:
            dsu.union(i, j)
        blocks = [tuple(g) for g in dsu.groups().values() if g and g[0] >= 1]
        blocks.sort(key=lambda blk: blk[0])
        return tuple(blocks)


def vertex_graph(m: Matroid, base: int | Iterable[int]) -> VertexGraph:
    """Swap graph at the vertex of `base`; raises if `base` is not a basis."""
    bmask = as_mask(m.n, base)
    if bmask not in m.basis_set:
        raise ValueError(f"{{{','.join(map(str, subset_elements(bmask)))}}} is not a basis")
    pairs = []
    for other in m.bases:
        incoming = other & ~bmask
        if incoming.bit_count() == 1:
            pairs.append((incoming.bit_length(), (bmask & ~other).bit_length()))
    pairs.sort()
    return VertexGraph(m.n, bmask, tuple(pairs))


def is_simple_at(m: Matroid, base: int | Iterable[int]) -> bool:
    """Whether the polytope is simple at the given vertex (swap graph acyclic)."""
    return vertex_graph(m, base).is_forest()


@dataclass(frozen=True)
class SimplicityVerdict:
    simple: bool
    witness: int | None = None

    def witness_elements(self) -> tuple[int, ...] | None:
        return None if self.witness is None else subset_elements(self.witness)


def is_simple(m: Matroid) -> SimplicityVerdict:
    """Check simplicity at every vertex; witness is the first non-simple one."""
    for b in m.bases:
        if not vertex_graph(m, b).is_forest():
            return SimplicityVerdict(False, b)
    return SimplicityVerdict(True)


def exchange_swap(base: int, swap: int) -> int:
    """Apply a balanced swap set to a basis mask: the symmetric difference.

    `swap` must meet the basis and its complement in the same positive
    number s of elements; the result then shares k - s elements with `base`.
    """
    inside = (swap & base).bit_count()
    outside = (swap & ~base).bit_count()
    if inside != outside or inside == 0:
        raise ValueError(
            f"swap set must balance across the basis: {inside} inside, {outside} outside"
        )
    return base ^ swap


def balanced_swaps(base: int, n: int, s: int) -> Iterator[int]:
    """All swap masks meeting the basis and its complement in s elements each."""
    inside = subset_elements(base)
    outside = subset_elements(((1 << n) - 1) & ~base)
    for ins in combinations(inside, s):
        ins_mask = 0
        for e in ins:
            ins_mask |= 1 << (e - 1)
        for outs in combinations(outside, s):
            mask = ins_mask
            for e in outs:
                mask |= 1 << (e - 1)
            yield mask


def nonsimple_neighbor(m: Matroid, base: int | Iterable[int]) -> int:
    """From a simple vertex of a full-dimensional polytope, walk one edge to a
    non-simple vertex.

    Requires k >= 2, n - k >= 2 and dim = n - 1; the simple vertex makes the
    swap graph a spanning tree, an internal edge {i, j} of the tree (both
    endpoints of degree >= 2) is chosen with (i, j) lexicographically least,
    and the swap across it lands on a non-simple adjacent vertex. The
    postcondition is re-verified before returning.
    """
    bmask = as_mask(m.n, base)
    if bmask not in m.basis_set:
        raise ValueError(f"{{{','.join(map(str, subset_elements(bmask)))}}} is not a basis")
    if m.k < 2 or m.n - m.k < 2:
        raise ValueError(f"need rank and corank at least 2, got k={m.k}, n-k={m.n - m.k}")
    if dimension(m) != m.n - 1:
        raise ValueError("polytope is not full-dimensional")
    graph = vertex_graph(m, bmask)
    if not graph.is_forest():
        raise ValueError("vertex is not simple")
    deg = graph.degrees()
    internal = [(i, j) for i, j in graph.edges if deg[i] >= 2 and deg[j] >= 2]
    if not internal:
        raise ConsistencyError("spanning tree with both parts >= 2 has no internal edge")
    i, j = min(internal)
    neighbor = bmask ^ (1 << (i - 1)) ^ (1 << (j - 1))
    if neighbor not in m.basis_set:
        raise ConsistencyError("swap across a tree edge did not land on a basis")
    if vertex_graph(m, neighbor).is_forest():
        raise ConsistencyError("constructed neighbor is simple; expected non-simple")
    return neighbor


def vertex_partition_matches_components(m: Matroid, decomp: ComponentDecomposition | None = None) -> bool:
    """Whether every vertex's swap-graph components equal the global blocks."""
    if decomp is None:
        decomp = components(m)
    expected = tuple(elems for elems, _ in decomp.blocks)
    return all(vertex_graph(m, b).partition() == expected for b in m.bases)
