"""Bit-packed simple graphs and their elementary counting invariants.

A graph on n vertices (1 <= n <= 64) is stored as n adjacency rows, one
64-bit word per row: bit j of row i is 1 iff {i, j} is an edge.  Vertex
subsets travel as plain int bitmasks.  Pairs {i, j} with i < j are indexed
in colexicographic order, rank(i, j) = i + C(j, 2), and the `code` of a
graph packs its upper triangle into one int using that order (the same
order graph6 uses for its bit stream).

The a0/a1/a2 counts classify unordered {edge, non-edge} pairs: a0 counts
the vertex-disjoint ones, a1 the ones sharing a vertex, a2 = a0 + a1 all
of them.  A 3-element vertex set is 3-homogeneous when it induces a
triangle in the graph or in its complement; h3 counts those.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .errors import DomainError, EmptySubset, OrderMismatch

MAX_ORDER = 64


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def pair_rank(i: int, j: int) -> int:
    """Colex rank of the pair {i, j} among all 2-subsets."""
    if i > j:
        i, j = j, i
    return i + comb(j, 2)


def pair_unrank(r: int) -> tuple[int, int]:
    j = 1
    while comb(j + 1, 2) <= r:
        j += 1
    return r - comb(j, 2), j


@dataclass(frozen=True)
class Graph:
    """Labeled simple graph on vertices 0..n-1."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise DomainError(f"order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise DomainError("adjacency row count must equal the order")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise DomainError(f"row {i} has bits at or beyond the order")
            if row >> i & 1:
                raise DomainError(f"nonzero diagonal at vertex {i}")
        for i in range(self.n):
            for j in bits_of(self.adj[i]):
                if not self.adj[j] >> i & 1:
                    raise DomainError(f"asymmetric adjacency at {{{i},{j}}}")

    # -- basic accessors -------------------------------------------------

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, x: int) -> int:
        return self.adj[x].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for j in range(self.n):
            for i in bits_of(self.adj[j] & ((1 << j) - 1)):
                yield (i, j)

    @property
    def code(self) -> int:
        """Upper triangle packed in colex pair order."""
        c = 0
        for i, j in self.edges():
            c |= 1 << pair_rank(i, j)
        return c

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges())})"

    # -- constructors ----------------------------------------------------

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for i, j in edges:
            if i == j:
                raise DomainError(f"loop at vertex {i}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return Graph(n, tuple(rows))

    @staticmethod
    def from_code(n: int, code: int) -> "Graph":
        rows = [0] * n
        for b in bits_of(code):
            i, j = pair_unrank(b)
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return Graph(n, tuple(rows))

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, (0,) * n)

    @staticmethod
    def complete(n: int) -> "Graph":
        full = (1 << n) - 1
        return Graph(n, tuple(full ^ (1 << i) for i in range(n)))

    @staticmethod
    def cycle(n: int) -> "Graph":
        if n < 3:
            raise DomainError("a cycle needs at least 3 vertices")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @staticmethod
    def path(n: int) -> "Graph":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @staticmethod
    def random(n: int, rng: random.Random, p: float = 0.5) -> "Graph":
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class InvariantBundle:
    """Single-graph counting invariants.

    e, e_bar: edge counts of the graph and its complement.
    a0/a1/a2: {edge, non-edge} pair counts (disjoint / sharing / all).
    t: triangle count.  h3: number of 3-homogeneous subsets.
    """

    e: int
    e_bar: int
    a0: int
    a1: int
    a2: int
    t: int
    h3: int


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ row ^ (1 << i) for i, row in enumerate(g.adj)))


def boolean_sum(g: Graph, h: Graph) -> Graph:
    """Graph whose edges lie in exactly one of the two edge sets."""
    if g.n != h.n:
        raise OrderMismatch(f"orders differ: {g.n} vs {h.n}")
    return Graph(g.n, tuple(a ^ b for a, b in zip(g.adj, h.adj)))


def intersection(g: Graph, h: Graph) -> Graph:
    if g.n != h.n:
        raise OrderMismatch(f"orders differ: {g.n} vs {h.n}")
    return Graph(g.n, tuple(a & b for a, b in zip(g.adj, h.adj)))


def induced(g: Graph, vertices: Iterable[int] | int) -> Graph:
    """Restriction to a vertex subset, relabeled 0..|K|-1 in increasing
    order of original labels."""
    if isinstance(vertices, int):
        sub = list(bits_of(vertices))
    else:
        sub = sorted(set(vertices))
    if not sub:
        raise EmptySubset("induced subgraph needs at least one vertex")
    if sub[-1] >= g.n or sub[0] < 0:
        raise DomainError("subset contains a vertex outside the graph")
    rows = []
    for i in sub:
        row = 0
        for b, j in enumerate(sub):
            if g.adj[i] >> j & 1:
                row |= 1 << b
        rows.append(row)
    return Graph(len(sub), tuple(rows))


def subgraph_edge_count(g: Graph, mask: int) -> int:
    """Edge count of the restriction to the vertex bitmask, no relabeling."""
    e = 0
    m = mask
    while m:
        low = m & -m
        m ^= low
        e += (g.adj[low.bit_length() - 1] & m).bit_count()
    return e


def triangle_count(g: Graph) -> int:
    t = 0
    for i, j in g.edges():
        t += (g.adj[i] & g.adj[j]).bit_count()
    return t // 3


def homogeneous_triples(g: Graph) -> set[tuple[int, int, int]]:
    """3-element subsets inducing a triangle in g or in its complement."""
    out = set()
    for trip in combinations(range(g.n), 3):
        e = subgraph_edge_count(g, mask_of(trip))
        if e == 0 or e == 3:
            out.add(trip)
    return out


def invariants(g: Graph) -> InvariantBundle:
    """Counting invariants with a0/a1 by direct enumeration of
    {edge, non-edge} pairs split by disjointness."""
    edge_masks = []
    nonedge_masks = []
    for i, j in combinations(range(g.n), 2):
        m = 1 << i | 1 << j
        (edge_masks if g.has_edge(i, j) else nonedge_masks).append(m)
    a0 = 0
    for em in edge_masks:
        for nm in nonedge_masks:
            if not em & nm:
                a0 += 1
    a2 = len(edge_masks) * len(nonedge_masks)
    t = triangle_count(g)
    h3 = t + triangle_count(complement(g))
    return InvariantBundle(
        e=len(edge_masks),
        e_bar=len(nonedge_masks),
        a0=a0,
        a1=a2 - a0,
        a2=a2,
        t=t,
        h3=h3,
    )


def degree(g: Graph, x: int) -> int:
    return g.degree(x)


def is_regular(g: Graph) -> bool:
    return len({g.degree(x) for x in range(g.n)}) == 1


def is_claw_free(g: Graph) -> bool:
    """True iff no 4-subset induces a star on 4 vertices."""
    for x in range(g.n):
        nbrs = g.adj[x]
        if nbrs.bit_count() < 3:
            continue
        for a in bits_of(nbrs):
            rest_a = nbrs & ~g.adj[a] & ~((1 << (a + 1)) - 1)
            for b in bits_of(rest_a):
                if rest_a & ~g.adj[b] & ~((1 << (b + 1)) - 1):
                    return False
    return True


class BipartiteKernelClass(Enum):
    COMPLETE_BIPARTITE = "CompleteBipartite"
    COMPLEMENT_OF_COMPLETE_BIPARTITE = "ComplementOfCompleteBipartite"
    BOTH = "Both"
    NEITHER = "Neither"


def _components(g: Graph) -> list[int]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bits_of(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= nxt
        comps.append(comp)
        seen |= comp
    return comps


def _is_clique_mask(g: Graph, mask: int) -> bool:
    for v in bits_of(mask):
        if g.adj[v] & mask != mask ^ (1 << v):
            return False
    return True


def is_complete_bipartite(g: Graph) -> bool:
    """Vertex set splits into two parts (one possibly empty) with all
    cross pairs edges and no internal edges.  Equivalently the complement
    is a disjoint union of at most two cliques."""
    comps = _components(complement(g))
    return len(comps) <= 2 and all(_is_clique_mask(complement(g), c) for c in comps)


def classify_bipartite_kernel(g: Graph) -> BipartiteKernelClass:
    """Classify against the complete-bipartite family.  The empty and
    complete graphs report Both by convention (both are boundary members
    of the family and of its complement family)."""
    e = g.edge_count
    if e == 0 or e == comb(g.n, 2):
        return BipartiteKernelClass.BOTH
    cb = is_complete_bipartite(g)
    cc = is_complete_bipartite(complement(g))
    if cb and cc:
        return BipartiteKernelClass.BOTH
    if cb:
        return BipartiteKernelClass.COMPLETE_BIPARTITE
    if cc:
        return BipartiteKernelClass.COMPLEMENT_OF_COMPLETE_BIPARTITE
    return BipartiteKernelClass.NEITHER
