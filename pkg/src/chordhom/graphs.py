"""Simple graphs on vertices 0..n-1 with bitmask adjacency.

Neighbourhoods are Python ints used as bitsets, so containment tests such as
``N(v) <= N(u)`` are a single ``a & ~b == 0`` and independence checks are word
parallel.  Graphs are immutable; every operation returns a new graph.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import Optional


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    adj: tuple[int, ...]
    labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        for v, nb in enumerate(self.adj):
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if nb >> self.n:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("one label per vertex required")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(tuple(adj), None if labels is None else tuple(labels))

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_independent(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in iter_bits(mask))

    def label(self, v: int):
        return v if self.labels is None else self.labels[v]

    def induced(self, mask: int) -> "Graph":
        """Subgraph induced on the vertices in ``mask``, renumbered in increasing order."""
        verts = list(iter_bits(mask))
        index = {v: i for i, v in enumerate(verts)}
        adj = []
        for v in verts:
            nb = 0
            for u in iter_bits(self.adj[v] & mask):
                nb |= 1 << index[u]
            adj.append(nb)
        labels = None if self.labels is None else tuple(self.labels[v] for v in verts)
        return Graph(tuple(adj), labels)

    def delete(self, mask: int) -> "Graph":
        return self.induced(self.all_mask & ~mask)

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by smallest vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in iter_bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        adj = self.adj + tuple(nb << shift for nb in other.adj)
        labels = None
        if self.labels is not None or other.labels is not None:
            left = self.labels or tuple(range(self.n))
            right = other.labels or tuple(range(shift, shift + other.n))
            labels = tuple(left) + tuple(right)
        return Graph(adj, labels)

    def complement(self) -> "Graph":
        full = self.all_mask
        return Graph(tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(self.adj)))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for v, nb in enumerate(self.adj):
            m = 0
            for u in iter_bits(nb):
                m |= 1 << perm[u]
            adj[perm[v]] = m
        return Graph(tuple(adj))


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    out = Graph.empty(0)
    for g in graphs:
        out = out.disjoint_union(g)
    return out


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """Vertex 0 is the centre."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(m: int, n: int) -> Graph:
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


# ---------------------------------------------------------------------------
# bipartiteness and the complement graph


@dataclass(frozen=True)
class Bipartition:
    side_a: int  # vertex mask
    side_b: int

    def side(self, v: int) -> str:
        return "A" if self.side_a >> v & 1 else "B"

    def sizes(self) -> tuple[int, int]:
        return self.side_a.bit_count(), self.side_b.bit_count()


def is_bipartite(g: Graph) -> Optional[Bipartition]:
    """BFS 2-colouring; the smallest vertex of each component goes to side A."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = [start]
        for v in queue:
            for u in iter_bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    a = sum(1 << v for v in range(g.n) if color[v] == 0)
    return Bipartition(a, g.all_mask & ~a)


def all_bipartitions(g: Graph) -> list[Bipartition]:
    """Every valid bipartition, obtained by flipping sides per component."""
    base = is_bipartite(g)
    if base is None:
        return []
    comps = g.components()
    out = []
    # flipping every component at once gives the mirrored partition; keep one of each pair
    for flips in itertools.product((False, True), repeat=max(len(comps) - 1, 0)):
        a = base.side_a
        for comp, flip in zip(comps[1:], flips):
            if flip:
                a ^= comp
        out.append(Bipartition(a, g.all_mask & ~a))
    return out


def check_bipartition(g: Graph, b: Bipartition) -> bool:
    if b.side_a & b.side_b or (b.side_a | b.side_b) != g.all_mask:
        return False
    return all(not (g.adj[v] & b.side_a) for v in iter_bits(b.side_a)) and all(
        not (g.adj[v] & b.side_b) for v in iter_bits(b.side_b)
    )


def complement_graph(g: Graph, b: Bipartition) -> Graph:
    """Cross-side non-edges of ``g``; no edges inside a side."""
    adj = []
    for v in range(g.n):
        other = b.side_b if b.side_a >> v & 1 else b.side_a
        adj.append(other & ~g.adj[v])
    return Graph(tuple(adj))


def edged_components(g: Graph) -> int:
    """Number of connected components containing at least one edge."""
    return sum(1 for comp in g.components() if comp & (comp - 1))


def dominates(g: Graph, u: int, v: int) -> bool:
    """True iff N(v) is contained in N(u)."""
    if u == v:
        raise ValueError("dominates() needs two distinct vertices")
    return not (g.adj[v] & ~g.adj[u])


# ---------------------------------------------------------------------------
# isomorphism-invariant keys


def _refine(g: Graph) -> list[int]:
    """Colour refinement; returns a stable colour per vertex (isomorphism invariant)."""
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in iter_bits(g.adj[v])))) for v in range(g.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_key(g: Graph, budget: int = 40320) -> tuple:
    """Isomorphism-class key: equal keys always mean isomorphic graphs.

    Colour refinement splits vertices into cells; the minimum adjacency code is
    taken over all cell-respecting orderings.  When that search would exceed
    ``budget`` orderings, the labelled adjacency is returned instead, so two
    isomorphic graphs may then get different keys.  Caching on the key stays
    sound either way.
    """
    colors = _refine(g)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    ordered = [cells[c] for c in sorted(cells)]
    count = 1
    for cell in ordered:
        count *= math.factorial(len(cell))
    if count > budget:
        return ("labelled", g.n, g.adj)
    edges = g.edges()
    best = None
    for choice in itertools.product(*(itertools.permutations(cell) for cell in ordered)):
        order = [v for part in choice for v in part]
        pos = {v: i for i, v in enumerate(order)}
        code = tuple(sorted(tuple(sorted((pos[a], pos[b]))) for a, b in edges))
        if best is None or code < best:
            best = code
    return ("canon", g.n, tuple(sorted(colors)), best)
