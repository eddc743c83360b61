"""Immutable simple-graph type on dense integer labels, with bitset adjacency.

Vertices are 0..n-1; each vertex stores its neighborhood as an int bitmask,
which keeps complement/join/closure scans to a handful of word operations at
the orders this library targets (n up to a few hundred).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

VERTEX_CONNECTIVITY_LIMIT = 12
ISOMORPHISM_LIMIT = 64


class LimitError(RuntimeError):
    """An operation was invoked above its configured small-instance limit."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: ``adj[i]`` has bit ``j`` set iff ij is an edge."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError("graph order must be positive")
        if len(self.adj) != self.n:
            raise ValueError("adjacency table length differs from order")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"neighbor index out of range at vertex {i}")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
        for i in range(self.n):
            row = self.adj[i]
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency at pair ({i}, {j})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop ({u}, {v})")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees())

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2


def complement(g: Graph) -> Graph:
    """Edge ij present in the output iff absent in ``g`` (i != j)."""
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full & ~row & ~(1 << i)) for i, row in enumerate(g.adj)))


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; ``h``'s vertices are relabeled to g.n..g.n+h.n-1."""
    shifted = tuple(row << g.n for row in h.adj)
    return Graph(g.n + h.n, g.adj + shifted)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    rows = [row | h_mask for row in g.adj]
    rows += [(row << g.n) | g_mask for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the permutation ``perm`` (old label -> new label) to the vertices."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of 0..n-1")
    rows = [0] * g.n
    for old in range(g.n):
        new_row = 0
        for nb in bits(g.adj[old]):
            new_row |= 1 << perm[nb]
        rows[perm[old]] = new_row
    return Graph(g.n, tuple(rows))


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Vertex degrees sorted nondecreasingly."""
    return tuple(sorted(g.degrees()))


def _reach(adj: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside the ``allowed`` mask."""
    reached = 1 << start
    frontier = reached
    while frontier:
        new = 0
        for v in bits(frontier):
            new |= adj[v]
        new &= allowed & ~reached
        reached |= new
        frontier = new
    return reached


def _connected_within(g: Graph, mask: int) -> bool:
    """Whether the induced subgraph on the ``mask`` vertices is connected."""
    if mask == 0:
        return True
    start = (mask & -mask).bit_length() - 1
    return _reach(g.adj, start, mask) == mask


def is_connected(g: Graph) -> bool:
    return _connected_within(g, (1 << g.n) - 1)


def vertex_connectivity(g: Graph, limit: int = VERTEX_CONNECTIVITY_LIMIT) -> int:
    """Minimum vertex-cut size by exhaustive cut enumeration; kappa(K_n) = n-1.

    Only intended for small instances; raises LimitError above ``limit``.
    """
    if g.n > limit:
        raise LimitError(f"vertex_connectivity limited to n <= {limit}, got n = {g.n}")
    if not is_connected(g):
        raise ValueError("vertex connectivity requires a connected graph")
    if g.is_complete():
        return g.n - 1
    full = (1 << g.n) - 1
    for t in range(1, g.n - 1):
        for cut in itertools.combinations(range(g.n), t):
            cut_mask = 0
            for v in cut:
                cut_mask |= 1 << v
            if not _connected_within(g, full & ~cut_mask):
                return t
    raise AssertionError("non-complete connected graph must have a cut")


def connectivity_at_most(g: Graph, k: int) -> bool:
    """Whether some vertex cut of size <= k exists (g connected, not complete)."""
    if g.is_complete():
        return g.n - 1 <= k
    if g.min_degree() <= k:
        return True
    full = (1 << g.n) - 1
    for t in range(1, min(k, g.n - 2) + 1):
        for cut in itertools.combinations(range(g.n), t):
            cut_mask = 0
            for v in cut:
                cut_mask |= 1 << v
            if not _connected_within(g, full & ~cut_mask):
                return True
    return False


def _refined_colors(graphs: Sequence[Graph]) -> list[list[int]] | None:
    """Joint color refinement; returns per-graph stable colorings, or None when
    the color histograms diverge (the graphs cannot be isomorphic)."""
    colorings = [g.degrees() for g in graphs]
    while True:
        signatures: dict[tuple, int] = {}
        new_colorings = []
        for g, colors in zip(graphs, colorings):
            new = []
            for v in range(g.n):
                sig = (colors[v], tuple(sorted(colors[u] for u in bits(g.adj[v]))))
                if sig not in signatures:
                    signatures[sig] = len(signatures)
                new.append(signatures[sig])
            new_colorings.append(new)
        histograms = [sorted(c) for c in new_colorings]
        if any(h != histograms[0] for h in histograms[1:]):
            return None
        if all(
            len(set(new)) == len(set(old))
            for new, old in zip(new_colorings, colorings)
        ):
            return new_colorings
        colorings = new_colorings


def are_isomorphic(g: Graph, h: Graph, limit: int = ISOMORPHISM_LIMIT) -> bool:
    """Adjacency-preserving bijection test via degree-partition-refined backtracking."""
    if g.n > limit or h.n > limit:
        raise LimitError(f"are_isomorphic limited to n <= {limit}")
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if degree_sequence(g) != degree_sequence(h):
        return False
    refined = _refined_colors([g, h])
    if refined is None:
        return False
    g_colors, h_colors = refined

    h_by_color: dict[int, list[int]] = {}
    for v in range(h.n):
        h_by_color.setdefault(h_colors[v], []).append(v)
    class_size = {c: len(vs) for c, vs in h_by_color.items()}
    # Most-constrained vertices first keeps the search shallow on the
    # structured families this is used for.
    order = sorted(range(g.n), key=lambda v: (class_size[g_colors[v]], g_colors[v], v))

    image = [-1] * g.n
    used_mask = 0

    def extend(pos: int) -> bool:
        nonlocal used_mask
        if pos == g.n:
            return True
        gv = order[pos]
        mapped_nbrs = [u for u in bits(g.adj[gv]) if image[u] >= 0]
        want = 0
        for u in mapped_nbrs:
            want |= 1 << image[u]
        mapped_image = 0
        for u in range(g.n):
            if image[u] >= 0:
                mapped_image |= 1 << image[u]
        for hv in h_by_color[g_colors[gv]]:
            if used_mask >> hv & 1:
                continue
            if h.adj[hv] & mapped_image != want:
                continue
            image[gv] = hv
            used_mask |= 1 << hv
            if extend(pos + 1):
                return True
            image[gv] = -1
            used_mask &= ~(1 << hv)
        return False

    return extend(0)
