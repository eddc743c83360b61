"""Exact decision of k-leaf-connectivity by exhaustive search, with witnesses.

A spanning tree with leaf set exactly S decomposes into a spanning tree of
the induced subgraph on V minus S plus one edge per S-vertex, where distinct
internal-tree leaves must receive distinct S-partners. The search therefore
enumerates spanning trees of the (much smaller) internal subgraph and closes
each candidate with a bipartite matching, instead of walking all spanning
trees of the whole graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import (
    VERTEX_CONNECTIVITY_LIMIT,
    Graph,
    LimitError,
    bits,
    connectivity_at_most,
    is_connected,
)

ORACLE_LIMIT = 10

Edge = tuple[int, int]


@dataclass(frozen=True)
class LeafDecision:
    """Outcome of the k-leaf-connectivity decision.

    When ``value`` is False, ``counterexample`` is the lexicographically first
    k-subset admitting no spanning tree with that exact leaf set. Witness
    trees (one per checked subset, when requested) stop at the failure.
    """

    value: bool
    counterexample: tuple[int, ...] | None = None
    witness_trees: dict[tuple[int, ...], tuple[Edge, ...]] | None = None


def _verify_leaf_tree(g: Graph, s_mask: int, edges: Sequence[Edge]) -> None:
    """Independent re-check of a witness tree; raises on any defect."""
    if len(edges) != g.n - 1:
        raise RuntimeError("witness tree does not have n-1 edges")
    deg = [0] * g.n
    adj = [0] * g.n
    for u, v in edges:
        if not g.has_edge(u, v):
            raise RuntimeError(f"witness tree uses non-edge ({u}, {v})")
        deg[u] += 1
        deg[v] += 1
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    reached = 1
    frontier = 1
    while frontier:
        new = 0
        for v in bits(frontier):
            new |= adj[v]
        new &= ~reached
        reached |= new
        frontier = new
    if reached != (1 << g.n) - 1:
        raise RuntimeError("witness tree is not connected")
    leaf_mask = 0
    for v in range(g.n):
        if deg[v] == 1:
            leaf_mask |= 1 << v
    if leaf_mask != s_mask:
        raise RuntimeError("witness tree leaf set differs from the requested set")


def _internal_spanning_trees(
    g: Graph, imask: int
) -> Iterator[tuple[list[Edge], list[int]]]:
    """Yield every spanning tree of the induced subgraph on ``imask``.

    Grows a subtree from the lowest vertex, branching on one cut edge at a
    time (take it / ban it), pruning banned branches that disconnect the
    remainder. Extending from the most recently added vertex first makes the
    first tree DFS-like, i.e. leaf-poor, which is what the caller wants.

    Yields (edge list, degree table); both are live and must not be stored.
    """
    root = (imask & -imask).bit_length() - 1
    in_tree = 1 << root
    stack = [root]
    banned = [0] * g.n
    tree_edges: list[Edge] = []
    deg = [0] * g.n

    def reachable_all() -> bool:
        reached = in_tree
        frontier = in_tree
        while frontier:
            new = 0
            for v in bits(frontier):
                new |= g.adj[v] & ~banned[v]
            new &= imask & ~reached
            reached |= new
            frontier = new
        return reached == imask

    def grow() -> Iterator[tuple[list[Edge], list[int]]]:
        nonlocal in_tree
        if in_tree == imask:
            yield tree_edges, deg
            return
        pick = None
        for u in reversed(stack):
            avail = g.adj[u] & imask & ~in_tree & ~banned[u]
            if avail:
                pick = (u, (avail & -avail).bit_length() - 1)
                break
        if pick is None:
            return
        u, v = pick
        # Branch 1: the tree takes edge (u, v).
        in_tree |= 1 << v
        stack.append(v)
        tree_edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
        yield from grow()
        deg[u] -= 1
        deg[v] -= 1
        tree_edges.pop()
        stack.pop()
        in_tree &= ~(1 << v)
        # Branch 2: the tree avoids edge (u, v).
        banned[u] |= 1 << v
        banned[v] |= 1 << u
        if reachable_all():
            yield from grow()
        banned[u] &= ~(1 << v)
        banned[v] &= ~(1 << u)

    yield from grow()


def _match_leaves(g: Graph, leaves: list[int], s_mask: int) -> dict[int, int] | None:
    """Match every internal-tree leaf to a distinct adjacent S-vertex.

    Returns {s_vertex: leaf} or None; plain augmenting-path search, the sides
    never exceed the graph order.
    """
    cand = [g.adj[leaf] & s_mask for leaf in leaves]
    if any(c == 0 for c in cand):
        return None
    match_of: dict[int, int] = {}

    def augment(li: int, seen: list[int]) -> bool:
        for sv in bits(cand[li] & ~seen[0]):
            seen[0] |= 1 << sv
            if sv not in match_of or augment(match_of[sv], seen):
                match_of[sv] = li
                return True
        return False

    for li in range(len(leaves)):
        if not augment(li, [0]):
            return None
    return match_of


def has_spanning_tree_with_leafset(
    g: Graph, s: Sequence[int]
) -> tuple[Edge, ...] | None:
    """A spanning tree of ``g`` whose leaf set is exactly ``s``, or None.

    Every returned tree is re-verified (n-1 edges, connected, exact leaf set)
    before being reported.
    """
    if not is_connected(g):
        raise ValueError("leaf-set search requires a connected graph")
    s_sorted = sorted(set(s))
    if len(s_sorted) != len(s):
        raise ValueError("leaf set contains repeated vertices")
    if any(not 0 <= v < g.n for v in s_sorted):
        raise ValueError("leaf set contains out-of-range vertices")
    if not 2 <= len(s_sorted) <= g.n - 1:
        raise ValueError(f"leaf set size must be in 2..n-1, got {len(s_sorted)}")

    s_mask = 0
    for v in s_sorted:
        s_mask |= 1 << v
    imask = ((1 << g.n) - 1) & ~s_mask
    internal = list(bits(imask))

    if len(internal) == 1:
        center = internal[0]
        if g.adj[center] & s_mask == s_mask:
            tree = tuple(sorted((min(center, v), max(center, v)) for v in s_sorted))
            _verify_leaf_tree(g, s_mask, tree)
            return tree
        return None

    # Cheap rejections: every S-vertex needs an internal attachment point, and
    # the internal part must carry a spanning tree at all.
    if any(g.adj[v] & imask == 0 for v in s_sorted):
        return None
    start = internal[0]
    reached = 1 << start
    frontier = reached
    while frontier:
        new = 0
        for v in bits(frontier):
            new |= g.adj[v]
        new &= imask & ~reached
        reached |= new
        frontier = new
    if reached != imask:
        return None

    k = len(s_sorted)
    for tree_edges, deg in _internal_spanning_trees(g, imask):
        leaves = [v for v in internal if deg[v] == 1]
        if len(leaves) > k:
            continue
        match_of = _match_leaves(g, leaves, s_mask)
        if match_of is None:
            continue
        full_edges = [(min(u, v), max(u, v)) for u, v in tree_edges]
        matched_s = set(match_of)
        for sv, leaf in match_of.items():
            full_edges.append((min(sv, leaf), max(sv, leaf)))
        for sv in s_sorted:
            if sv not in matched_s:
                anchor = (g.adj[sv] & imask & -(g.adj[sv] & imask)).bit_length() - 1
                full_edges.append((min(sv, anchor), max(sv, anchor)))
        tree = tuple(sorted(full_edges))
        _verify_leaf_tree(g, s_mask, tree)
        return tree
    return None


def is_k_leaf_connected(
    g: Graph, k: int, *, limit: int = ORACLE_LIMIT, witnesses: bool = False
) -> LeafDecision:
    """Exhaustive k-leaf-connectivity decision over all k-subsets.

    Subsets are checked in lexicographic order; the first failing subset is
    the reported counterexample. Exponential by design; guarded by ``limit``.
    """
    if not is_connected(g):
        raise ValueError("k-leaf-connectivity is defined for connected graphs")
    if not 2 <= k <= g.n - 1:
        raise ValueError(f"k must be in 2..n-1, got k = {k} at n = {g.n}")
    if g.n > limit:
        raise LimitError(f"oracle limited to n <= {limit}, got n = {g.n}")

    # A k-leaf-connected graph is (k+1)-connected, so a cut of size <= k
    # forces the answer; the counterexample subset is still located by the
    # normal scan to keep it deterministic.
    must_be_false = (
        k <= g.n - 2
        and g.n <= VERTEX_CONNECTIVITY_LIMIT
        and connectivity_at_most(g, k)
    )

    trees: dict[tuple[int, ...], tuple[Edge, ...]] | None = {} if witnesses else None
    for subset in itertools.combinations(range(g.n), k):
        tree = has_spanning_tree_with_leafset(g, subset)
        if tree is None:
            return LeafDecision(False, subset, trees)
        if trees is not None:
            trees[subset] = tree
    if must_be_false:
        raise RuntimeError(
            "internal inconsistency: low vertex connectivity but no failing subset"
        )
    return LeafDecision(True, None, trees)
