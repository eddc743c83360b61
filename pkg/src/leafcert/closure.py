"""Degree-sum closure: repeatedly join nonadjacent pairs whose degree sum
reaches the threshold, with a reproducible trace of the edges added."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .graph6 import to_graph6


@dataclass(frozen=True)
class ClosureTrace:
    """Result of one closure run: threshold, added edges in order, fixed point."""

    l: int
    added: tuple[tuple[int, int], ...]
    result: Graph

    def to_json_dict(self) -> dict:
        return {
            "l": self.l,
            "added": [[u, v] for u, v in self.added],
            "result": to_graph6(self.result),
        }


def l_closure(g: Graph, l: int) -> ClosureTrace:
    """Fixed point of joining nonadjacent pairs with degree sum >= l.

    Pairs are scanned in lexicographic order and the scan restarts after each
    addition, so the trace is deterministic; the resulting edge set is
    order-independent regardless (tested property).
    """
    if l < 0:
        raise ValueError("closure threshold must be nonnegative")
    rows = list(g.adj)
    deg = [row.bit_count() for row in rows]
    added: list[tuple[int, int]] = []
    dirty = True
    while dirty:
        dirty = False
        for i in range(g.n):
            for j in range(i + 1, g.n):
                if not rows[i] >> j & 1 and deg[i] + deg[j] >= l:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                    deg[i] += 1
                    deg[j] += 1
                    added.append((i, j))
                    dirty = True
                    break
            if dirty:
                break
    return ClosureTrace(l=l, added=tuple(added), result=Graph(g.n, tuple(rows)))
