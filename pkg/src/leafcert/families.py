"""Named graph constructions: classics plus the extremal and exceptional join families.

The join families are the tight cases of the certifier's sufficient
conditions; all are assembled from the complete/empty/union/join primitives
so their labelings are reproducible (hub block first, then the remaining
blocks in written order).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, join, union


class Family(enum.Enum):
    EXTREMAL_M1 = "extremal-m1"
    EDGE_EXCEPTION = "edge-exception"
    THREE_FIVE_EXCEPTION = "three-five-exception"
    FOUR_SEVEN_EXCEPTION = "four-seven-exception"
    COMPLETE = "complete"
    EMPTY = "empty"
    PATH = "path"
    CYCLE = "cycle"


@dataclass(frozen=True)
class FamilySpec:
    """Parameterized description of a named construction."""

    family: Family
    n: int
    k: int | None = None


def empty(n: int) -> Graph:
    if n < 1:
        raise ValueError("empty graph needs n >= 1")
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def extremal_m1(n: int, k: int) -> Graph:
    """K_k joined to (K_1 + K_{n-k-1}): hubs 0..k-1, solo vertex k, clique after."""
    if k < 1 or n < k + 2:
        raise ValueError(f"extremal-m1 needs k >= 1 and n >= k+2, got (n={n}, k={k})")
    return join(complete(k), union(complete(1), complete(n - k - 1)))


def edge_exception(n: int, k: int) -> Graph:
    """K_k joined to (K_{n-k-2} + K_2)."""
    if k < 1 or n < k + 3:
        raise ValueError(f"edge-exception needs k >= 1 and n >= k+3, got (n={n}, k={k})")
    return join(complete(k), union(complete(n - k - 2), complete(2)))


def three_five_exception(n: int) -> Graph:
    """K_3 joined to (K_{n-5} + 2K_1)."""
    if n < 6:
        raise ValueError(f"three-five-exception needs n >= 6, got n = {n}")
    return join(complete(3), union(complete(n - 5), empty(2)))


def four_seven_exception(n: int) -> Graph:
    """K_4 joined to (K_{n-7} + 3K_1)."""
    if n < 8:
        raise ValueError(f"four-seven-exception needs n >= 8, got n = {n}")
    return join(complete(4), union(complete(n - 7), empty(3)))


def build(spec: FamilySpec) -> Graph:
    """Materialize the named construction; rejects out-of-range parameters."""
    fam, n, k = spec.family, spec.n, spec.k
    if fam in (Family.EXTREMAL_M1, Family.EDGE_EXCEPTION):
        if k is None:
            raise ValueError(f"{fam.value} needs the leaf parameter k")
        if fam is Family.EXTREMAL_M1:
            return extremal_m1(n, k)
        return edge_exception(n, k)
    if fam is Family.THREE_FIVE_EXCEPTION:
        return three_five_exception(n)
    if fam is Family.FOUR_SEVEN_EXCEPTION:
        return four_seven_exception(n)
    if fam is Family.COMPLETE:
        return complete(n)
    if fam is Family.EMPTY:
        return empty(n)
    if fam is Family.PATH:
        return path(n)
    if fam is Family.CYCLE:
        return cycle(n)
    raise ValueError(f"unknown family {fam!r}")
