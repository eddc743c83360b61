"""Exact degree-based topological indices and reciprocal distance sums.

Everything is computed with arbitrary-precision integers and Fractions: the
certifier compares index values against thresholds where strict-vs-equal at
the extremal constructions is exactly the interesting case, so floating
point is never allowed near these quantities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, bits

INDEX_KINDS = ("M1", "M2", "HM1", "HM2", "RDD", "EdgeCount")


def all_pairs_distances(g: Graph) -> list[list[int]]:
    """Exact BFS hop distances; raises ValueError on disconnected input."""
    full = (1 << g.n) - 1
    dist = [[0] * g.n for _ in range(g.n)]
    for src in range(g.n):
        row = dist[src]
        reached = 1 << src
        frontier = reached
        d = 0
        while frontier:
            d += 1
            new = 0
            for v in bits(frontier):
                new |= g.adj[v]
            new &= ~reached
            for v in bits(new):
                row[v] = d
            reached |= new
            frontier = new
        if reached != full:
            raise ValueError("distances undefined: graph is disconnected")
    return dist


def first_zagreb(g: Graph) -> int:
    return sum(d * d for d in g.degrees())


def second_zagreb(g: Graph) -> int:
    deg = g.degrees()
    return sum(deg[u] * deg[v] for u, v in g.edges())


def hyper_zagreb_1(g: Graph) -> int:
    deg = g.degrees()
    return sum((deg[u] + deg[v]) ** 2 for u, v in g.edges())


def hyper_zagreb_2(g: Graph) -> int:
    deg = g.degrees()
    return sum((deg[u] * deg[v]) ** 2 for u, v in g.edges())


def reciprocal_degree_distance(g: Graph) -> Fraction:
    """Sum over unordered vertex pairs of (d(u)+d(v)) / dist(u,v), exactly."""
    dist = all_pairs_distances(g)
    deg = g.degrees()
    by_distance: dict[int, int] = {}
    for u in range(g.n):
        du = dist[u]
        for v in range(u + 1, g.n):
            d = du[v]
            by_distance[d] = by_distance.get(d, 0) + deg[u] + deg[v]
    return sum(
        (Fraction(total, d) for d, total in sorted(by_distance.items())),
        start=Fraction(0),
    )


def reciprocal_transmission(g: Graph, v: int) -> Fraction:
    """Sum of 1/dist(v, u) over u != v, as a reduced rational."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    dist_row = all_pairs_distances(g)[v]
    counts: dict[int, int] = {}
    for u in range(g.n):
        if u != v:
            counts[dist_row[u]] = counts.get(dist_row[u], 0) + 1
    return sum(
        (Fraction(c, d) for d, c in sorted(counts.items())), start=Fraction(0)
    )


def compute_index(g: Graph, kind: str) -> int | Fraction:
    """Exact value of the named index; RDD additionally requires connectivity."""
    if kind == "M1":
        return first_zagreb(g)
    if kind == "M2":
        return second_zagreb(g)
    if kind == "HM1":
        return hyper_zagreb_1(g)
    if kind == "HM2":
        return hyper_zagreb_2(g)
    if kind == "RDD":
        return reciprocal_degree_distance(g)
    if kind == "EdgeCount":
        return g.edge_count
    raise ValueError(f"unknown index kind {kind!r}; expected one of {INDEX_KINDS}")


def _fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class IndexReport:
    """Exact index values of one connected graph."""

    n: int
    e: int
    m1: int
    m2: int
    hm1: int
    hm2: int
    rdd: Fraction
    dhat: tuple[Fraction, ...]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "e": self.e,
            "m1": self.m1,
            "m2": self.m2,
            "hm1": self.hm1,
            "hm2": self.hm2,
            "rdd": _fraction_str(self.rdd),
            "dhat": [_fraction_str(x) for x in self.dhat],
        }


def index_report(g: Graph) -> IndexReport:
    """All indices of a connected graph in one pass over the distance matrix."""
    dist = all_pairs_distances(g)
    dhat = []
    for v in range(g.n):
        counts: dict[int, int] = {}
        for u in range(g.n):
            if u != v:
                counts[dist[v][u]] = counts.get(dist[v][u], 0) + 1
        dhat.append(
            sum((Fraction(c, d) for d, c in sorted(counts.items())), start=Fraction(0))
        )
    return IndexReport(
        n=g.n,
        e=g.edge_count,
        m1=first_zagreb(g),
        m2=second_zagreb(g),
        hm1=hyper_zagreb_1(g),
        hm2=hyper_zagreb_2(g),
        rdd=reciprocal_degree_distance(g),
        dhat=tuple(dhat),
    )
