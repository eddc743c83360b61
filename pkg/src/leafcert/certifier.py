"""Sufficient conditions for k-leaf-connectivity as explicit checks.

Each check carries its exact applicability window, an exact threshold bound
(integer or rational), the inequality direction as printed in its source
statement, and -- for the edge-count and complement-index conditions -- the
exceptional-family escape hatch, recognized by running the (n+k-1)-closure
and testing isomorphism against the listed constructions.

The two weak hyper-Zagreb corollary checks are evaluated exactly as printed
but flagged advisory and excluded from the Certified aggregate: their printed
derivation applies the edge/index sandwich bounds in a direction that does
not recover the edge-count threshold. Conservative rescalings that *are*
implied by the sandwich bounds are exposed alongside and do aggregate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .closure import l_closure
from .families import (
    edge_exception,
    four_seven_exception,
    three_five_exception,
)
from .graph import Graph, are_isomorphic, complement, degree_sequence, is_connected
from .graph6 import to_graph6
from .indices import IndexReport, first_zagreb, hyper_zagreb_1, index_report


class CheckKind(enum.Enum):
    DIRAC = "Dirac"
    DEGREE_SEQUENCE = "DegreeSequence"
    EDGE_COUNT = "EdgeCount"
    M1_BOUND = "M1Bound"
    RDD_BOUND = "RDDBound"
    HM1_BOUND = "HM1Bound"
    M2_BOUND = "M2Bound"
    HM1_WEAK = "HM1Weak"
    HM2_WEAK = "HM2Weak"
    HM1_WEAK_CONSERVATIVE = "HM1WeakConservative"
    HM2_WEAK_CONSERVATIVE = "HM2WeakConservative"
    COMPLEMENT_M1 = "ComplementM1"
    COMPLEMENT_HM1 = "ComplementHM1"
    CLOSURE_COMPLETE = "ClosureComplete"


ADVISORY_KINDS = frozenset({CheckKind.HM1_WEAK, CheckKind.HM2_WEAK})

# Checks whose hypotheses are the asymptotic n >= k+17 window.
_WIDE_WINDOW_KINDS = frozenset(
    {
        CheckKind.EDGE_COUNT,
        CheckKind.HM1_WEAK,
        CheckKind.HM2_WEAK,
        CheckKind.HM1_WEAK_CONSERVATIVE,
        CheckKind.HM2_WEAK_CONSERVATIVE,
        CheckKind.COMPLEMENT_M1,
        CheckKind.COMPLEMENT_HM1,
    }
)

_NO_THRESHOLD_KINDS = frozenset({CheckKind.DEGREE_SEQUENCE, CheckKind.CLOSURE_COMPLETE})

ALL_EXCEPTION_FAMILIES = (
    "edge-exception",
    "three-five-exception",
    "four-seven-exception",
)


def threshold(kind: CheckKind, n: int, k: int) -> int | Fraction:
    """Exact evaluation of the check's closed-form bound at (n, k)."""
    if kind is CheckKind.DIRAC:
        return Fraction(n + k - 1, 2)
    if kind is CheckKind.EDGE_COUNT:
        return comb(n - 3, 2) + 3 * k + 5
    if kind is CheckKind.M1_BOUND:
        return n**3 - 5 * n**2 + (2 * k + 8) * n + k * k - 3 * k - 4
    if kind is CheckKind.RDD_BOUND:
        return Fraction((n - 2) * (n - 1) * (2 * n - 3) + k * (4 * n - 5) + k * k, 2)
    if kind is CheckKind.HM1_BOUND:
        return (
            2 * n**4 - 14 * n**3 + 6 * k * n**2 + 36 * n**2
            - 18 * k * n - 40 * n + 2 * k**3 + 14 * k + 16
        )
    if kind is CheckKind.M2_BOUND:
        return (
            n**4 - 7 * n**3 + 3 * k * n**2 + 18 * n**2
            - 9 * k * n - 20 * n + k**3 + 7 * k + 8
        )
    if kind is CheckKind.HM1_WEAK:
        return 2 * n * n - 14 * n + 12 * k + 44
    if kind is CheckKind.HM2_WEAK:
        return Fraction(n * n - 7 * n + 6 * k + 22, 2)
    if kind is CheckKind.HM1_WEAK_CONSERVATIVE:
        return 4 * (n - 1) ** 2 * (comb(n - 3, 2) + 3 * k + 5)
    if kind is CheckKind.HM2_WEAK_CONSERVATIVE:
        return (n - 1) ** 4 * (comb(n - 3, 2) + 3 * k + 5)
    if kind is CheckKind.COMPLEMENT_M1:
        return (n - k) * (3 * (n - k) - 11)
    if kind is CheckKind.COMPLEMENT_HM1:
        return (n - k) ** 2 * (3 * (n - k) - 11)
    raise ValueError(f"{kind.value} has no closed-form threshold")


@dataclass(frozen=True)
class CheckResult:
    """Verdict of one check: Certified / Inconclusive / Exceptional / NotApplicable."""

    kind: CheckKind
    applicable: bool
    threshold: int | Fraction | None
    measured: int | Fraction | None
    verdict: str
    family: str | None = None
    advisory: bool = False

    def verdict_label(self) -> str:
        if self.verdict == "Exceptional":
            return f"Exceptional({self.family})"
        return self.verdict

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "applicable": self.applicable,
            "threshold": _exact_str(self.threshold),
            "measured": _exact_str(self.measured),
            "verdict": self.verdict_label(),
            "advisory": self.advisory,
        }


@dataclass(frozen=True)
class CertificateReport:
    """Aggregated verdict of every check on one (graph, k) instance."""

    graph6: str
    n: int
    k: int
    indices: IndexReport
    checks: tuple[CheckResult, ...]
    overall: str

    def check(self, kind: CheckKind) -> CheckResult:
        for c in self.checks:
            if c.kind is kind:
                return c
        raise KeyError(kind)

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph6,
            "n": self.n,
            "k": self.k,
            "indices": self.indices.to_json_dict(),
            "checks": [c.to_json_dict() for c in self.checks],
            "overall": self.overall,
        }


def _exact_str(x: int | Fraction | None) -> str | None:
    if x is None:
        return None
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


class _CertifyContext:
    """Shared lazily-computed state for the checks on one (graph, k) pair."""

    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self._report: IndexReport | None = None
        self._closure: Graph | None = None
        self._comp: Graph | None = None

    def report(self) -> IndexReport:
        if self._report is None:
            self._report = index_report(self.g)
        return self._report

    def closure_graph(self) -> Graph:
        if self._closure is None:
            self._closure = l_closure(self.g, self.g.n + self.k - 1).result
        return self._closure

    def complement_graph(self) -> Graph:
        if self._comp is None:
            self._comp = complement(self.g)
        return self._comp


def _applicable(kind: CheckKind, g: Graph, k: int) -> bool:
    n = g.n
    if kind in (CheckKind.DIRAC, CheckKind.CLOSURE_COMPLETE):
        return 2 <= k <= n - 1
    if kind is CheckKind.DEGREE_SEQUENCE:
        return 2 <= k <= n - 3
    if not 2 <= k or g.min_degree() < k + 1:
        return False
    if kind in (CheckKind.M1_BOUND, CheckKind.RDD_BOUND):
        return k <= n - 4
    if kind in (CheckKind.HM1_BOUND, CheckKind.M2_BOUND):
        return k <= n - 5
    if kind in _WIDE_WINDOW_KINDS:
        return k <= n - 17
    raise AssertionError(kind)


def _degree_sequence_certifies(g: Graph, k: int) -> bool:
    """No integer i in k..floor((n+k-2)/2) may satisfy both positional bounds."""
    seq = degree_sequence(g)
    n = g.n

    def d(pos: int) -> int:
        # 1-based position into the nondecreasing degree sequence, as printed.
        return seq[pos - 1]

    for i in range(k, (n + k - 2) // 2 + 1):
        if d(i - k + 1) <= i and d(n - i) <= n - i + k - 2:
            return False
    return True


def _family_candidates(n: int, k: int, ids: tuple[str, ...]):
    for fam_id in ids:
        try:
            if fam_id == "edge-exception":
                yield fam_id, edge_exception(n, k)
            elif fam_id == "three-five-exception":
                yield fam_id, three_five_exception(n)
            elif fam_id == "four-seven-exception":
                yield fam_id, four_seven_exception(n)
        except ValueError:
            continue


def _matching_family(h: Graph, n: int, k: int, ids: tuple[str, ...]) -> str | None:
    """Which listed family (if any) ``h`` is isomorphic to; order-matched only."""
    for fam_id, fam in _family_candidates(n, k, ids):
        if h.edge_count != fam.edge_count:
            continue
        if degree_sequence(h) != degree_sequence(fam):
            continue
        if are_isomorphic(h, fam):
            return fam_id
    return None


def _run_check(kind: CheckKind, ctx: _CertifyContext) -> CheckResult:
    g, k = ctx.g, ctx.k
    advisory = kind in ADVISORY_KINDS
    if not _applicable(kind, g, k):
        return CheckResult(kind, False, None, None, "NotApplicable", None, advisory)

    if kind is CheckKind.DEGREE_SEQUENCE:
        ok = _degree_sequence_certifies(g, k)
        return CheckResult(
            kind, True, None, None, "Certified" if ok else "Inconclusive", None, advisory
        )

    if kind is CheckKind.CLOSURE_COMPLETE:
        # A complete graph is k-leaf-connected for every 2 <= k <= n-1, and
        # the property transfers back through the (n+k-1)-closure.
        ok = ctx.closure_graph().is_complete()
        return CheckResult(
            kind, True, None, None, "Certified" if ok else "Inconclusive", None, advisory
        )

    thr = threshold(kind, g.n, k)
    if kind is CheckKind.DIRAC:
        measured: int | Fraction = g.min_degree()
        holds = measured >= thr
    elif kind is CheckKind.EDGE_COUNT:
        measured = g.edge_count
        holds = measured >= thr
    elif kind is CheckKind.M1_BOUND:
        measured = ctx.report().m1
        holds = measured > thr
    elif kind is CheckKind.RDD_BOUND:
        measured = ctx.report().rdd
        holds = measured > thr
    elif kind is CheckKind.HM1_BOUND:
        measured = ctx.report().hm1
        holds = measured >= thr
    elif kind is CheckKind.M2_BOUND:
        measured = ctx.report().m2
        holds = measured >= thr
    elif kind in (CheckKind.HM1_WEAK, CheckKind.HM1_WEAK_CONSERVATIVE):
        measured = ctx.report().hm1
        holds = measured >= thr
    elif kind in (CheckKind.HM2_WEAK, CheckKind.HM2_WEAK_CONSERVATIVE):
        measured = ctx.report().hm2
        holds = measured >= thr
    elif kind is CheckKind.COMPLEMENT_M1:
        measured = first_zagreb(ctx.complement_graph())
        holds = measured <= thr
    elif kind is CheckKind.COMPLEMENT_HM1:
        measured = hyper_zagreb_1(ctx.complement_graph())
        holds = measured <= thr
    else:
        raise AssertionError(kind)

    if not holds:
        return CheckResult(kind, True, thr, measured, "Inconclusive", None, advisory)

    family = None
    if kind in (
        CheckKind.EDGE_COUNT,
        CheckKind.HM1_WEAK_CONSERVATIVE,
        CheckKind.HM2_WEAK_CONSERVATIVE,
        CheckKind.COMPLEMENT_M1,
    ):
        family = _matching_family(ctx.closure_graph(), g.n, k, ALL_EXCEPTION_FAMILIES)
    elif kind is CheckKind.COMPLEMENT_HM1:
        family = _matching_family(ctx.closure_graph(), g.n, k, ("edge-exception",))
    elif kind in (CheckKind.HM1_WEAK, CheckKind.HM2_WEAK):
        # The weak corollaries except the graph itself, not its closure.
        family = _matching_family(g, g.n, k, ALL_EXCEPTION_FAMILIES)

    if family is not None:
        return CheckResult(kind, True, thr, measured, "Exceptional", family, advisory)
    return CheckResult(kind, True, thr, measured, "Certified", None, advisory)


def _validate_instance(g: Graph, k: int) -> None:
    if not is_connected(g):
        raise ValueError("certification is defined for connected graphs")
    if not 2 <= k <= g.n - 1:
        raise ValueError(f"k must be in 2..n-1, got k = {k} at n = {g.n}")


def check(kind: CheckKind, g: Graph, k: int) -> CheckResult:
    """Run a single sufficient-condition check on (g, k)."""
    _validate_instance(g, k)
    return _run_check(kind, _CertifyContext(g, k))


def certify(g: Graph, k: int) -> CertificateReport:
    """Run every check in listing order and aggregate the verdict.

    Overall is Certified iff some non-advisory check certifies; Exceptional
    iff nothing certified but some check hit a listed family; else
    Inconclusive.
    """
    _validate_instance(g, k)
    ctx = _CertifyContext(g, k)
    checks = tuple(_run_check(kind, ctx) for kind in CheckKind)
    if any(c.verdict == "Certified" and not c.advisory for c in checks):
        overall = "Certified"
    elif not any(c.verdict == "Certified" for c in checks) and any(
        c.verdict == "Exceptional" for c in checks
    ):
        overall = "Exceptional"
    else:
        overall = "Inconclusive"
    return CertificateReport(
        graph6=to_graph6(g),
        n=g.n,
        k=k,
        indices=ctx.report(),
        checks=checks,
        overall=overall,
    )
