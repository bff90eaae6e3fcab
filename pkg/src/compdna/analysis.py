"""Upper bounds, exact maximum-code search and exhaustive claim checks.

A code corrects ``t`` errors of a kind exactly when it is an independent set
of the confusability graph, whose edges join vectors with intersecting error
balls.  At desk scale the maximum code size is found by exact search; the
partition bounds and closed-form ball sizes are then checked against it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import _kernels
from .channels import ErrorKind, _ball_rows, single_deletion_ball_size
from .codes import CompositeVTCode, StrandLossCode
from .core import DEFAULT_CAP, CompositeVector, all_vectors, l1_distance, linf_distance
from .errors import CapExceeded, SchemeError

DEFAULT_VERTEX_CAP = 1024


# --- closed-form bounds ------------------------------------------------------

def strand_loss_bound(M: int, n: int, t: int) -> int:
    """``ceil((M+1)/(t+1)) ** n``; for ``t >= M`` this is 1."""
    if t < 1:
        raise ValueError("the strand-loss bound needs t >= 1")
    return (M // (t + 1) + 1) ** n


def deletion_bound(M: int, n: int, t: int, D_value: int | None = None) -> int:
    """``ceil((M+1)/2) ** n`` times the largest binary ``t``-deletion code size."""
    if D_value is None:
        D_value = binary_deletion_max(n, t)
    return ((M + 2) // 2) ** n * D_value


def single_deletion_binary_bound(n: int) -> Fraction:
    """Known upper bound ``(2**n - 2) / (n - 1)`` on binary single-deletion codes."""
    if n < 2:
        raise ValueError("needs n >= 2")
    return Fraction(2**n - 2, n - 1)


def vt_lower_bound(M: int, n: int) -> int:
    """Pigeonhole size ``ceil((M+1)**n / (n+1))`` of the largest residue class."""
    return -(-((M + 1) ** n) // (n + 1))


# --- independent sets ----------------------------------------------------------

def greedy_independent_set(adj: Sequence[int]) -> list[int]:
    """Repeatedly take a remaining vertex of minimum remaining degree."""
    remaining = (1 << len(adj)) - 1
    chosen = []
    while remaining:
        best_v, best_deg = -1, None
        R = remaining
        while R:
            low = R & -R
            v = low.bit_length() - 1
            R ^= low
            deg = (adj[v] & remaining).bit_count()
            if best_deg is None or deg < best_deg:
                best_v, best_deg = v, deg
        chosen.append(best_v)
        remaining &= ~(adj[best_v] | (1 << best_v))
    return sorted(chosen)


def maximum_independent_set(adj: Sequence[int], max_nodes: int = 0,
                            backend=None) -> tuple[list[int], bool]:
    """Maximum independent set of the graph with neighbour bitsets ``adj``.

    Runs the clique kernel on the complement graph, with vertices renumbered
    by decreasing complement degree and a greedy solution as the incumbent.
    Returns the set and whether optimality was proven within ``max_nodes``.
    """
    kernel = backend or _kernels
    n = len(adj)
    if n == 0:
        return [], True
    full = (1 << n) - 1
    comp = [full & ~adj[v] & ~(1 << v) for v in range(n)]
    order = sorted(range(n), key=lambda v: (-comp[v].bit_count(), v))
    pos = {v: i for i, v in enumerate(order)}
    renum = []
    for v in order:
        bits = 0
        for u in _bits(comp[v]):
            bits |= 1 << pos[u]
        renum.append(bits)
    greedy = [pos[v] for v in greedy_independent_set(adj)]
    clique, complete, _ = kernel.max_clique(renum, greedy, max_nodes)
    return sorted(order[i] for i in clique), complete


def _bits(x: int) -> Iterable[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# --- binary deletion codes -------------------------------------------------------

def binary_deletion_graph(n: int, t: int) -> list[int]:
    """Confusability graph of binary length-``n`` words under ``t`` deletions."""
    buckets: dict[int, list[int]] = {}
    for w in range(2**n):
        for sub in _kernels.deletion_ball(w, n, t):
            buckets.setdefault(sub, []).append(w)
    adj = [0] * 2**n
    for words in buckets.values():
        mask = 0
        for w in words:
            mask |= 1 << w
        for w in words:
            adj[w] |= mask
    return [a & ~(1 << w) for w, a in enumerate(adj)]


def binary_deletion_max(n: int, t: int, cap: int = DEFAULT_VERTEX_CAP, max_nodes: int = 0) -> int:
    """Largest binary length-``n`` code correcting ``t`` deletions, by exact search.

    Raises:
        CapExceeded: if ``2**n`` exceeds ``cap`` or the search runs out of nodes.
    """
    if t == 0:
        return 2**n
    if t >= n:
        return 1
    if 2**n > cap:
        raise CapExceeded(2**n, cap, "binary words")
    mis, complete = maximum_independent_set(binary_deletion_graph(n, t), max_nodes)
    if not complete:
        raise CapExceeded(max_nodes, max_nodes, "search nodes")
    return len(mis)


# --- composite confusability graphs --------------------------------------------

METRIC_KINDS = (ErrorKind.S, ErrorKind.L)


@dataclass
class ConfusabilityGraph:
    vertices: list[CompositeVector]
    adj: list[int]
    t: int
    kind: ErrorKind
    method: str

    def edges(self) -> set[tuple[int, int]]:
        return {(u, v) for u, a in enumerate(self.adj) for v in _bits(a) if u < v}

    def is_symmetric(self) -> bool:
        return all((self.adj[v] >> u) & 1 for u, a in enumerate(self.adj) for v in _bits(a))

    def is_irreflexive(self) -> bool:
        return not any((a >> v) & 1 for v, a in enumerate(self.adj))

    def induced(self, keep: Sequence[int]) -> list[int]:
        index = {v: i for i, v in enumerate(keep)}
        out = []
        for v in keep:
            bits = 0
            for u in _bits(self.adj[v]):
                if u in index:
                    bits |= 1 << index[u]
            out.append(bits)
        return out


def metric_confusable(x: CompositeVector, y: CompositeVector, t: int, kind) -> bool:
    """Confusability read off the L1 (substitutions) or L-infinity (losses) distance."""
    kind = ErrorKind(kind)
    if kind is ErrorKind.S:
        return l1_distance(x, y) <= 2 * t
    if kind is ErrorKind.L:
        return linf_distance(x, y) <= t
    raise ValueError(f"no metric shortcut for kind {kind.value}")


def confusability_graph(M: int, n: int, t: int, kind, *, method: str = "auto",
                        canonical: bool = False, cap: int = DEFAULT_CAP) -> ConfusabilityGraph:
    """Graph on all of ``[0, M]^n`` joining vectors whose ``t``-balls intersect.

    ``method`` is ``"metric"``, ``"balls"`` (exhaustive ball intersection,
    errors counted up to ``t``) or ``"auto"`` (metric where one exists).
    """
    kind = ErrorKind(kind)
    if method == "auto":
        method = "metric" if kind in METRIC_KINDS else "balls"
    vertices = list(all_vectors(M, n))
    N = len(vertices)
    adj = [0] * N
    if method == "metric":
        for u, v in itertools.combinations(range(N), 2):
            if metric_confusable(vertices[u], vertices[v], t, kind):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    elif method == "balls":
        owners: dict = {}
        for v, x in enumerate(vertices):
            for out in _ball_rows(x, t, kind, at_most=True, canonical=canonical, cap=cap):
                owners[out] = owners.get(out, 0) | (1 << v)
        for mask in owners.values():
            for v in _bits(mask):
                adj[v] |= mask
        adj = [a & ~(1 << v) for v, a in enumerate(adj)]
    else:
        raise ValueError(f"unknown edge method {method!r}")
    return ConfusabilityGraph(vertices, adj, t, kind, method)


@dataclass
class MaxCodeResult:
    size: int
    witness: list[CompositeVector]
    exact: bool
    method: str


def exact_max_code(M: int, n: int, t: int, kind, *, edges: str = "auto",
                   cap: int = DEFAULT_VERTEX_CAP, max_nodes: int = 0,
                   ball_cap: int = DEFAULT_CAP) -> MaxCodeResult:
    """Largest code in ``[0, M]^n`` correcting ``t`` errors of ``kind``.

    Above ``cap`` vertices, or when the node budget runs out, the result is a
    lower bound: the greedy set (method ``"greedy-lower-bound"``) or the best
    set found (``"branch-and-bound-incomplete"``).
    """
    if t == 0:
        vs = list(all_vectors(M, n))
        return MaxCodeResult(len(vs), vs, True, "no-errors")
    graph = confusability_graph(M, n, t, kind, method=edges, cap=ball_cap)
    if len(graph.vertices) > cap:
        mis = greedy_independent_set(graph.adj)
        return MaxCodeResult(len(mis), [graph.vertices[v] for v in mis], False, "greedy-lower-bound")
    mis, complete = maximum_independent_set(graph.adj, max_nodes)
    method = "branch-and-bound" if complete else "branch-and-bound-incomplete"
    return MaxCodeResult(len(mis), [graph.vertices[v] for v in mis], complete, method)


# --- partitions ------------------------------------------------------------------

@dataclass(frozen=True)
class PartitionScheme:
    """Product cells: each cell picks one interval per coordinate.

    ``intervals[j]`` lists the ``(lo, hi)`` ranges (inclusive) coordinate ``j``
    is split into; anchors are the ``lo`` ends.
    """

    M: int
    n: int
    intervals: tuple[tuple[tuple[int, int], ...], ...]
    name: str = "custom"

    @property
    def anchors(self) -> list[tuple[int, ...]]:
        return [tuple(lo for lo, _ in cell) for cell in self.cells()]

    def cells(self) -> list[tuple[tuple[int, int], ...]]:
        return list(itertools.product(*self.intervals))

    def members(self, cell) -> list[CompositeVector]:
        ranges = [range(max(lo, 0), min(hi, self.M) + 1) for lo, hi in cell]
        return [CompositeVector(e, self.M) for e in itertools.product(*ranges)]

    def check(self):
        """Raise :class:`SchemeError` unless the cells partition ``[0, M]^n``.

        Cell sizes must add up to ``(M+1)**n`` and every vector must land in
        exactly one cell.
        """
        if len(self.intervals) != self.n:
            raise SchemeError(f"{len(self.intervals)} coordinate splits for n={self.n}")
        total = 0
        hits: dict[tuple[int, ...], int] = {}
        for cell in self.cells():
            for x in self.members(cell):
                total += 1
                hits[x.entries] = hits.get(x.entries, 0) + 1
        if total != (self.M + 1) ** self.n:
            raise SchemeError(f"cells hold {total} vectors, space has {(self.M + 1) ** self.n}")
        if len(hits) != total or any(c != 1 for c in hits.values()):
            raise SchemeError("cells overlap")


def strand_loss_scheme(M: int, n: int, t: int) -> PartitionScheme:
    """Cubes of side ``t + 1`` anchored at the multiples of ``t + 1``."""
    ivs = tuple((u, min(u + t, M)) for u in range(0, M + 1, t + 1))
    return PartitionScheme(M, n, (ivs,) * n, "strand-loss")


def deletion_scheme(M: int, n: int) -> PartitionScheme:
    """Pairs of adjacent levels; for even ``M`` level 0 stands alone."""
    if M % 2:
        ivs = tuple((u, u + 1) for u in range(0, M, 2))
    else:
        ivs = ((0, 0),) + tuple((u, u + 1) for u in range(1, M, 2))
    return PartitionScheme(M, n, (ivs,) * n, "deletion")


def singleton_scheme(M: int, n: int) -> PartitionScheme:
    return PartitionScheme(M, n, (tuple((v, v) for v in range(M + 1)),) * n, "singleton")


@dataclass
class PartitionVerdict:
    scheme: str
    cell_maxima: list[int]
    bound: int
    global_max: int
    holds: bool

    @property
    def slack(self) -> int:
        return self.bound - self.global_max


def partition_bound_check(scheme: PartitionScheme, kind, t: int, *, edges: str = "auto",
                          cap: int = DEFAULT_VERTEX_CAP) -> PartitionVerdict:
    """Check that the largest code is at most the sum of per-cell maxima.

    Confusability inside a cell is judged with balls over the whole space.
    """
    scheme.check()
    graph = confusability_graph(scheme.M, scheme.n, t, kind, method=edges)
    if len(graph.vertices) > cap:
        raise CapExceeded(len(graph.vertices), cap, "vertices")
    index = {x.entries: i for i, x in enumerate(graph.vertices)}
    maxima = []
    for cell in scheme.cells():
        keep = [index[x.entries] for x in scheme.members(cell)]
        mis, complete = maximum_independent_set(graph.induced(keep))
        assert complete
        maxima.append(len(mis))
    mis, complete = maximum_independent_set(graph.adj)
    assert complete
    bound = sum(maxima)
    return PartitionVerdict(scheme.name, maxima, bound, len(mis), len(mis) <= bound)


# --- claim verification ----------------------------------------------------------

@dataclass
class ClaimGrid:
    """Parameter grid for :func:`verify_claims`.

    ``metric`` holds ``(M, n, t)`` for the substitution/L1 and loss/L-infinity
    equivalences, ``indel`` holds ``(M, n)`` for the deletion/insertion/indel
    equivalence at one error, ``ballsize`` holds ``(M, n)`` for the closed
    single-deletion ball size.
    """

    metric: list[tuple[int, int, int]] = field(default_factory=list)
    indel: list[tuple[int, int]] = field(default_factory=list)
    ballsize: list[tuple[int, int]] = field(default_factory=list)

    @classmethod
    def named(cls, name: str) -> "ClaimGrid":
        if name == "empty":
            return cls()
        if name == "tiny":
            return cls(metric=[(M, n, t) for M in (1, 2) for n in (1, 2) for t in (1, 2)],
                       indel=[(M, n) for M in (1, 2) for n in (1, 2)],
                       ballsize=[(M, n) for M in (1, 2) for n in (1, 2)])
        if name == "small":
            return cls(metric=[(M, n, t) for M in (1, 2, 3) for n in (1, 2) for t in (1, 2)],
                       indel=[(M, n) for M in (1, 2) for n in (1, 2, 3)],
                       ballsize=[(M, n) for M in (1, 2, 3, 4) for n in (1, 2, 3)])
        raise ValueError(f"unknown grid {name!r}; expected empty, tiny or small")


@dataclass
class ClaimRecord:
    check: str
    M: int
    n: int
    t: int
    cases: int
    counterexamples: list = field(default_factory=list)
    complete: bool = True

    def to_record(self) -> dict:
        return {"check": self.check, "M": self.M, "n": self.n, "t": self.t,
                "cases": self.cases, "complete": self.complete,
                "counterexamples": self.counterexamples}


def _pairs(M, n):
    vs = list(all_vectors(M, n))
    return vs, list(itertools.combinations_with_replacement(range(len(vs)), 2))


def check_metric_claim(M: int, n: int, t: int, kind, cap: int = DEFAULT_CAP) -> ClaimRecord:
    """Compare the distance threshold with exhaustive ball disjointness for every pair."""
    kind = ErrorKind(kind)
    name = {"S": "substitution-l1", "L": "loss-linf"}[kind.value]
    vs, pairs = _pairs(M, n)
    rec = ClaimRecord(name, M, n, t, len(pairs))
    try:
        balls = [_ball_rows(x, t, kind, at_most=True, cap=cap) for x in vs]
    except CapExceeded:
        rec.complete = False
        return rec
    for i, j in pairs:
        by_metric = not metric_confusable(vs[i], vs[j], t, kind)
        by_balls = balls[i].isdisjoint(balls[j])
        if by_metric != by_balls:
            rec.counterexamples.append([list(vs[i]), list(vs[j])])
    return rec


def check_indel_claim(M: int, n: int, cap: int = DEFAULT_CAP) -> ClaimRecord:
    """Single deletion, insertion and indel balls must agree on disjointness."""
    vs, pairs = _pairs(M, n)
    rec = ClaimRecord("deletion-insertion-indel", M, n, 1, len(pairs))
    try:
        balls = {k: [_ball_rows(x, 1, k, at_most=True, cap=cap) for x in vs]
                 for k in (ErrorKind.D, ErrorKind.I, ErrorKind.ID)}
    except CapExceeded:
        rec.complete = False
        return rec
    for i, j in pairs:
        verdicts = {k.value: b[i].isdisjoint(b[j]) for k, b in balls.items()}
        if len(set(verdicts.values())) > 1:
            rec.counterexamples.append([list(vs[i]), list(vs[j]), verdicts])
    return rec


def check_ballsize(M: int, n: int, cap: int = DEFAULT_CAP) -> ClaimRecord:
    """Closed-form single-deletion ball size against enumeration."""
    vs = list(all_vectors(M, n))
    rec = ClaimRecord("single-deletion-ball-size", M, n, 1, len(vs))
    for x in vs:
        try:
            counted = len(_ball_rows(x, 1, ErrorKind.D, cap=cap))
        except CapExceeded:
            rec.complete = False
            continue
        formula = single_deletion_ball_size(x)
        if counted != formula:
            rec.counterexamples.append([list(x), formula, counted])
    return rec


def verify_claims(grid: ClaimGrid, cap: int = DEFAULT_CAP) -> list[ClaimRecord]:
    """Run every sweep in ``grid``; an empty grid gives an empty report."""
    report = []
    for M, n, t in grid.metric:
        report.append(check_metric_claim(M, n, t, ErrorKind.S, cap))
        report.append(check_metric_claim(M, n, t, ErrorKind.L, cap))
    for M, n in grid.indel:
        report.append(check_indel_claim(M, n, cap))
    for M, n in grid.ballsize:
        report.append(check_ballsize(M, n, cap))
    return report


# --- bound reports ----------------------------------------------------------------

@dataclass
class BoundReport:
    kind: str
    M: int
    n: int
    t: int
    bound: int | None
    achieved: int | None
    method: str
    complete: bool = True

    def __post_init__(self):
        if self.bound is not None and self.achieved is not None:
            assert self.achieved <= self.bound, (self.achieved, self.bound)

    def to_record(self) -> dict:
        return {"kind": self.kind, "M": self.M, "n": self.n, "t": self.t,
                "bound": self.bound, "achieved": self.achieved, "method": self.method,
                "complete": self.complete}


def bound_report(M: int, n: int, t: int, kind, *, cap: int = DEFAULT_VERTEX_CAP) -> BoundReport:
    """Best available upper bound and achieving construction for one instance.

    Raises:
        CapExceeded: when the instance needs an exact search beyond ``cap``.
    """
    kind = ErrorKind(kind)
    if kind is ErrorKind.L:
        bound = strand_loss_bound(M, n, t)
        if t >= M:
            return BoundReport("L", M, n, t, bound, 1, "trivial")
        code = StrandLossCode(M, n, t)
        if (M + 1) ** n <= DEFAULT_CAP:
            achieved = sum(1 for x in all_vectors(M, n) if code.contains(x))
        else:
            achieved = code.size
        return BoundReport("L", M, n, t, bound, achieved, "construction-1")
    if kind in (ErrorKind.D, ErrorKind.I, ErrorKind.ID):
        if t >= n:
            raise ValueError("deletion bound needs t < n")
        bound = deletion_bound(M, n, t, binary_deletion_max(n, t, cap=cap))
        if t == 1:
            achieved = max(CompositeVTCode(M, n, a).size for a in range(n + 1))
            return BoundReport(kind.value, M, n, t, bound, achieved, "construction-2")
        return BoundReport(kind.value, M, n, t, bound, None, "bound-only")
    if (M + 1) ** n > cap:
        raise CapExceeded((M + 1) ** n, cap, "vertices")
    res = exact_max_code(M, n, t, kind, cap=cap)
    return BoundReport("S", M, n, t, res.size, res.size, "exact-search")
