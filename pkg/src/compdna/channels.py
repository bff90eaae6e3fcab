"""Error injection for the five strand-level error types and exact error balls.

Error types:

* ``S`` substitution: flip the bit at ``(row, col)``.
* ``L`` strand loss: drop a whole row.
* ``D`` deletion: remove the symbol at ``(row, col)``; the row shifts left.
* ``I`` insertion: insert ``symbol`` before position ``pos`` of a row.
* ``ID`` indel: any mix of deletions and insertions.

Deletion positions refer to the row as it was before the pattern and are
applied right to left, so a pattern is a set of distinct cells.  Insertion
positions refer to the row as already modified by the earlier insertions.
For ``ID`` all deletions are applied before the insertions.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, NamedTuple

import numpy as np

from .core import (
    DEFAULT_CAP,
    ChannelOutput,
    CompositeVector,
    StrandMatrix,
    candidate_rows,
    representation_count,
    run_count,
    _representations,
)
from .errors import CapExceeded, ConfigError, PatternError, ShapeError


class ErrorKind(str, enum.Enum):
    S = "S"
    L = "L"
    D = "D"
    I = "I"  # noqa: E741
    ID = "ID"


class Substitution(NamedTuple):
    row: int
    col: int


class Loss(NamedTuple):
    row: int


class Deletion(NamedTuple):
    row: int
    col: int


class Insertion(NamedTuple):
    row: int
    pos: int
    symbol: int


_EVENT_TYPES = {
    ErrorKind.S: (Substitution,),
    ErrorKind.L: (Loss,),
    ErrorKind.D: (Deletion,),
    ErrorKind.I: (Insertion,),
    ErrorKind.ID: (Deletion, Insertion),
}


@dataclass(frozen=True)
class ErrorPattern:
    kind: ErrorKind
    events: tuple = ()

    def __post_init__(self):
        kind = ErrorKind(self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "events", tuple(self.events))
        allowed = _EVENT_TYPES[kind]
        for ev in self.events:
            if type(ev) not in allowed:
                raise PatternError(f"event {ev!r} not allowed in a {kind.value} pattern")
        if kind in (ErrorKind.S, ErrorKind.D, ErrorKind.ID):
            cells = [tuple(ev) for ev in self.events if type(ev) in (Substitution, Deletion)]
            if len(set(cells)) != len(cells):
                raise PatternError("substitution/deletion cells must be distinct")
        if kind is ErrorKind.L:
            rows = [ev.row for ev in self.events]
            if len(set(rows)) != len(rows):
                raise PatternError(f"duplicate lost rows in {rows}")

    @property
    def t(self) -> int:
        return len(self.events)


@dataclass(frozen=True)
class ChannelConfig:
    kind: ErrorKind
    t: int
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", ErrorKind(self.kind))
        if self.t < 0:
            raise ConfigError(f"t must be nonnegative, got {self.t}")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must be a 64-bit unsigned integer")

    def check(self, M: int, n: int):
        """Raise :class:`ConfigError` unless ``t`` events fit an ``M x n`` matrix."""
        limit = {
            ErrorKind.S: M * n,
            ErrorKind.L: M,
            ErrorKind.D: n,
            ErrorKind.ID: n,
        }.get(self.kind)
        if limit is not None and self.t > limit:
            raise ConfigError(f"t={self.t} infeasible for kind {self.kind.value} on {M}x{n}")


def apply_pattern(X: ChannelOutput, p: ErrorPattern) -> ChannelOutput:
    """Apply every event of ``p`` to ``X`` and return the received rows."""
    rows = [list(r) for r in X.rows]
    if p.kind is ErrorKind.S:
        for ev in p.events:
            _check_cell(rows, ev.row, ev.col)
            rows[ev.row][ev.col] ^= 1
    elif p.kind is ErrorKind.L:
        lost = set()
        for ev in p.events:
            if not 0 <= ev.row < len(rows):
                raise PatternError(f"row {ev.row} out of range")
            lost.add(ev.row)
        rows = [r for i, r in enumerate(rows) if i not in lost]
    else:
        deletions = [ev for ev in p.events if isinstance(ev, Deletion)]
        for ev in deletions:
            _check_cell(rows, ev.row, ev.col)
        for ev in sorted(deletions, key=lambda e: (e.row, -e.col)):
            del rows[ev.row][ev.col]
        for ev in p.events:
            if isinstance(ev, Insertion):
                if not 0 <= ev.row < len(rows):
                    raise PatternError(f"row {ev.row} out of range")
                if not 0 <= ev.pos <= len(rows[ev.row]):
                    raise PatternError(f"insertion position {ev.pos} out of range")
                if ev.symbol not in (0, 1):
                    raise PatternError(f"inserted symbol {ev.symbol} is not binary")
                rows[ev.row].insert(ev.pos, ev.symbol)
    return ChannelOutput(tuple(tuple(r) for r in rows))


def _check_cell(rows, i, j):
    if not 0 <= i < len(rows) or not 0 <= j < len(rows[i]):
        raise PatternError(f"cell ({i}, {j}) out of range")


# --- sampling ---------------------------------------------------------------

def rng_for(seed: int, index: int = 0) -> np.random.Generator:
    """Counter-based generator; distinct ``index`` values give disjoint streams."""
    return np.random.Generator(np.random.Philox(key=seed, counter=[0, 0, 0, index]))


def sample_pattern(dims: tuple[int, int], cfg: ChannelConfig, index: int = 0) -> ErrorPattern:
    """Draw a uniformly random pattern of exactly ``cfg.t`` events.

    For ``I`` every event picks a row, a position in the current row and a
    symbol uniformly.  For ``ID`` each event is a deletion or an insertion
    with equal probability; the deletion cells are then drawn uniformly
    without replacement.
    """
    M, n = dims
    cfg.check(M, n)
    rng = rng_for(cfg.seed, index)
    t = cfg.t
    if cfg.kind is ErrorKind.S:
        cells = rng.choice(M * n, size=t, replace=False)
        return ErrorPattern(cfg.kind, tuple(Substitution(*divmod(int(c), n)) for c in cells))
    if cfg.kind is ErrorKind.L:
        lost = sorted(int(r) for r in rng.choice(M, size=t, replace=False))
        return ErrorPattern(cfg.kind, tuple(Loss(r) for r in lost))
    if cfg.kind is ErrorKind.D:
        return ErrorPattern(cfg.kind, _sample_deletions(rng, M, n, t))
    if cfg.kind is ErrorKind.I:
        return ErrorPattern(cfg.kind, _sample_insertions(rng, [n] * M, t))
    n_del = int(rng.binomial(t, 0.5))
    deletions = _sample_deletions(rng, M, n, n_del)
    lengths = [n] * M
    for ev in deletions:
        lengths[ev.row] -= 1
    return ErrorPattern(cfg.kind, deletions + _sample_insertions(rng, lengths, t - n_del))


def _sample_deletions(rng, M, n, t):
    cells = rng.choice(M * n, size=t, replace=False)
    return tuple(Deletion(*divmod(int(c), n)) for c in cells)


def _sample_insertions(rng, lengths, t):
    lengths = list(lengths)
    events = []
    for _ in range(t):
        row = int(rng.integers(len(lengths)))
        pos = int(rng.integers(lengths[row] + 1))
        events.append(Insertion(row, pos, int(rng.integers(2))))
        lengths[row] += 1
    return tuple(events)


def sample_representation(x: CompositeVector, seed: int, index: int = 0) -> StrandMatrix:
    """Uniformly random representation of ``x``: each column independently
    places its ones on a uniformly chosen subset of rows."""
    rng = rng_for(seed, index)
    cols = []
    for v in x:
        col = [0] * x.M
        for i in rng.choice(x.M, size=v, replace=False):
            col[int(i)] = 1
        cols.append(col)
    return StrandMatrix(tuple(zip(*cols)))


# --- error balls ------------------------------------------------------------

Rows = tuple[tuple[int, ...], ...]


def _substituted(rows: Rows, t: int) -> Iterable[Rows]:
    M, n = len(rows), len(rows[0])
    for cells in itertools.combinations(range(M * n), t):
        out = [list(r) for r in rows]
        for c in cells:
            i, j = divmod(c, n)
            out[i][j] ^= 1
        yield tuple(tuple(r) for r in out)


def _lost(rows: Rows, t: int) -> Iterable[Rows]:
    for kept in itertools.combinations(range(len(rows)), len(rows) - t):
        yield tuple(rows[i] for i in kept)


def _one_deletion(rows: Rows) -> set[Rows]:
    out = set()
    for i, r in enumerate(rows):
        for j in range(len(r)):
            out.add(rows[:i] + (r[:j] + r[j + 1:],) + rows[i + 1:])
    return out


def _one_insertion(rows: Rows) -> set[Rows]:
    out = set()
    for i, r in enumerate(rows):
        for j in range(len(r) + 1):
            for s in (0, 1):
                out.add(rows[:i] + (r[:j] + (s,) + r[j:],) + rows[i + 1:])
    return out


def _iterate(frontier: set[Rows], step, times: int) -> set[Rows]:
    for _ in range(times):
        nxt = set()
        for rows in frontier:
            nxt |= step(rows)
        frontier = nxt
    return frontier


def _outputs(rows: Rows, t: int, kind: ErrorKind) -> set[Rows]:
    if kind is ErrorKind.S:
        return set(_substituted(rows, t))
    if kind is ErrorKind.L:
        return set(_lost(rows, t))
    if kind is ErrorKind.D:
        return _iterate({rows}, _one_deletion, t)
    if kind is ErrorKind.I:
        return _iterate({rows}, _one_insertion, t)
    out = set()
    for n_del in range(t + 1):
        out |= _iterate(_iterate({rows}, _one_deletion, n_del), _one_insertion, t - n_del)
    return out


def pattern_count(M: int, n: int, t: int, kind: ErrorKind) -> int:
    """Number of patterns with exactly ``t`` events on an ``M x n`` matrix
    (an upper estimate for ``I`` and ``ID``); used for work caps."""
    kind = ErrorKind(kind)
    if kind in (ErrorKind.S, ErrorKind.D):
        return comb(M * n, t)
    if kind is ErrorKind.L:
        return comb(M, t)
    total = 1
    for k in range(t):
        total *= 2 * M * (n + k + 1)
    if kind is ErrorKind.ID:
        total *= 2**t
    return total


def _radius_limit(x: CompositeVector, kind: ErrorKind) -> int | None:
    return {ErrorKind.S: x.M * x.n, ErrorKind.L: x.M, ErrorKind.D: x.n, ErrorKind.ID: x.n}.get(kind)


def _ball_rows(x: CompositeVector, t: int, kind, *, at_most=False, canonical=False,
               cap=DEFAULT_CAP) -> frozenset[Rows]:
    kind = ErrorKind(kind)
    if t < 0:
        raise ConfigError("t must be nonnegative")
    limit = _radius_limit(x, kind)
    if at_most:
        radii = range((t if limit is None else min(t, limit)) + 1)
    elif limit is not None and t > limit:
        raise ConfigError(f"t={t} infeasible for kind {kind.value} with M={x.M}, n={x.n}")
    else:
        radii = (t,)
    work = representation_count(x) * sum(pattern_count(x.M, x.n, s, kind) for s in radii)
    if work > cap:
        raise CapExceeded(work, cap, "ball enumeration work")
    ball = set()
    for X in _representations(x):
        for s in radii:
            ball |= _outputs(X.rows, s, kind)
    if canonical:
        ball = {tuple(sorted(rows)) for rows in ball}
    return frozenset(ball)


def error_ball(x: CompositeVector, t: int, kind, *, at_most=False, canonical=False,
               cap=DEFAULT_CAP) -> frozenset[ChannelOutput]:
    """All channel outputs reachable from some representation of ``x`` by
    exactly ``t`` errors of ``kind``.

    Args:
        at_most: take the union over radii ``0..t`` instead.
        canonical: identify outputs that differ only by a row permutation
            (the strands as an unordered multiset).
        cap: bound on representations times patterns enumerated.

    Raises:
        CapExceeded: if the enumeration would exceed ``cap``.
    """
    return frozenset(ChannelOutput(rows) for rows in
                     _ball_rows(x, t, kind, at_most=at_most, canonical=canonical, cap=cap))


def single_deletion_ball_size(x: CompositeVector) -> int:
    """Closed-form number of distinct outputs of one deletion anywhere in any
    representation of ``x``.

    Each output is fixed by the damaged row's index (``M`` choices), which
    single-deletion result it carries (``run_count`` of the original row) and
    the remaining ``M - 1`` rows, which represent ``x`` minus that row.
    """
    total = 0
    for y in candidate_rows(x):
        rest = 1
        for v, b in zip(x, y):
            rest *= comb(x.M - 1, v - b)
        total += run_count(y) * rest
    return x.M * total


def balls_disjoint(x: CompositeVector, y: CompositeVector, t: int, kind, *, at_most=True,
                   canonical=False, cap=DEFAULT_CAP) -> bool:
    """Whether no received matrix can come from both ``x`` and ``y``.

    By default the balls cover up to ``t`` errors, which is the notion a
    ``t``-error-correcting code needs; pass ``at_most=False`` for balls of
    exactly ``t`` errors.
    """
    if x.n != y.n or x.M != y.M:
        raise ShapeError("vectors over different spaces")
    bx = _ball_rows(x, t, kind, at_most=at_most, canonical=canonical, cap=cap)
    by = _ball_rows(y, t, kind, at_most=at_most, canonical=canonical, cap=cap)
    return bx.isdisjoint(by)
