"""Composite vectors, their binary matrix representations and counting primitives.

A composite vector of length ``n`` over ``[0, M]`` records, per position, how
many of the ``M`` synthesized binary strands carry a one.  Any ``M x n``
binary matrix whose column sums equal the vector is a representation of it.

Rows are plain tuples of 0/1 ints.  A :class:`StrandMatrix` always has equal
row lengths; a :class:`ChannelOutput` may be ragged and may have fewer rows.
Indices are 0-based throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Iterator, Sequence

from .errors import CapExceeded, DomainError, ShapeError

Row = tuple[int, ...]

DEFAULT_CAP = 1_000_000


def _as_row(bits) -> Row:
    row = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in row):
        raise DomainError(f"row {row} is not binary")
    return row


@dataclass(frozen=True)
class CompositeVector:
    """A length-``n`` vector over ``[0, M]`` with ``M`` carried explicitly."""

    entries: tuple[int, ...]
    M: int

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.M < 1:
            raise DomainError(f"M must be positive, got {self.M}")
        if not entries:
            raise DomainError("composite vector must have length n >= 1")
        for v in entries:
            if not 0 <= v <= self.M:
                raise DomainError(f"entry {v} outside [0, {self.M}]")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, j):
        return self.entries[j]

    def __str__(self):
        return f"{self.M} {self.n} : " + " ".join(map(str, self.entries))


@dataclass(frozen=True, eq=False)
class ChannelOutput:
    """Rows read back from the channel; possibly ragged, possibly fewer than M."""

    rows: tuple[Row, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(_as_row(r) for r in self.rows))

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def n_max(self) -> int:
        return max(self.row_lengths, default=0)

    @property
    def is_uniform(self) -> bool:
        return len(set(self.row_lengths)) <= 1

    def __len__(self):
        return len(self.rows)

    # equality is on the rows alone, so a StrandMatrix equals the same rows read back
    def __eq__(self, other):
        if not isinstance(other, ChannelOutput):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def canonical(self) -> "ChannelOutput":
        """Row-sorted copy; two outputs are equal as multisets of strands iff
        their canonical forms are equal."""
        return ChannelOutput(tuple(sorted(self.rows)))


@dataclass(frozen=True, eq=False)
class StrandMatrix(ChannelOutput):
    """An ``M x n`` binary matrix; every row has the same length."""

    def __post_init__(self):
        super().__post_init__()
        if not self.rows:
            raise ShapeError("a strand matrix needs at least one row")
        if not self.is_uniform:
            raise ShapeError(f"rows of unequal length: {self.row_lengths}")
        if not self.rows[0]:
            raise ShapeError("a strand matrix needs n >= 1 columns")

    @property
    def M(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])


def column_sums(R: ChannelOutput, M: int | None = None) -> CompositeVector:
    """Count the ones in every column.

    The returned vector's ``M`` defaults to the row count of ``R``; pass ``M``
    explicitly when rows are missing (strand losses) so the result stays on
    the original alphabet.
    """
    if not R.rows:
        raise ShapeError("cannot sum the columns of a matrix without rows")
    if not R.is_uniform:
        raise ShapeError(f"ragged input, row lengths {R.row_lengths}")
    sums = tuple(sum(col) for col in zip(*R.rows))
    return CompositeVector(sums, len(R.rows) if M is None else M)


def is_representation(X: StrandMatrix, x: CompositeVector) -> bool:
    if X.M != x.M or X.n != x.n:
        raise ShapeError(f"matrix is {X.M}x{X.n}, vector needs {x.M}x{x.n}")
    return column_sums(X).entries == x.entries


def representation_count(x: CompositeVector) -> int:
    """Number of binary matrices whose column sums equal ``x``."""
    return prod(comb(x.M, v) for v in x)


def average_representation_count(M: int, n: int) -> Fraction:
    """Mean representation count over all ``(M+1)**n`` composite vectors."""
    return Fraction(2 ** (M * n), (M + 1) ** n)


def _column_choices(M: int, ones: int) -> list[tuple[int, ...]]:
    # bottom-packed ones come first
    out = []
    for rows in itertools.combinations(range(M - 1, -1, -1), ones):
        col = [0] * M
        for i in rows:
            col[i] = 1
        out.append(tuple(col))
    return out


def enumerate_representations(x: CompositeVector, cap: int = DEFAULT_CAP) -> Iterator[StrandMatrix]:
    """Yield every representation of ``x`` exactly once in canonical order.

    Columns vary like digits of an odometer whose most significant digit is
    the first column; within a column the ones start packed at the bottom.

    Raises:
        CapExceeded: before yielding anything, if there are more than ``cap``
            representations.
    """
    total = representation_count(x)
    if total > cap:
        raise CapExceeded(total, cap, "representations")
    return _representations(x)


def _representations(x: CompositeVector) -> Iterator[StrandMatrix]:
    per_column = [_column_choices(x.M, v) for v in x]
    for cols in itertools.product(*per_column):
        yield StrandMatrix(tuple(zip(*cols)))


def l1_distance(x: CompositeVector, y: CompositeVector) -> int:
    _check_pair(x, y)
    return sum(abs(a - b) for a, b in zip(x, y))


def linf_distance(x: CompositeVector, y: CompositeVector) -> int:
    _check_pair(x, y)
    return max(abs(a - b) for a, b in zip(x, y))


def _check_pair(x: CompositeVector, y: CompositeVector):
    if x.n != y.n or x.M != y.M:
        raise ShapeError(f"vectors over different spaces: (M={x.M}, n={x.n}) vs (M={y.M}, n={y.n})")


def run_count(y: Sequence[int]) -> int:
    """Number of maximal constant segments of a binary row."""
    if len(y) == 0:
        raise DomainError("run count of an empty row is undefined")
    return 1 + sum(1 for a, b in zip(y, y[1:]) if a != b)


def candidate_rows(x: CompositeVector) -> Iterator[Row]:
    """Yield every binary row that can appear in some representation of ``x``.

    Positions where ``x`` is ``M`` are forced to one, positions where it is
    zero are forced to zero; the rest are enumerated in lexicographic order.
    """
    choices = [(1,) if v == x.M else (0,) if v == 0 else (0, 1) for v in x]
    return itertools.product(*choices)


def all_vectors(M: int, n: int) -> Iterator[CompositeVector]:
    """Every composite vector of ``[0, M]^n`` in lexicographic order."""
    for entries in itertools.product(range(M + 1), repeat=n):
        yield CompositeVector(entries, M)
