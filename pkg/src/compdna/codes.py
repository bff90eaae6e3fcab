"""Explicit composite code constructions with encoders and decoders.

* :class:`StrandLossCode` corrects ``t`` lost strands: every level is a
  multiple of ``t + 1``.
* :class:`CompositeVTCode` corrects one deletion in one strand: the weighted
  level sum ``sum((j+1) * c_j)`` is fixed modulo ``n + 1``.
* :class:`CombinedLSCode` corrects ``t`` lost strands plus one substitution:
  levels are multiples of ``t + 1`` whose quotients, reduced mod 2, form a
  word of a binary single-error-correcting code.

Positions are 0-based in the API; weights in the VT syndrome are 1-based so
that syndromes match the usual convention.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .core import ChannelOutput, CompositeVector, column_sums, l1_distance
from .errors import DecodeError, DomainError, EncodeError, ShapeError


# --- lexicographic ranking over state-constrained codebooks -----------------

class _LexCounter:
    """Counts, ranks and unranks words whose per-position values drive a small
    state machine to an accepting state.

    ``step(state, j, value)`` returns the next state; the codebook is the set
    of words over ``alphabet[j]`` ending in ``target`` from initial state 0.
    """

    def __init__(self, alphabet: Sequence[Sequence[int]], n_states: int,
                 step: Callable[[int, int, int], int], target: int):
        self.alphabet = [sorted(a) for a in alphabet]
        self.step = step
        n = len(alphabet)
        counts = [[0] * n_states for _ in range(n + 1)]
        counts[n][target] = 1
        for j in range(n - 1, -1, -1):
            nxt = counts[j + 1]
            for s in range(n_states):
                counts[j][s] = sum(nxt[step(s, j, v)] for v in self.alphabet[j])
        self.counts = counts

    @property
    def size(self) -> int:
        return self.counts[0][0]

    def unrank(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.size:
            raise EncodeError(f"message index {index} outside [0, {self.size})")
        word, s = [], 0
        for j, values in enumerate(self.alphabet):
            for v in values:
                c = self.counts[j + 1][self.step(s, j, v)]
                if index < c:
                    word.append(v)
                    s = self.step(s, j, v)
                    break
                index -= c
        return tuple(word)

    def rank(self, word: Sequence[int]) -> int:
        index, s = 0, 0
        for j, w in enumerate(word):
            for v in self.alphabet[j]:
                if v == w:
                    break
                index += self.counts[j + 1][self.step(s, j, v)]
            s = self.step(s, j, w)
        return index

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return (self.unrank(i) for i in range(self.size))


# --- strand-loss code ---------------------------------------------------------

@dataclass(frozen=True)
class StrandLossCode:
    """Levels restricted to multiples of ``t + 1``; corrects ``t`` strand losses."""

    M: int
    n: int
    t: int

    def __post_init__(self):
        if not (self.n >= 1 and 1 <= self.t < self.M):
            raise DomainError(f"need n >= 1 and 1 <= t < M, got M={self.M} n={self.n} t={self.t}")

    @property
    def base(self) -> int:
        """Number of admissible levels per position."""
        return self.M // (self.t + 1) + 1

    @property
    def size(self) -> int:
        return self.base ** self.n

    def contains(self, x: CompositeVector) -> bool:
        _check_dims(self, x)
        return all(v % (self.t + 1) == 0 for v in x)

    def encode(self, digits: Sequence[int]) -> CompositeVector:
        if len(digits) != self.n:
            raise EncodeError(f"expected {self.n} digits, got {len(digits)}")
        for d in digits:
            if not 0 <= d < self.base:
                raise EncodeError(f"digit {d} outside [0, {self.base - 1}]")
        return CompositeVector(tuple(d * (self.t + 1) for d in digits), self.M)

    def message(self, c: CompositeVector) -> tuple[int, ...]:
        if not self.contains(c):
            raise EncodeError(f"{c} is not a codeword")
        return tuple(v // (self.t + 1) for v in c)

    def codewords(self) -> Iterator[CompositeVector]:
        for digits in itertools.product(range(self.base), repeat=self.n):
            yield self.encode(digits)

    def decode(self, R: ChannelOutput) -> CompositeVector:
        """Round every column count up to the next multiple of ``t + 1``."""
        _check_rows(R, self.M, self.n, min_rows=self.M - self.t)
        r = _raw_sums(R, self.n)
        y = tuple(v + (-v) % (self.t + 1) for v in r)
        if max(y) > self.M:
            raise DecodeError(f"rounded vector {y} leaves [0, {self.M}]")
        return CompositeVector(y, self.M)


# --- binary and composite VT codes -----------------------------------------

def composite_vt_syndrome(x: Iterable[int], n: int | None = None) -> int:
    """``sum((j+1) * x_j) mod (n+1)`` for a composite vector or binary row.

    ``n`` defaults to the length of ``x``; pass it for a shortened row whose
    syndrome is taken in the full-length code.
    """
    x = tuple(x)
    n = len(x) if n is None else n
    return sum((j + 1) * v for j, v in enumerate(x)) % (n + 1)


def binary_vt_decode(row: Sequence[int], b: int, n: int) -> tuple[int, ...]:
    """Recover the word of the length-``n`` VT code with syndrome ``b`` from
    ``row``, which is that word with one symbol deleted.

    The syndrome deficit ``D`` of the short row tells what was lost: if ``D``
    does not exceed the row's weight a 0 was deleted and goes back with ``D``
    ones to its right; otherwise a 1 was deleted and goes back with
    ``D - weight - 1`` zeros to its left.
    """
    row = tuple(row)
    if len(row) != n - 1:
        raise ShapeError(f"expected a row of length {n - 1}, got {len(row)}")
    if not 0 <= b <= n:
        raise DomainError(f"syndrome {b} outside [0, {n}]")
    weight = sum(row)
    deficit = (b - composite_vt_syndrome(row, n)) % (n + 1)
    if deficit <= weight:
        ones_right = 0
        pos = n - 1
        while ones_right < deficit:
            pos -= 1
            ones_right += row[pos]
        out = row[:pos] + (0,) + row[pos:]
    else:
        zeros_left = deficit - weight - 1
        pos = seen = 0
        while seen < zeros_left:
            seen += 1 - row[pos]
            pos += 1
        out = row[:pos] + (1,) + row[pos:]
    if composite_vt_syndrome(out) != b:
        raise DecodeError(f"no single insertion maps {row} into VT_{b}({n})")
    return out


@dataclass(frozen=True)
class VTDecodeTrace:
    short_row: int | None
    rest_syndrome: int | None
    row_syndrome: int | None
    repaired_row: tuple[int, ...] | None
    result: CompositeVector


@dataclass(frozen=True)
class CompositeVTCode:
    """Composite vectors with weighted level sum congruent to ``a`` mod ``n+1``;
    corrects a single deletion in any one strand."""

    M: int
    n: int
    a: int = 0

    def __post_init__(self):
        if self.M < 1 or self.n < 1:
            raise DomainError("need M >= 1 and n >= 1")
        if not 0 <= self.a <= self.n:
            raise DomainError(f"residue a={self.a} outside [0, {self.n}]")

    @property
    def _lex(self) -> _LexCounter:
        # cheap to rebuild: (n+1) states per position
        m = self.n + 1
        return _LexCounter([range(self.M + 1)] * self.n, m,
                           lambda s, j, v: (s + (j + 1) * v) % m, self.a)

    @property
    def size(self) -> int:
        return self._lex.size

    def contains(self, x: CompositeVector) -> bool:
        _check_dims(self, x)
        return composite_vt_syndrome(x) == self.a

    def encode(self, index: int) -> CompositeVector:
        """The ``index``-th codeword in lexicographic order."""
        return CompositeVector(self._lex.unrank(index), self.M)

    def rank(self, c: CompositeVector) -> int:
        if not self.contains(c):
            raise EncodeError(f"{c} is not a codeword")
        return self._lex.rank(c.entries)

    def codewords(self) -> Iterator[CompositeVector]:
        for word in self._lex:
            yield CompositeVector(word, self.M)

    def decode(self, R: ChannelOutput) -> CompositeVector:
        return self.decode_with_trace(R).result

    def decode_with_trace(self, R: ChannelOutput) -> VTDecodeTrace:
        n, m = self.n, self.n + 1
        if len(R) != self.M:
            raise DecodeError(f"expected {self.M} rows, got {len(R)}")
        lengths = R.row_lengths
        short = [i for i, k in enumerate(lengths) if k != n]
        if not short:
            x = column_sums(R, self.M)
            if composite_vt_syndrome(x) != self.a:
                raise DecodeError(f"error-free matrix has syndrome {composite_vt_syndrome(x)} != {self.a}")
            return VTDecodeTrace(None, None, None, None, x)
        if len(short) > 1 or lengths[short[0]] != n - 1:
            raise DecodeError(f"row lengths {lengths} exceed a single deletion")
        k = short[0]
        rest = sum(composite_vt_syndrome(r) for i, r in enumerate(R.rows) if i != k) % m
        b = (self.a - rest) % m
        repaired = binary_vt_decode(R.rows[k], b, n)
        rows = R.rows[:k] + (repaired,) + R.rows[k + 1:]
        x = column_sums(ChannelOutput(rows), self.M)
        if composite_vt_syndrome(x) != self.a:
            raise DecodeError("repaired matrix fails the code's syndrome")
        return VTDecodeTrace(k, rest, b, repaired, x)


# --- inner code and the combined loss+substitution code -------------------

@dataclass(frozen=True)
class ShortenedHamming:
    """Binary single-error-correcting code of length ``n``.

    Position ``j`` has parity-check column ``j + 1`` written in binary, so the
    syndrome of a word is the XOR of ``j + 1`` over its ones and a single error
    at ``j`` has syndrome ``j + 1``.  For ``n = 2**m - 1`` this is the Hamming
    code; shorter lengths drop the trailing columns.
    """

    n: int

    @property
    def redundancy(self) -> int:
        return self.n.bit_length()

    @property
    def dimension(self) -> int:
        return self.n - self.redundancy

    def syndrome(self, bits: Sequence[int]) -> int:
        s = 0
        for j, b in enumerate(bits):
            if b:
                s ^= j + 1
        return s

    def contains(self, bits: Sequence[int]) -> bool:
        return len(bits) == self.n and self.syndrome(bits) == 0

    def encode(self, message: Sequence[int]) -> tuple[int, ...]:
        """Systematic encoding: message bits fill positions whose index plus
        one is not a power of two; the others are parity bits."""
        if len(message) != self.dimension:
            raise EncodeError(f"expected {self.dimension} message bits, got {len(message)}")
        word = [0] * self.n
        data = iter(message)
        for j in range(self.n):
            if (j + 1) & j:
                word[j] = int(next(data))
        s = self.syndrome(word)
        for i in range(self.redundancy):
            if s >> i & 1:
                word[(1 << i) - 1] = 1
        return tuple(word)

    def decode(self, bits: Sequence[int]) -> int | None:
        """Position of the single error, or ``None`` if ``bits`` is a codeword."""
        s = self.syndrome(bits)
        if s == 0:
            return None
        if s > self.n:
            raise DecodeError(f"syndrome {s} matches no single error")
        return s - 1

    def codewords(self) -> Iterator[tuple[int, ...]]:
        for msg in itertools.product((0, 1), repeat=self.dimension):
            yield self.encode(msg)


@dataclass(frozen=True)
class LSDecodeTrace:
    column_sums: tuple[int, ...]
    rounded: tuple[int, ...]
    error_col: int | None
    branch: str | None  # "raise": c_h = r_h + t + 1, "lower": c_h = r_h - 1
    result: CompositeVector


@dataclass(frozen=True)
class CombinedLSCode:
    """Corrects up to ``t`` strand losses together with one substitution."""

    M: int
    n: int
    t: int

    def __post_init__(self):
        if not (self.n >= 1 and 1 <= self.t < self.M):
            raise DomainError(f"need n >= 1 and 1 <= t < M, got M={self.M} n={self.n} t={self.t}")

    @property
    def inner(self) -> ShortenedHamming:
        return ShortenedHamming(self.n)

    @property
    def _lex(self) -> _LexCounter:
        q = self.t + 1
        levels = range(0, self.M + 1, q)
        return _LexCounter([levels] * self.n, 1 << self.inner.redundancy,
                           lambda s, j, v: s ^ ((j + 1) if (v // q) & 1 else 0), 0)

    @property
    def size(self) -> int:
        return self._lex.size

    def contains(self, x: CompositeVector) -> bool:
        _check_dims(self, x)
        q = self.t + 1
        if any(v % q for v in x):
            return False
        return self.inner.contains(tuple((v // q) % 2 for v in x))

    def encode(self, index: int) -> CompositeVector:
        """The ``index``-th codeword in lexicographic order."""
        return CompositeVector(self._lex.unrank(index), self.M)

    def rank(self, c: CompositeVector) -> int:
        if not self.contains(c):
            raise EncodeError(f"{c} is not a codeword")
        return self._lex.rank(c.entries)

    def codewords(self) -> Iterator[CompositeVector]:
        for word in self._lex:
            yield CompositeVector(word, self.M)

    def decode(self, R: ChannelOutput) -> CompositeVector:
        return self.decode_with_trace(R).result

    def decode_with_trace(self, R: ChannelOutput) -> LSDecodeTrace:
        _check_rows(R, self.M, self.n, min_rows=self.M - self.t)
        q = self.t + 1
        r = _raw_sums(R, self.n)
        rounded = tuple(v + (-v) % q for v in r)
        y = list(rounded)
        h = self.inner.decode([(v // q) % 2 for v in y])
        branch = None
        if h is not None:
            if y[h] == r[h]:
                y[h] = r[h] + q
                branch = "raise"
            else:
                y[h] = r[h] - 1
                branch = "lower"
        if any(not 0 <= v <= self.M for v in y):
            raise DecodeError(f"corrected vector {y} leaves [0, {self.M}]")
        c = CompositeVector(tuple(y), self.M)
        if not self.contains(c):
            raise DecodeError(f"corrected vector {y} is not a codeword")
        return LSDecodeTrace(r, rounded, h, branch, c)


# --- helpers -----------------------------------------------------------------

def min_l1_membership(codebook: Iterable[CompositeVector], t: int) -> bool:
    """Whether every pair of distinct codewords is at L1 distance >= 2t + 1."""
    words = list(dict.fromkeys(codebook))
    return all(l1_distance(a, b) >= 2 * t + 1 for a, b in itertools.combinations(words, 2))


def _check_dims(code, x: CompositeVector):
    if x.M != code.M or x.n != code.n:
        raise ShapeError(f"vector over (M={x.M}, n={x.n}) but code over (M={code.M}, n={code.n})")


def _check_rows(R: ChannelOutput, M: int, n: int, min_rows: int):
    if len(R) > M:
        raise DecodeError(f"{len(R)} rows received but only {M} strands exist")
    if len(R) < min_rows:
        raise DecodeError(f"{M - len(R)} strands lost, more than the code corrects")
    if any(k != n for k in R.row_lengths):
        raise DecodeError(f"row lengths {R.row_lengths} differ from n={n}")


def _raw_sums(R: ChannelOutput, n: int) -> tuple[int, ...]:
    return tuple(sum(col) for col in zip(*R.rows)) if R.rows else (0,) * n


# --- serialized code descriptions ---------------------------------------------

CODE_KINDS = ("sl", "vt", "ls")


@dataclass(frozen=True)
class CodeSpec:
    """One-line description ``kind M n t [a] [inner]`` of a code instance."""

    kind: str
    M: int
    n: int
    t: int = 1
    a: int | None = None
    inner: str | None = None

    def __post_init__(self):
        if self.kind not in CODE_KINDS:
            raise DomainError(f"unknown code kind {self.kind!r}; expected one of {CODE_KINDS}")
        if self.kind == "vt":
            if self.t != 1:
                raise DomainError("the VT construction corrects exactly one deletion (t=1)")
            if self.a is None:
                object.__setattr__(self, "a", 0)
        if self.kind == "ls" and self.inner is None:
            object.__setattr__(self, "inner", "hamming")
        if self.kind == "ls" and self.inner != "hamming":
            raise DomainError(f"unsupported inner code {self.inner!r}")

    def build(self):
        if self.kind == "sl":
            return StrandLossCode(self.M, self.n, self.t)
        if self.kind == "vt":
            return CompositeVTCode(self.M, self.n, self.a)
        return CombinedLSCode(self.M, self.n, self.t)

    def __str__(self):
        parts = [self.kind, self.M, self.n, self.t]
        if self.kind == "vt":
            parts.append(self.a)
        if self.kind == "ls":
            parts.append(self.inner)
        return " ".join(map(str, parts))

    @classmethod
    def parse(cls, line: str) -> "CodeSpec":
        fields = line.split()
        if len(fields) < 4:
            raise DomainError(f"code spec needs 'kind M n t ...', got {line!r}")
        kind = fields[0]
        try:
            M, n, t = (int(f) for f in fields[1:4])
            if kind == "vt":
                a = int(fields[4]) if len(fields) > 4 else 0
                return cls(kind, M, n, t, a=a)
        except ValueError as exc:
            raise DomainError(f"bad code spec {line!r}: {exc}") from None
        if kind == "ls":
            return cls(kind, M, n, t, inner=fields[4] if len(fields) > 4 else "hamming")
        return cls(kind, M, n, t)
