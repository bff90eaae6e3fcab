"""Line-oriented text formats.

Composite vector::

    M n : x_1 x_2 ... x_n

Matrix (a strand matrix, or a possibly ragged channel output)::

    rows n_max
    0110
    100
    ...

Exactly ``rows`` lines follow the header, each ended by a newline; an
empty line is an empty row.

Error pattern::

    kind t
    S row col | L row | D row col | I row pos symbol

one event per line, 0-based indices.
"""

from __future__ import annotations

from .channels import Deletion, ErrorKind, ErrorPattern, Insertion, Loss, Substitution
from .core import ChannelOutput, CompositeVector, StrandMatrix
from .errors import DomainError


class FormatError(DomainError):
    """Text does not follow the expected format."""


def format_vector(x: CompositeVector) -> str:
    return str(x) + "\n"


def parse_vector(text: str) -> CompositeVector:
    line = text.strip()
    head, sep, body = line.partition(":")
    if not sep:
        raise FormatError(f"expected 'M n : x_1 ... x_n', got {line!r}")
    try:
        M, n = (int(v) for v in head.split())
        entries = tuple(int(v) for v in body.split())
    except ValueError:
        raise FormatError(f"malformed vector line {line!r}") from None
    if len(entries) != n:
        raise FormatError(f"header says n={n} but {len(entries)} entries follow")
    return CompositeVector(entries, M)


def format_matrix(R: ChannelOutput) -> str:
    lines = [f"{len(R.rows)} {R.n_max}"]
    lines += ["".join(map(str, row)) for row in R.rows]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> ChannelOutput:
    """Read a matrix; returns a :class:`StrandMatrix` when the rows are
    uniform, nonempty and as long as the header says."""
    lines = text.removesuffix("\n").split("\n")
    try:
        count, width = (int(v) for v in lines[0].split())
    except ValueError:
        raise FormatError(f"malformed matrix header {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != count:
        raise FormatError(f"header announces {count} rows, found {len(body)} lines")
    rows = []
    for line in body:
        line = line.strip()
        if set(line) - {"0", "1"}:
            raise FormatError(f"row {line!r} is not binary")
        rows.append(tuple(int(c) for c in line))
    R = ChannelOutput(tuple(rows))
    if R.n_max > width:
        raise FormatError(f"row longer than header width {width}")
    if rows and R.is_uniform and len(rows[0]) == width and width > 0:
        return StrandMatrix(R.rows)
    return R


def looks_like_vector(text: str) -> bool:
    return ":" in text.split("\n", 1)[0]


def format_pattern(p: ErrorPattern) -> str:
    lines = [f"{p.kind.value} {p.t}"]
    for ev in p.events:
        tag = {Substitution: "S", Loss: "L", Deletion: "D", Insertion: "I"}[type(ev)]
        lines.append(" ".join([tag, *map(str, ev)]))
    return "\n".join(lines) + "\n"


def parse_pattern(text: str) -> ErrorPattern:
    lines = [ln.strip() for ln in text.strip().split("\n")]
    try:
        kind, t = lines[0].split()
        kind, t = ErrorKind(kind), int(t)
    except ValueError:
        raise FormatError(f"malformed pattern header {lines[0]!r}") from None
    events = []
    types = {"S": Substitution, "L": Loss, "D": Deletion, "I": Insertion}
    for ln in lines[1:]:
        if not ln:
            continue
        tag, *fields = ln.split()
        try:
            events.append(types[tag](*(int(f) for f in fields)))
        except (KeyError, TypeError, ValueError):
            raise FormatError(f"malformed event line {ln!r}") from None
    if len(events) != t:
        raise FormatError(f"header announces {t} events, found {len(events)}")
    return ErrorPattern(kind, tuple(events))
