"""Command-line front end.

Exit codes: 0 success, 1 counterexample found, 2 usage or configuration
error, 3 decode failure, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import textio
from .analysis import DEFAULT_VERTEX_CAP, ClaimGrid, bound_report, verify_claims
from .channels import (
    ChannelConfig,
    ErrorKind,
    _ball_rows,
    apply_pattern,
    sample_pattern,
    sample_representation,
    single_deletion_ball_size,
)
from .codes import CODE_KINDS, CodeSpec
from .core import DEFAULT_CAP, StrandMatrix
from .errors import CapExceeded, CompDNAError, DecodeError

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_DECODE, EXIT_CAP = 0, 1, 2, 3, 4

# stream indices for the seeded generator
_REPRESENTATION_STREAM, _PATTERN_STREAM = 0, 1


class UsageError(Exception):
    pass


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)


def _code_spec(args) -> CodeSpec:
    if args.code is None:
        raise UsageError("--code is required")
    if " " in args.code.strip():
        return CodeSpec.parse(args.code)
    if args.M is None or args.n is None:
        raise UsageError("--M and --n are required with a bare --code kind")
    t = args.t if args.t is not None else 1
    return CodeSpec(args.code, args.M, args.n, t, a=args.a)


def _records_text(records, as_csv):
    if not as_csv:
        return "".join(json.dumps(r) + "\n" for r in records)
    if not records:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(records[0]), lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
    return buf.getvalue()


def cmd_encode(args):
    spec = _code_spec(args)
    code = spec.build()
    fields = _read(args.input).split()
    if not fields:
        raise UsageError("empty message")
    try:
        values = [int(f) for f in fields]
    except ValueError:
        raise UsageError(f"message must be integers, got {' '.join(fields)!r}") from None
    if spec.kind == "sl":
        c = code.encode(values)
    else:
        if len(values) != 1:
            raise UsageError(f"{spec.kind} codes take one message index")
        c = code.encode(values[0])
    _write(args.out, textio.format_vector(c))
    return EXIT_OK


def cmd_expand(args):
    x = textio.parse_vector(_read(args.input))
    X = sample_representation(x, args.seed, _REPRESENTATION_STREAM)
    _write(args.out, textio.format_matrix(X))
    return EXIT_OK


def cmd_channel(args):
    text = _read(args.input)
    if textio.looks_like_vector(text):
        X = sample_representation(textio.parse_vector(text), args.seed, _REPRESENTATION_STREAM)
    else:
        X = textio.parse_matrix(text)
    if args.pattern:
        p = textio.parse_pattern(_read(args.pattern))
    else:
        if args.kind is None or args.t is None:
            raise UsageError("--kind and --t are required unless --pattern is given")
        if not isinstance(X, StrandMatrix):
            raise UsageError("sampling a pattern needs a full strand matrix as input")
        cfg = ChannelConfig(args.kind, args.t, args.seed)
        p = sample_pattern((X.M, X.n), cfg, _PATTERN_STREAM)
    R = apply_pattern(X, p)
    _write(args.out, textio.format_matrix(R))
    pattern_out = args.pattern_out
    if pattern_out is None and args.out not in (None, "-"):
        pattern_out = args.out + ".pattern"
    if pattern_out is not None:
        _write(pattern_out, textio.format_pattern(p))
    return EXIT_OK


def cmd_decode(args):
    spec = _code_spec(args)
    code = spec.build()
    R = textio.parse_matrix(_read(args.input))
    try:
        c = code.decode(R)
    except DecodeError as exc:
        record = {"status": "decode-failure", "code": str(spec), "reason": str(exc)}
        sys.stderr.write(json.dumps(record) + "\n")
        return EXIT_DECODE
    _write(args.out, textio.format_vector(c))
    return EXIT_OK


def cmd_bounds(args):
    if args.kind is None or args.M is None or args.n is None or args.t is None:
        raise UsageError("bounds needs --kind, --M, --n and --t")
    try:
        report = bound_report(args.M, args.n, args.t, args.kind, cap=args.cap or DEFAULT_VERTEX_CAP)
    except CapExceeded as exc:
        record = {"kind": args.kind, "M": args.M, "n": args.n, "t": args.t, "bound": None,
                  "achieved": None, "method": "cap-exceeded", "complete": False}
        _write(args.out, _records_text([record], args.csv))
        sys.stderr.write(f"cap exceeded: {exc}\n")
        return EXIT_CAP
    _write(args.out, _records_text([report.to_record()], args.csv))
    return EXIT_OK


def cmd_verify(args):
    try:
        grid = ClaimGrid.named(args.grid)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = verify_claims(grid, cap=args.cap or DEFAULT_CAP)
    _write(args.out, _records_text([r.to_record() for r in report], args.csv))
    if any(r.counterexamples for r in report):
        return EXIT_COUNTEREXAMPLE
    if not all(r.complete for r in report):
        return EXIT_CAP
    return EXIT_OK


def cmd_ballsize(args):
    x = textio.parse_vector(_read(args.input))
    record = {"vector": list(x), "M": x.M, "formula": single_deletion_ball_size(x)}
    if args.exhaustive:
        try:
            record["enumerated"] = len(_ball_rows(x, 1, ErrorKind.D, cap=args.cap or DEFAULT_CAP))
        except CapExceeded as exc:
            record["enumerated"] = None
            _write(args.out, _records_text([record], args.csv))
            sys.stderr.write(f"cap exceeded: {exc}\n")
            return EXIT_CAP
    _write(args.out, _records_text([record], args.csv))
    if args.exhaustive and record["enumerated"] != record["formula"]:
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="compdna", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def io_flags(p):
        p.add_argument("--in", dest="input", help="input file (default: stdin)")
        p.add_argument("--out", help="output file (default: stdout)")

    def code_flags(p):
        p.add_argument("--code", help=f"code kind {CODE_KINDS} or a full spec like 'vt 5 4 1 0'")
        p.add_argument("--M", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--t", type=int)
        p.add_argument("--a", type=int)

    def report_flags(p):
        p.add_argument("--csv", action="store_true", help="comma-separated table instead of JSON lines")
        p.add_argument("--cap", type=int, help="size cap for exhaustive work")

    p = sub.add_parser("encode", help="map a message to a codeword")
    io_flags(p)
    code_flags(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("expand", help="sample a matrix representation of a vector")
    io_flags(p)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("channel", help="inject errors into a matrix or vector")
    io_flags(p)
    p.add_argument("--kind", choices=[k.value for k in ErrorKind])
    p.add_argument("--t", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pattern", help="apply this pattern file instead of sampling")
    p.add_argument("--pattern-out", help="where to write the pattern (default: OUT.pattern)")
    p.set_defaults(func=cmd_channel)

    p = sub.add_parser("decode", help="decode a received matrix")
    io_flags(p)
    code_flags(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("bounds", help="upper bound and achieved size for one instance")
    p.add_argument("--out")
    p.add_argument("--kind", choices=[k.value for k in ErrorKind])
    p.add_argument("--M", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    report_flags(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="exhaustive claim sweeps")
    p.add_argument("--out")
    p.add_argument("--grid", default="small", help="empty, tiny or small")
    report_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ballsize", help="single-deletion ball size of a vector")
    io_flags(p)
    p.add_argument("--exhaustive", action="store_true", help="also count by enumeration")
    report_flags(p)
    p.set_defaults(func=cmd_ballsize)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"compdna {args.command}: {exc}\n")
        return EXIT_USAGE
    except CapExceeded as exc:
        sys.stderr.write(f"compdna {args.command}: cap exceeded: {exc}\n")
        return EXIT_CAP
    except CompDNAError as exc:
        sys.stderr.write(f"compdna {args.command}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
