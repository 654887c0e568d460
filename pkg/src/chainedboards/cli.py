"""Command-line interface.

Subcommands: count, enumerate, convert, validate, render, verify-tables.
Exit codes: 0 success / all checks pass, 1 validation failure or count
mismatch, 2 usage error (including operations undefined for the input's
domain).  Diagnostics go to stderr; data goes to stdout or --out.
"""

from __future__ import annotations

import argparse
import sys
from collections import deque

from .asm import (
    asm_to_permutation,
    enumerate_chained_asm,
    permutation_to_asm,
)
from .boards import BoardSpec, Shape, max_rooks
from .counting import count_max, count_placements_formula
from .errors import (
    ChainedBoardsError,
    InputDomainError,
    ParseError,
    UnsupportedDomainError,
    ValidationError,
)
from .ice import from_fpl, from_ice, to_fpl, to_ice
from .matchings import from_matching, to_matching
from .perms import from_one_line, placement_to_matrices, to_one_line
from .placements import count_placements_brute, enumerate_placements
from .rendering import render
from .serialization import deserialize, serialize
from .triangles import from_monotone_triangles, to_monotone_triangles
from .verify import verify_tables

_CONVERSIONS = {
    ("oneline", "matrix"): from_one_line,
    ("matrix", "oneline"): to_one_line,
    ("matrix", "matching"): to_matching,
    ("matching", "matrix"): from_matching,
    ("matrix", "asm"): permutation_to_asm,
    ("asm", "matrix"): asm_to_permutation,
    ("asm", "mt"): to_monotone_triangles,
    ("mt", "asm"): from_monotone_triangles,
    ("asm", "ice"): to_ice,
    ("ice", "asm"): from_ice,
    ("ice", "fpl"): to_fpl,
    ("fpl", "ice"): from_fpl,
}

_DOC_FAMILY = {
    "one-line": "oneline",
    "chained-permutation": "matrix",
    "chain-matching": "matching",
    "chained-asm": "asm",
    "monotone-triangle-chain": "mt",
    "ice": "ice",
    "fpl": "fpl",
    "placement": "placement",
    "plain-asm": "plain-asm",
}


def _conversion_path(src: str, dst: str) -> list:
    """Shortest chain of direct conversions from src to dst."""
    queue = deque([(src, [])])
    seen = {src}
    while queue:
        here, steps = queue.popleft()
        if here == dst:
            return steps
        for (a, b), fn in _CONVERSIONS.items():
            if a == here and b not in seen:
                seen.add(b)
                queue.append((b, steps + [fn]))
    raise UnsupportedDomainError(f"no conversion from {src} to {dst}")


def _board_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--shape", required=True, choices=["linear", "circular"])
    parser.add_argument("-n", required=True, type=int, help="board side length")
    parser.add_argument("-k", required=True, type=int, help="number of chained boards")


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_count(args) -> int:
    board = BoardSpec(Shape(args.shape), args.n, args.k)
    top = max_rooks(board)
    m = top if args.m is None else args.m
    if args.method == "closed":
        if m != top:
            raise UnsupportedDomainError(
                f"--method closed counts maximum placements only (m = {top})"
            )
        value = count_max(board)
    elif args.method == "brute":
        value = count_placements_brute(board, m)
    else:
        value = count_placements_formula(board, m)
    print(value)
    return 0


def _cmd_enumerate(args) -> int:
    board = BoardSpec(Shape(args.shape), args.n, args.k)
    if args.family == "placements":
        m = max_rooks(board) if args.m is None else args.m
        stream = enumerate_placements(board, m)
    elif args.family == "perms":
        stream = (
            placement_to_matrices(p) for p in enumerate_placements(board, max_rooks(board))
        )
    else:
        stream = enumerate_chained_asm(board)
    lines = []
    for idx, obj in enumerate(stream):
        if args.limit is not None and idx >= args.limit:
            break
        lines.append(serialize(obj))
    _write_output(args.out, "".join(lines))
    return 0


def _cmd_convert(args) -> int:
    if args.source == args.target:
        raise UnsupportedDomainError("--from and --to must differ")
    steps = _conversion_path(args.source, args.target)
    obj = deserialize(_read_input(args.infile))
    family = _DOC_FAMILY[_family_of(obj)]
    if family != args.source:
        raise ValidationError(f"input document is a {family}, not a {args.source}")
    for step in steps:
        obj = step(obj)
    _write_output(args.out, serialize(obj))
    return 0


def _family_of(obj) -> str:
    from .asm import ChainedASM, PlainASM
    from .ice import FPLConfiguration, IceConfiguration
    from .matchings import ChainMatching
    from .perms import ChainedPermutation, OneLine
    from .placements import RookPlacement
    from .triangles import MonotoneTriangleChain

    names = {
        RookPlacement: "placement",
        ChainedPermutation: "chained-permutation",
        OneLine: "one-line",
        ChainMatching: "chain-matching",
        ChainedASM: "chained-asm",
        PlainASM: "plain-asm",
        MonotoneTriangleChain: "monotone-triangle-chain",
        IceConfiguration: "ice",
        FPLConfiguration: "fpl",
    }
    return names[type(obj)]


def _cmd_validate(args) -> int:
    try:
        obj = deserialize(_read_input(args.infile))
    except ValidationError as exc:
        for problem in exc.problems:
            print(problem, file=sys.stderr)
        print("invalid")
        return 1
    family = _family_of(obj)
    if args.family is not None and args.family not in (family, _DOC_FAMILY[family]):
        print(f"document is a {family}, not a {args.family}", file=sys.stderr)
        print("invalid")
        return 1
    print(f"valid {family}")
    return 0


def _cmd_render(args) -> int:
    obj = deserialize(_read_input(args.infile))
    _write_output(args.out, render(obj, args.format))
    return 0


def _cmd_verify_tables(args) -> int:
    report = verify_tables(
        max_n=args.max_n, max_k=args.max_k, budget_seconds=args.budget_seconds
    )
    _write_output(args.out, report.to_tsv())
    for record in report.skipped:
        print(f"skipped {record.family} {record.shape} n={record.n} k={record.k}", file=sys.stderr)
    if report.failures:
        for record in report.failures:
            print(
                f"FAIL {record.family} {record.shape} n={record.n} k={record.k}:"
                f" expected {record.expected}, got {record.actual}",
                file=sys.stderr,
            )
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chained-boards",
        description="Count, enumerate, convert, and verify rook placements,"
        " chained permutations, and chained alternating sign matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count non-attacking rook placements")
    _board_args(p)
    p.add_argument("-m", type=int, default=None, help="rooks to place (default: maximum)")
    p.add_argument("--method", choices=["formula", "closed", "brute"], default="formula")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="stream objects as canonical documents")
    p.add_argument("--family", required=True, choices=["placements", "perms", "asm"])
    _board_args(p)
    p.add_argument("-m", type=int, default=None, help="rooks (placements only)")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_enumerate)

    families = ["matrix", "oneline", "matching", "asm", "mt", "ice", "fpl"]
    p = sub.add_parser("convert", help="convert between object families")
    p.add_argument("--from", dest="source", required=True, choices=families)
    p.add_argument("--to", dest="target", required=True, choices=families)
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("validate", help="validate a document")
    p.add_argument("--family", default=None)
    p.add_argument("--in", dest="infile", default=None)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("render", help="render a document as text")
    p.add_argument("--format", required=True, choices=["ascii", "dot"])
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("verify-tables", help="replay the reference counts")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=30.0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_verify_tables)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (UnsupportedDomainError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValidationError, ParseError, InputDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, ValidationError):
            for problem in exc.problems:
                if problem != str(exc):
                    print(problem, file=sys.stderr)
        return 1
    except ChainedBoardsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
