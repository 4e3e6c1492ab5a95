"""Command-line interface.

Five subcommands cover the library surface: ``info`` (diagram geometry),
``qrook`` (the polynomials), ``rankdist`` (matrix counts, optionally checked
against the exhaustive oracle), ``classes`` (diagonal-equivalence classes of
a board) and ``verify`` (the identity checks).  ``--json`` switches from the
human tables to a stable machine format; JSON output is byte-identical
across runs for identical inputs.

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 internal
cross-check mismatch, 4 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle, qrook, verify
from .diagrams import (
    FerrersDiagram,
    diagram_from_sequence,
    enumerate_diagrams,
    equivalence_classes,
    parse_diagram,
    symmetric_diagram_from_sequence,
)
from .laurent import LaurentPolynomial
from .sequences import parse_sequence

FORMAT_VERSION = 1

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_MISMATCH = 3
EXIT_BUDGET = 4


class CrossCheckError(RuntimeError):
    """Two supposedly equal computations disagreed."""


def _envelope(command: str, inputs: dict, result: dict) -> dict:
    return {"command": command, "input": inputs, "result": result, "version": FORMAT_VERSION}


def _emit(args, envelope: dict, human: str):
    if getattr(args, "json", False):
        print(json.dumps(envelope, sort_keys=True, separators=(",", ":")))
    else:
        print(human)


def _load_diagram(args, kinds_need_symmetric: bool = False) -> FerrersDiagram:
    if getattr(args, "diagram", None) is not None:
        return parse_diagram(args.diagram)
    seq = parse_sequence(args.sequence)
    if kinds_need_symmetric:
        return symmetric_diagram_from_sequence(seq)
    return diagram_from_sequence(seq)


def _parse_fields(text: str) -> tuple[int, ...]:
    try:
        fields = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"not a comma-separated integer list: {text!r}") from None
    if not fields:
        raise ValueError("at least one field order is required")
    return fields


# ---------------------------------------------------------------------------
# subcommands


def cmd_info(args) -> int:
    diagram = _load_diagram(args)
    seq = diagram.diagonal_sequence()
    canonical = diagram.canonical_form()
    xi = sorted(diagram.xi_cells())
    result = {
        "diagram": diagram.to_json_dict(),
        "size": diagram.size,
        "sequence": list(seq),
        "degree": diagram.degree(),
        "symmetric": diagram.is_symmetric(),
        "xi_cells": [list(c) for c in xi],
        "canonical": canonical.to_json_dict(),
    }
    human = "\n".join(
        [
            f"diagram:   {diagram}",
            f"size:      {diagram.size}",
            f"sequence:  ({','.join(map(str, seq))})",
            f"degree:    {diagram.degree()}",
            f"symmetric: {'yes' if diagram.is_symmetric() else 'no'}",
            f"diagonal cells: {len(xi)}",
            f"canonical: {canonical}",
            diagram.ascii_art(),
        ]
    )
    _emit(args, _envelope("info", _input_echo(args), result), human)
    return EXIT_OK


def _input_echo(args) -> dict:
    echo = {}
    for key in ("diagram", "sequence", "r", "t", "s", "kind", "method", "q",
                "oracle", "rows", "cols", "fields", "check"):
        value = getattr(args, key, None)
        if value is not None and value is not False:
            echo[key] = value
    return echo


def _compute_qrook(args, diagram: FerrersDiagram | None, seq) -> LaurentPolynomial:
    kind = args.kind
    results = {}
    if args.method in ("enum", "both"):
        d = diagram if diagram is not None else (
            symmetric_diagram_from_sequence(seq) if kind in ("alt", "sym")
            else diagram_from_sequence(seq)
        )
        if kind == "general":
            results["enum"] = qrook.qrook_enumerative(d, args.r)
        elif kind == "alt":
            results["enum"] = qrook.qrook_alt_enumerative(d, args.r)
        else:
            results["enum"] = qrook.qrook_sym_enumerative(d, args.t, args.s)
    if args.method in ("rec", "both"):
        s = seq if seq is not None else diagram.diagonal_sequence()
        if kind == "general":
            results["rec"] = qrook.qrook_recursive(s, args.r)
        elif kind == "alt":
            results["rec"] = qrook.qrook_alt_recursive(s, args.r)
        else:
            results["rec"] = qrook.qrook_sym_recursive(s, args.t, args.s)
    if len(results) == 2 and results["enum"] != results["rec"]:
        raise CrossCheckError(
            f"enumerative {results['enum']} differs from recursive {results['rec']}"
        )
    return next(iter(results.values()))


def cmd_qrook(args) -> int:
    if args.kind in ("general", "alt"):
        if args.r is None:
            raise ValueError("--r is required for kind general and alt")
    elif args.t is None or args.s is None:
        raise ValueError("--t and --s are required for kind sym")
    diagram = parse_diagram(args.diagram) if args.diagram is not None else None
    seq = parse_sequence(args.sequence) if args.sequence is not None else None
    if args.kind in ("alt", "sym"):
        check = diagram if diagram is not None else None
        if check is not None and not check.is_symmetric():
            raise ValueError(f"kind {args.kind} needs a symmetric diagram")
    poly = _compute_qrook(args, diagram, seq)
    human = str(poly)
    _emit(args, _envelope("qrook", _input_echo(args), poly.to_json_dict()), human)
    return EXIT_OK


def cmd_rankdist(args) -> int:
    diagram = parse_diagram(args.diagram)
    if args.kind == "general":
        dist = qrook.rank_distribution_general(diagram)
    elif args.kind == "alt":
        dist = qrook.rank_distribution_alternating(diagram)
    else:
        dist = qrook.rank_distribution_symmetric(diagram)
    result = dist.to_json_dict()
    lines = [f"rank distribution ({dist.kind}) of {diagram}:"]
    for r, poly in enumerate(dist.polynomials):
        lines.append(f"  W_{r} = {poly}")
    if args.q is not None:
        counts = dist.counts_at(args.q)
        result["q"] = args.q
        result["counts"] = [str(c) for c in counts]
        lines.append(f"at q={args.q}: {list(counts)}")
        if args.oracle:
            field = oracle.make_field(args.q)
            kind_name = {"general": "general", "alt": "alternating", "sym": "symmetric"}
            brute = oracle.brute_force_distribution(field, diagram, kind_name[args.kind])
            if brute.counts != counts:
                raise CrossCheckError(
                    f"formula counts {counts} differ from oracle counts {brute.counts}"
                )
            result["oracle"] = brute.to_json_dict()
            lines.append("oracle: agreement")
    elif args.oracle:
        raise ValueError("--oracle requires --q")
    _emit(args, _envelope("rankdist", _input_echo(args), result), "\n".join(lines))
    return EXIT_OK


def cmd_classes(args) -> int:
    if args.rows < 0 or args.cols < 0:
        raise ValueError("board bounds must be non-negative")
    classes = equivalence_classes(enumerate_diagrams(args.rows, args.cols))
    cache = qrook.QRookCache()
    payload = []
    lines = [f"{len(classes)} classes over the {args.rows}x{args.cols} board"]
    for seq in sorted(classes):
        members = classes[seq]
        polys = [
            qrook.qrook_recursive(seq, r, cache) for r in range(max(seq, default=0) + 1)
        ]
        payload.append(
            {
                "sequence": list(seq),
                "members": [d.to_json_dict() for d in members],
                "polynomials": [
                    {"r": r, **p.to_json_dict()} for r, p in enumerate(polys)
                ],
            }
        )
        member_text = " ".join(str(d) for d in members)
        lines.append(f"({','.join(map(str, seq))}): {member_text}")
        for r, p in enumerate(polys):
            lines.append(f"    R_{r} = {p}")
    _emit(args, _envelope("classes", _input_echo(args), {"classes": payload}), "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    fields = _parse_fields(args.fields)
    if args.check == "all":
        names = sorted(verify.ALL_CHECKS)
    elif args.check in verify.ALL_CHECKS:
        names = [args.check]
    else:
        raise ValueError(
            f"unknown check {args.check!r}; expected one of "
            f"{', '.join(sorted(verify.ALL_CHECKS))} or all"
        )
    reports = [verify.ALL_CHECKS[name](args.rows, args.cols, fields) for name in names]
    result = {"checks": [r.to_json_dict() for r in reports]}
    lines = []
    for r in reports:
        status = "passed" if r.passed else f"FAILED ({len(r.failures)} failures)"
        lines.append(f"{r.check}: {status} [{r.instances} instances over {r.domain}]")
        for f in r.failures[:10]:
            lines.append(f"    {f.input}: expected {f.expected}, got {f.actual}")
    _emit(args, _envelope("verify", _input_echo(args), result), "\n".join(lines))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# argument parsing


def _add_input_group(parser: argparse.ArgumentParser, required: bool = True):
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--diagram", help="comma-separated column lengths, e.g. 4,3,3,2,1")
    group.add_argument("--sequence", help="comma-separated diagonal counts, e.g. 1,2,3,4,3")


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand-level default from clobbering a --json
    # given before the subcommand.
    shared.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS,
        help="machine-readable output",
    )
    parser = argparse.ArgumentParser(
        prog="ferrers",
        parents=[shared],
        description="Exact q-rook polynomials and finite-field rank distributions "
        "of Ferrers diagrams, driven by their diagonals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="geometry of one diagram", parents=[shared])
    _add_input_group(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("qrook", help="a q-rook polynomial", parents=[shared])
    _add_input_group(p)
    p.add_argument("--r", type=int, help="placement size (kind general and alt)")
    p.add_argument("--t", type=int, help="number of transpose pairs (kind sym)")
    p.add_argument("--s", type=int, help="number of diagonal rooks (kind sym)")
    p.add_argument("--kind", choices=("general", "alt", "sym"), default="general")
    p.add_argument(
        "--method",
        choices=("enum", "rec", "both"),
        default="both",
        help="enumerate placements, recurse on diagonals, or do both and compare",
    )
    p.set_defaults(func=cmd_qrook)

    p = sub.add_parser("rankdist", help="matrix counts per rank", parents=[shared])
    p.add_argument("--diagram", required=True)
    p.add_argument("--kind", choices=("general", "alt", "sym"), default="general")
    p.add_argument("--q", type=int, help="evaluate the counts at this field order")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check against exhaustive enumeration (needs --q)",
    )
    p.set_defaults(func=cmd_rankdist)

    p = sub.add_parser("classes", help="diagonal-equivalence classes of a board", parents=[shared])
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("verify", help="run the identity checks", parents=[shared])
    p.add_argument("--check", default="all", help="check name or 'all'")
    p.add_argument("--rows", type=int, default=4)
    p.add_argument("--cols", type=int, default=4)
    p.add_argument("--fields", default="2,3", help="comma-separated field orders")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad arguments, which matches the contract
        return int(exc.code or 0)
    try:
        return args.func(args)
    except oracle.BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CrossCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
