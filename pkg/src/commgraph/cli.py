"""Command-line entry point: ``commgraph {witness,path,oracle,verify}``.

Exit status: 0 success, 1 unreadable input (or a path that fails
verification), 2 precondition violation, 3 a well-formed negative answer
(no witness exists / no path was constructed).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import oracle, serialize
from .errors import CommGraphError
from .factor import DEFAULT_DEGREE_CAP
from .pathfinder import PathFailure, find_path, path_violations
from .witness import WitnessFailure, find_witness

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_PRECONDITION = 2
EXIT_NEGATIVE = 3


class _ParseFailure(Exception):
    pass


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _ParseFailure(f"{path}: {exc}") from exc


def _load_matrix(path: str):
    try:
        return serialize.doc_to_matrix(_read_json(path))
    except serialize.DocumentError as exc:
        raise _ParseFailure(f"{path}: {exc}") from exc


def _emit(doc) -> None:
    sys.stdout.write(serialize.dumps(doc))


def cmd_witness(args) -> int:
    a = _load_matrix(args.matrix)
    w = find_witness(a, degree_cap=args.degree_cap)
    _emit(serialize.witness_to_doc(w))
    return EXIT_NEGATIVE if isinstance(w, WitnessFailure) else EXIT_OK


def cmd_path(args) -> int:
    a = _load_matrix(args.a_file)
    b = _load_matrix(args.b_file)
    result = find_path(a, b)
    _emit(serialize.path_to_doc(result))
    return EXIT_NEGATIVE if isinstance(result, PathFailure) else EXIT_OK


def cmd_oracle(args) -> int:
    if args.pair:
        a, b = (_load_matrix(f) for f in args.pair)
        d = oracle.bfs_distance(a, b, args.n, args.p, budget=args.budget)
        _emit(serialize.distance_to_doc(d))
        return EXIT_OK
    report = oracle.full_report(args.n, args.p, budget=args.budget, use_classes=args.classes)
    _emit(serialize.report_to_doc(report))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        path = serialize.doc_to_path(_read_json(args.path_file))
    except serialize.DocumentError as exc:
        raise _ParseFailure(f"{args.path_file}: {exc}") from exc
    problems = path_violations(path)
    _emit({"valid": not problems, "violations": problems})
    return EXIT_OK if not problems else EXIT_PARSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="commgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witness", help="commuting idempotent or square-zero nilpotent for a matrix")
    p.add_argument("--matrix", required=True, help="MatrixDocument file, or - for stdin")
    p.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP,
                   help="largest degree factored over Q (default %(default)s)")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("path", help="commuting path of length <= 4 between two matrices")
    p.add_argument("a_file")
    p.add_argument("b_file")
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("oracle", help="exhaustive BFS on the commuting graph of M_n(F_p)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--pair", nargs=2, metavar=("A_FILE", "B_FILE"))
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET,
                   help="maximum p^(n^2) to enumerate (default %(default)s)")
    p.add_argument("--classes", action="store_true",
                   help="one BFS per similarity class instead of per vertex")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="recheck a path document")
    p.add_argument("path_file")
    p.set_defaults(func=cmd_verify)
    return parser


def _error(kind: str, message: str) -> None:
    sys.stderr.write(serialize.dumps({"error": kind, "message": message}))


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _ParseFailure as exc:
        _error("parse_error", str(exc))
        return EXIT_PARSE
    except (CommGraphError, ValueError) as exc:
        _error(type(exc).__name__, str(exc))
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
