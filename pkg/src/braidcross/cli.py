"""Command-line interface: ``braidcross <subcommand>``.

Matrices are read as JSON (``{"n": N, "rows": [...]}`` or a bare array of
arrays) from ``--input`` or stdin.  Single results are printed as one JSON
document, streams as JSON lines.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .division import (
    DEFAULT_BUDGET,
    NotInSRPlus,
    Realizable,
    SearchConfig,
    SearchMode,
    classify,
)
from .errors import BraidCrossError, Indeterminate, MalformedInput, PreconditionError, SRDecompositionError
from .explorer import probe_all, probe_conjecture, verify_t04
from .matrices import (
    matrix_from_json,
    mirror,
    permutation_of_matrix,
    sr_decompose,
    tableau_parse,
    tableau_render,
)
from .oracle import enumerate_positive_words, enumerate_sr_plus, enumerate_symmetric_t0
from .words import BraidWord, crossing_matrix

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_MALFORMED = 2
EXIT_NOT_SR_PLUS = 3
EXIT_BLOCKED = 4
EXIT_INDETERMINATE = 5

BUDGET_ENV = "BRAIDCROSS_BUDGET"


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _read_input(args) -> str:
    if getattr(args, "input", None):
        with open(args.input) as fh:
            return fh.read()
    return sys.stdin.read()


def _read_matrix(args):
    return matrix_from_json(_read_input(args))


def _budget(args) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise MalformedInput(f"{BUDGET_ENV}={env!r} is not an integer") from exc
    return DEFAULT_BUDGET


def _verdict_exit(result) -> int:
    if isinstance(result, Realizable):
        return EXIT_OK
    if isinstance(result, NotInSRPlus):
        return EXIT_NOT_SR_PLUS
    return EXIT_BLOCKED


def cmd_from_word(args) -> int:
    w = BraidWord.parse(_read_input(args), args.strands)
    a = crossing_matrix(w)
    perm = permutation_of_matrix(a)
    tableau = tableau_render(a)
    if args.json:
        out = a.to_json()
        out.update(permutation=str(perm), tableau=tableau)
        print(_dumps(out))
    else:
        print(a)
        print(f"permutation: {perm}")
        print("tableau:")
        print(tableau)
    return EXIT_OK


def cmd_decompose(args) -> int:
    a = _read_matrix(args)
    sr_decompose(a)
    print(tableau_render(a))
    return EXIT_OK


def _search_config(args, mode: SearchMode) -> SearchConfig:
    return SearchConfig(
        mode=mode,
        max_witnesses=args.max_witnesses,
        memoize=not args.no_memo,
        parallel=args.parallel and not args.sequential,
        budget=_budget(args),
    )


def cmd_classify(args) -> int:
    mode = SearchMode.ALL if args.all else SearchMode.COUNT if args.count else SearchMode.FIRST
    a = _read_matrix(args)
    result = classify(a, _search_config(args, mode))
    print(_dumps(result.to_json()))
    return _verdict_exit(result)


def cmd_realize(args) -> int:
    a = _read_matrix(args)
    result = classify(a, _search_config(args, SearchMode.FIRST))
    if isinstance(result, Realizable):
        print(result.witnesses[0])
    else:
        print(_dumps(result.to_json()))
    return _verdict_exit(result)


def cmd_tableau(args) -> int:
    if args.parse:
        print(_dumps(tableau_parse(_read_input(args), args.n).to_json()))
    else:
        print(tableau_render(_read_matrix(args), strict=not args.lenient))
    return EXIT_OK


def cmd_mirror(args) -> int:
    print(_dumps(mirror(_read_matrix(args)).to_json()))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.kind == "words":
        for w in enumerate_positive_words(args.n, args.bound):
            print(_dumps({"n": w.n, "word": str(w)}))
    elif args.kind == "srplus":
        for a in enumerate_sr_plus(args.n, args.bound, args.max_sum):
            print(_dumps(a.to_json()))
    else:
        for a in enumerate_symmetric_t0(args.n, args.bound):
            print(_dumps(a.to_json()))
    return EXIT_OK


def cmd_verify_t04(args) -> int:
    report = verify_t04(args.max_entry, SearchConfig(budget=_budget(args)))
    print(_dumps(report.to_json()))
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_probe(args) -> int:
    a = _read_matrix(args)
    kwargs = {"max_witnesses": args.max_witnesses, "budget": _budget(args)}
    if args.pos:
        try:
            i, j = (int(t) for t in args.pos.split(","))
        except ValueError as exc:
            raise MalformedInput(f"--pos expects i,j, got {args.pos!r}") from exc
        reports = [probe_conjecture(a, i, j, **kwargs)]
    else:
        reports = probe_all(a, **kwargs)
    for rep in reports:
        print(rep.to_json_line())
    return EXIT_OK


def _add_input(p):
    p.add_argument("--input", "-i", help="read from this file instead of stdin")


def _add_search(p):
    p.add_argument("--max-witnesses", type=int, default=None, metavar="M")
    p.add_argument("--budget", type=int, default=None, metavar="B",
                   help=f"memo-entry budget (default {DEFAULT_BUDGET}, or ${BUDGET_ENV})")
    p.add_argument("--sequential", action="store_true", help="force the sequential reference search")
    p.add_argument("--parallel", action="store_true", help="split top-level branches across processes")
    p.add_argument("--no-memo", action="store_true", help="disable memoization")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="braidcross", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("from-word", help="crossing matrix of a braid word read from stdin")
    p.add_argument("--strands", "-n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    _add_input(p)
    p.set_defaults(func=cmd_from_word)

    p = sub.add_parser("decompose", help="SR tableau of a matrix")
    _add_input(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("classify", help="decide positive realizability")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true", help="enumerate witnesses")
    g.add_argument("--count", action="store_true", help="count witnesses")
    g.add_argument("--first", action="store_true", help="stop at the first witness (default)")
    _add_search(p)
    _add_input(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("realize", help="print one positive word realizing the matrix")
    _add_search(p)
    _add_input(p)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("tableau", help="render a matrix as a tableau, or parse one")
    p.add_argument("--parse", action="store_true")
    p.add_argument("--lenient", action="store_true", help="render cells even without an SR decomposition")
    p.add_argument("--n", type=int, default=None, help="dimension when parsing (needed for 1x1)")
    _add_input(p)
    p.set_defaults(func=cmd_tableau)

    p = sub.add_parser("mirror", help="mirror a matrix about its antidiagonal")
    _add_input(p)
    p.set_defaults(func=cmd_mirror)

    p = sub.add_parser("enumerate", help="stream words or matrices as JSON lines")
    p.add_argument("--kind", choices=["words", "srplus", "symt0"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, required=True,
                   help="word length for words, maximum entry for matrices")
    p.add_argument("--max-sum", type=int, default=None, help="entry-sum bound for srplus")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify-t04", help="classify all symmetric T0 4x4 matrices")
    p.add_argument("--max-entry", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_verify_t04)

    p = sub.add_parser("probe-conjecture", help="probe zero fully supported positions")
    p.add_argument("--pos", default=None, metavar="i,j")
    p.add_argument("--max-witnesses", type=int, default=10_000)
    p.add_argument("--budget", type=int, default=None)
    _add_input(p)
    p.set_defaults(func=cmd_probe)
    return ap


def _error(code: str, detail) -> None:
    print(_dumps({"error": code, "detail": detail}), file=sys.stderr)


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors
        return exc.code or 0
    try:
        return args.func(args)
    except Indeterminate as exc:
        _error(exc.code, str(exc))
        return EXIT_INDETERMINATE
    except SRDecompositionError as exc:
        _error(exc.code, {"reason": exc.reason, "where": list(exc.where)})
        return EXIT_NOT_SR_PLUS
    except PreconditionError as exc:
        _error(exc.code, exc.problems)
        return EXIT_MALFORMED
    except (BraidCrossError, OSError) as exc:
        _error(getattr(exc, "code", "malformed_input"), str(exc))
        return EXIT_MALFORMED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
