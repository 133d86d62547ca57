"""Command-line interface.

Exit codes: 0 success, 1 computation or verification failure, 2 usage or
input error. Machine-readable results go to stdout as JSON (or edge-list
text for digraph-producing commands); diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import coronals, corona
from .algebra import Polynomial, charpoly, coronal, format_poly, numeric_roots
from .digraph import DigraphError, make_family, matrix_of
from .io import ParseError, parse_digraph, serialize_digraph, to_dot
from .verify import SUITES, SweepConfig, all_match, run_suite, summarize

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str):
    try:
        return parse_digraph(_read_text(path))
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, ensure_ascii=False) + "\n")


def _show(value) -> None:
    """Exact JSON on stdout; a readable form on stderr for interactive use."""
    _emit_json(value.to_json())
    if sys.stderr.isatty():
        text = format_poly(value) if isinstance(value, Polynomial) else str(value)
        print(text, file=sys.stderr)


# -- subcommands -------------------------------------------------------


def cmd_family(args) -> int:
    d = make_family(args.kind, args.n)
    _write(serialize_digraph(d), args.output)
    return EXIT_OK


def cmd_corona(args) -> int:
    if args.d1 == "-" and args.d2 == "-":
        raise UsageError("only one of --d1/--d2 may read standard input")
    d1, d2 = _load(args.d1), _load(args.d2)
    result = corona.build_corona(d1, d2, corona.CoronaKind(args.op, args.dir))
    comments = ()
    if args.op == "arc" and result == d1:
        comments = ("arc corona of a factor without arcs: the result equals D1",)
    _write(serialize_digraph(result, comments), args.out)
    return EXIT_OK


def cmd_charpoly(args) -> int:
    has_corona = args.op is not None
    if args.file is not None and has_corona:
        raise UsageError("give either a digraph file or --op/--d1/--d2, not both")
    if args.file is None and not has_corona:
        raise UsageError("a digraph file or --op/--d1/--d2 is required")
    if has_corona and (args.d1 is None or args.d2 is None or args.dir is None):
        raise UsageError("--op needs --dir, --d1 and --d2")
    if not has_corona:
        if args.method != "direct":
            raise UsageError(f"--method {args.method} applies to corona instances (--op/--d1/--d2)")
        _show(charpoly(matrix_of(_load(args.file), args.matrix)))
        return EXIT_OK
    if args.d1 == "-" and args.d2 == "-":
        raise UsageError("only one of --d1/--d2 may read standard input")
    d1, d2 = _load(args.d1), _load(args.d2)
    kind = corona.CoronaKind(args.op, args.dir)
    if args.method == "direct":
        result = charpoly(matrix_of(corona.build_corona(d1, d2, kind), args.matrix))
    elif args.method == "theorem":
        if args.op == "vertex":
            result = corona.vertex_corona_charpoly(d1, d2, args.matrix, kind.direction)
        else:
            result = corona.arc_corona_charpoly(d1, d2, kind.direction, args.matrix)
    else:
        if args.op != "arc":
            raise UsageError("--method closed is available for arc coronas only")
        outcome = corona.arc_corona_charpoly_closed(d1, d2, kind.direction, args.matrix)
        if not outcome.ok:
            print(f"{outcome.status}: {outcome.reason}", file=sys.stderr)
            return EXIT_FAIL
        result = outcome.polynomial
    _show(result)
    return EXIT_OK


def _parse_partition(text: str) -> list[list[int]]:
    try:
        return [[int(v) for v in part.split(",")] for part in text.split("|")]
    except ValueError:
        raise UsageError(f"malformed partition {text!r}; expected e.g. '0|1,2'") from None


def cmd_coronal(args) -> int:
    if args.method == "direct":
        if args.family or args.partition:
            raise UsageError("--family/--partition need --method formula")
        if args.file is None:
            raise UsageError("a digraph file is required")
        _show(coronal(matrix_of(_load(args.file), args.matrix)))
        return EXIT_OK
    if bool(args.family) == bool(args.partition):
        raise UsageError("--method formula needs exactly one of --family or --partition")
    if args.family:
        if args.file is not None:
            raise UsageError("--family takes numeric parameters, not a digraph file")
        try:
            spec = coronals.parse_family_spec(args.family)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        _show(spec.coronal(args.matrix))
        return EXIT_OK
    if args.file is None:
        raise UsageError("--partition needs a digraph file")
    blocks = _parse_partition(args.partition)
    m = matrix_of(_load(args.file), args.matrix)
    try:
        _show(coronals.coronal_equitable(m, blocks))
    except coronals.PartitionError as exc:
        raise UsageError(f"partition rejected: {exc}") from None
    return EXIT_OK


def cmd_spectrum(args) -> int:
    if args.d1 == "-" and args.d2 == "-":
        raise UsageError("only one of --d1/--d2 may read standard input")
    d1, d2 = _load(args.d1), _load(args.d2)
    desc = corona.vertex_corona_spectrum_outregular(d1, d2, args.matrix)
    out = {
        "inherited": [{"factor": p.to_json(), "multiplicity": k} for p, k in desc.inherited],
        "paired": [{"quadratic": p.to_json(), "multiplicity": k} for p, k in desc.paired],
        "grouped": [{"eigenvalue_factor": g.to_json(), "product": h.to_json()} for g, h in desc.grouped],
    }
    if args.roots:
        out["roots"] = [
            {"re": z.real, "im": z.imag, "multiplicity": k} for z, k in numeric_roots(desc.expand(), tol=args.tol)
        ]
    _emit_json(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = ("all",) if args.suite == "all" else (args.suite,)
    try:
        config = SweepConfig(seed=args.seed, trials=args.trials, max_n=args.max_n, suites=suites)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    reports = run_suite(config)
    if args.json:
        _emit_json([r.to_json() for r in reports])
    else:
        for name, counts in summarize(reports).items():
            parts = ", ".join(f"{v}={c}" for v, c in counts.items() if c)
            print(f"{name}: {parts}")
        for r in reports:
            if r.verdict != "match":
                print(f"  {r.suite} trial {r.trial}: {r.verdict} {r.detail}".rstrip(), file=sys.stderr)
    return EXIT_OK if all_match(reports) else EXIT_FAIL


def cmd_export_dot(args) -> int:
    _write(to_dot(_load(args.file)), args.output)
    return EXIT_OK


# -- parser ------------------------------------------------------------


def _add_pair(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--d1", required=required, metavar="FILE", help="first factor ('-' for stdin)")
    p.add_argument("--d2", required=required, metavar="FILE", help="second factor ('-' for stdin)")


def _u64(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="corona-spectra", description="Exact spectra of digraph corona products.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="write a standard digraph family member")
    p.add_argument("kind", choices=["path", "cycle", "empty", "complete"])
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("corona", help="build a vertex or arc corona")
    p.add_argument("--op", choices=["vertex", "arc"], required=True)
    p.add_argument("--dir", choices=["fwd", "bwd", "sym"], required=True)
    _add_pair(p, required=True)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_corona)

    p = sub.add_parser("charpoly", help="characteristic polynomial as JSON")
    p.add_argument("file", nargs="?", help="digraph file ('-' for stdin)")
    p.add_argument("--matrix", choices=["A", "L", "Q"], default="A")
    p.add_argument("--method", choices=["direct", "theorem", "closed"], default="direct")
    p.add_argument("--op", choices=["vertex", "arc"])
    p.add_argument("--dir", choices=["fwd", "bwd", "sym"])
    _add_pair(p, required=False)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("coronal", help="coronal as rational-function JSON")
    p.add_argument("file", nargs="?", help="digraph file ('-' for stdin)")
    p.add_argument("--matrix", choices=["A", "L", "Q"], default="A")
    p.add_argument("--method", choices=["direct", "formula"], default="direct")
    p.add_argument("--family", metavar="SPEC", help="e.g. path:4, rowsum:5,2, join:3,1;2,0, semireg:1,2,2,1, fullside:2,2,3")
    p.add_argument("--partition", metavar="BLOCKS", help="equitable partition such as '0|1,2'")
    p.set_defaults(func=cmd_coronal)

    p = sub.add_parser("spectrum", help="factored spectrum of a symmetric vertex corona with out-regular D2")
    p.add_argument("--matrix", choices=["A", "L", "Q"], default="A")
    _add_pair(p, required=True)
    p.add_argument("--roots", action="store_true", help="also list numeric roots")
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="run seeded oracle cross-checks")
    p.add_argument("--suite", default="all", choices=["all", *SUITES])
    p.add_argument("--seed", type=_u64, default=1)
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", help="write a digraph in DOT format")
    p.add_argument("file")
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except corona.HypothesisError as exc:
        print(f"hypothesis not met: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (DigraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
