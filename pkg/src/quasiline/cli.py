"""Command-line front end.

Exit codes: 0 property holds / command succeeded, 1 property fails (a
witness is printed), 2 usage or input error, 3 a verifier rejected the
program's own output.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from typing import BinaryIO, Sequence

from quasiline.crossval import sweep
from quasiline.errors import (
    CompleteGraphError,
    PreconditionError,
    QuasilineError,
)
from quasiline.forbidden import build_pattern, corollary2_check, find_induced, parse_pattern
from quasiline.formats import encode_edge_list, encode_graph6, parse_edge_list, parse_graph6, to_dot, to_json
from quasiline.graph import Graph
from quasiline.oracle import MAX_ANTIHOLE_N, enumerate_graphs, line_graph, random_graph
from quasiline.recognition import (
    QuasiLineCertificate,
    TwoCliqueCover,
    lemma1_partition,
    quasi_line,
    two_clique_cover,
)
from quasiline.verdict import (
    Verdict,
    VerdictFormatError,
    pattern_verdict,
    quasi_line_verdict,
    two_cliques_verdict,
    verdict_from_dict,
    verify_verdict,
)

EXIT_HOLDS, EXIT_FAILS, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")

    def exit(self, status: int = 0, message: str | None = None) -> None:  # type: ignore[override]
        # only reached for --help; the help text was already written to our stdout
        raise _HelpExit(status)


class _HelpExit(Exception):
    def __init__(self, status: int) -> None:
        self.status = status


def _add_input(p: argparse.ArgumentParser, default: str | None = "-") -> None:
    p.add_argument("--in", dest="infile", default=default, metavar="FILE", help="input file, '-' for stdin")
    p.add_argument("--format", choices=("g6", "edges"), default="g6", help="input format (default g6)")
    p.add_argument("--n", type=int, default=None, help="vertex count for edge-list input")


def _build_parser() -> _Parser:
    parser = _Parser(prog="quasiline", description="Certified two-clique and quasi-line recognition.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    check = sub.add_parser("check", help="decide a property and print a certificate or witness")
    props = check.add_subparsers(dest="property", required=True, parser_class=_Parser)
    for name in ("two-cliques", "quasi-line"):
        p = props.add_parser(name)
        _add_input(p)
        p.add_argument("--json", action="store_true", help="emit a JSON verdict")
        if name == "quasi-line":
            p.add_argument("--parallel", action="store_true", help="check neighbourhoods in worker processes")

    find = sub.add_parser("find", help="induced subgraph search")
    targets = find.add_subparsers(dest="target", required=True, parser_class=_Parser)
    fp = targets.add_parser("pattern")
    fp.add_argument("--expr", required=True)
    _add_input(fp)
    fp.add_argument("--json", action="store_true")
    fc = targets.add_parser("corollary2", help="search claw, w6 and cor2 in order")
    _add_input(fc)
    fc.add_argument("--json", action="store_true")

    lem = sub.add_parser("lemma1", help="partition a {3K1, C5}-free graph around a non-edge")
    lem.add_argument("--v", type=int, required=True)
    lem.add_argument("--w", type=int, required=True)
    _add_input(lem)

    ver = sub.add_parser("verify", help="re-check a stored JSON verdict")
    ver.add_argument("--certificate", required=True, metavar="FILE")
    _add_input(ver, default=None)

    cv = sub.add_parser("cross-validate", help="compare recognition against brute-force oracles")
    cv.add_argument("--max-n", type=int, required=True, help="exhaustive sweep over n = 0..N (N <= 7)")
    cv.add_argument("--random", type=int, default=0, metavar="COUNT")
    cv.add_argument("--size", type=int, default=10)
    cv.add_argument("--p", type=float, default=0.5)
    cv.add_argument("--seed", type=int, default=0)

    gen = sub.add_parser("gen", help="emit a graph")
    kinds = gen.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    gr = kinds.add_parser("random")
    gr.add_argument("--n", type=int, required=True)
    gr.add_argument("--p", type=float, required=True)
    gr.add_argument("--seed", type=int, required=True)
    gl = kinds.add_parser("line-graph")
    _add_input(gl)
    gp = kinds.add_parser("pattern")
    gp.add_argument("--expr", required=True)
    for p in (gr, gl, gp):
        p.add_argument("--out-format", choices=("g6", "edges", "dot", "json"), default="g6")
    return parser


def _read_graph(args: argparse.Namespace, stdin: BinaryIO) -> Graph:
    src = args.infile
    if src == "-":
        data = stdin.read()
    else:
        try:
            with open(src, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {src}: {exc.strerror}") from None
    if args.format == "edges":
        try:
            return parse_edge_list(data.decode("utf-8"), args.n)
        except UnicodeDecodeError:
            raise UsageError("edge list is not valid UTF-8") from None
    lines = [ln for ln in data.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise UsageError(f"expected exactly one graph6 line, got {len(lines)}")
    return parse_graph6(lines[0])


def _emit(out: io.StringIO, verdict: Verdict, as_json: bool, human: str, color: bool) -> None:
    if as_json:
        out.write(json.dumps(verdict.to_dict()) + "\n")
        return
    word = "yes" if verdict.holds else "no"
    if color:
        word = f"\x1b[{'32' if verdict.holds else '31'}m{word}\x1b[0m"
    out.write(f"{verdict.property}: {word}\n{human}")


def _fmt(vs: Sequence[int]) -> str:
    return " ".join(map(str, vs)) if vs else "-"


def _finish(verdict: Verdict, g: Graph, err: io.StringIO) -> int:
    if not verify_verdict(verdict, g):
        err.write(f"internal error: {verdict.property} certificate failed verification\n")
        return EXIT_INTERNAL
    return EXIT_HOLDS if verdict.holds else EXIT_FAILS


def _cmd_check(args, stdin, out, err, color) -> int:
    g = _read_graph(args, stdin)
    if args.property == "two-cliques":
        res = two_clique_cover(g)
        verdict = two_cliques_verdict(g, res)
        if isinstance(res, TwoCliqueCover):
            human = f"side1: {_fmt(res.side1)}\nside2: {_fmt(res.side2)}\n"
        else:
            human = f"odd antihole (cycle order of the complement): {_fmt(res.cycle_order)}\n"
    else:
        res = quasi_line(g, parallel=args.parallel)
        verdict = quasi_line_verdict(g, res)
        if isinstance(res, QuasiLineCertificate):
            human = "".join(
                f"N({v}) = {{{_fmt(c.side1)}}} + {{{_fmt(c.side2)}}}\n"
                for v, c in sorted(res.per_vertex.items())
            )
        else:
            human = f"apex {res.apex}; odd antihole in its neighbourhood: {_fmt(res.witness.cycle_order)}\n"
    _emit(out, verdict, args.json, human, color)
    return _finish(verdict, g, err)


def _cmd_find(args, stdin, out, err, color) -> int:
    g = _read_graph(args, stdin)
    if args.target == "pattern":
        pattern = parse_pattern(args.expr)
        emb = find_induced(g, build_pattern(pattern))
        verdict = pattern_verdict(g, str(pattern), emb)
        human = f"pattern {pattern}: " + (
            "embedding " + " ".join(f"{i}->{h}" for i, h in enumerate(emb)) + "\n" if emb else "absent\n"
        )
        _emit(out, verdict, args.json, human, color)
        return _finish(verdict, g, err)
    report = corollary2_check(g)
    if args.json:
        payload = {
            "found": [{"pattern": str(p), "embedding": list(e)} for p, e in report.found],
            "implied_quasi_line": report.implied_quasi_line,
            "input_echo": encode_graph6(g).decode(),
        }
        out.write(json.dumps(payload) + "\n")
    else:
        for p, e in report.found:
            out.write(f"{p}: {_fmt(e)}\n")
        out.write(f"implied quasi-line: {'yes' if report.implied_quasi_line else 'no'}\n")
    return EXIT_HOLDS if report.implied_quasi_line else EXIT_FAILS


def _cmd_lemma1(args, stdin, out, err, color) -> int:
    g = _read_graph(args, stdin)
    try:
        part = lemma1_partition(g, args.v, args.w)
    except CompleteGraphError as exc:
        out.write(json.dumps({"error": str(exc), "witness": None}) + "\n")
        return EXIT_FAILS
    except PreconditionError as exc:
        if exc.witness is None:
            raise UsageError(str(exc)) from None
        out.write(json.dumps({"error": str(exc), "witness": list(exc.witness)}) + "\n")
        return EXIT_FAILS
    payload = {"v": part.v, "w": part.w}
    for name in ("B", "C", "A1", "A2", "A3"):
        payload[name] = sorted(getattr(part, name))
    out.write(json.dumps(payload) + "\n")
    return EXIT_HOLDS


def _cmd_verify(args, stdin, out, err, color) -> int:
    try:
        with open(args.certificate, encoding="utf-8") as fh:
            verdict = verdict_from_dict(json.load(fh))
    except OSError as exc:
        raise UsageError(f"cannot read {args.certificate}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.certificate}: invalid JSON ({exc.msg})") from None
    echo = parse_graph6(verdict.input_echo.encode())
    if args.infile is not None:
        g = _read_graph(args, stdin)
        if g != echo:
            out.write("invalid: input graph differs from input_echo\n")
            return EXIT_FAILS
    ok = verify_verdict(verdict, echo)
    out.write(("valid" if ok else "invalid") + f": {verdict.property} certificate\n")
    return EXIT_HOLDS if ok else EXIT_FAILS


def _cmd_cross_validate(args, stdin, out, err, color) -> int:
    if not 0 <= args.max_n <= 7:
        raise UsageError("--max-n must lie in 0..7")
    if args.random and not 0 <= args.size <= MAX_ANTIHOLE_N:
        raise UsageError(f"--size must lie in 0..{MAX_ANTIHOLE_N} for the brute-force oracles")
    if not 0.0 <= args.p <= 1.0:
        raise UsageError("--p must lie in [0, 1]")

    def stream():
        for n in range(args.max_n + 1):
            yield from enumerate_graphs(n, allow_large=True)
        for i in range(args.random):
            yield random_graph(args.size, args.p, args.seed + i)

    report = sweep(stream())
    out.write(f"graphs checked: {report.graphs}\n")
    for check, count in report.mismatches.items():
        tail = f" (first: {report.first_offender[check]})" if count else ""
        out.write(f"{check}: {count} mismatches{tail}\n")
    if report.mismatches["soundness"]:
        return EXIT_INTERNAL
    return EXIT_HOLDS if report.clean else EXIT_FAILS


def _cmd_gen(args, stdin, out, err, color) -> int:
    if args.kind == "random":
        if args.n < 0:
            raise UsageError("--n must be non-negative")
        g = random_graph(args.n, args.p, args.seed)
    elif args.kind == "line-graph":
        g = line_graph(_read_graph(args, stdin))
    else:
        g = build_pattern(parse_pattern(args.expr))
    fmt = args.out_format
    if fmt == "g6":
        out.write(encode_graph6(g).decode() + "\n")
    elif fmt == "edges":
        out.write(encode_edge_list(g))
    elif fmt == "dot":
        out.write(to_dot(g))
    else:
        out.write(to_json(g) + "\n")
    return EXIT_HOLDS


_COMMANDS = {
    "check": _cmd_check,
    "find": _cmd_find,
    "lemma1": _cmd_lemma1,
    "verify": _cmd_verify,
    "cross-validate": _cmd_cross_validate,
    "gen": _cmd_gen,
}


def run_cli(argv: Sequence[str], stdin: BinaryIO | bytes = b"", color: bool = False) -> tuple[int, str, str]:
    """Run one command; returns (exit code, stdout text, stderr text)."""
    if isinstance(stdin, (bytes, bytearray)):
        stdin = io.BytesIO(stdin)
    out, err = io.StringIO(), io.StringIO()
    parser = _build_parser()
    try:
        old_out, old_err = sys.stdout, sys.stderr
        sys.stdout, sys.stderr = out, err  # argparse prints --help/usage here
        try:
            args = parser.parse_args(list(argv))
        finally:
            sys.stdout, sys.stderr = old_out, old_err
        code = _COMMANDS[args.command](args, stdin, out, err, color)
    except _HelpExit as exc:
        code = exc.status
    except (UsageError, QuasilineError, VerdictFormatError, ValueError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        err.write(f"error: {msg}\n")
        code = EXIT_USAGE
    return code, out.getvalue(), err.getvalue()


def main(argv: Sequence[str] | None = None) -> int:
    color = sys.stdout.isatty() and "NO_COLOR" not in os.environ
    code, out, err = run_cli(sys.argv[1:] if argv is None else argv, sys.stdin.buffer, color)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
