"""Command-line front end.

Subcommands: gen (emit a family graph), rank (importance ranking of an
edge-list file), phi (graph-level agglomeration and average path length),
contract (contract one node), verify (engine vs closed forms over grids).

Exit codes: 0 success, 2 usage or parse error, 3 connectivity error,
4 verification mismatch.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .agglomeration import average_path_length, imc_all, phi
from .contraction import contract
from .errors import (
    ConnectivityError,
    DegenerateOrderError,
    EdgeListError,
    FamilyParameterError,
    FormulaDomainError,
)
from .families import (
    CometSpec,
    DoubleCometSpec,
    LollipopSpec,
    PathSpec,
    generate,
    scan_class_comments,
    write_labeled,
)
from .graph import bfs_distances, parse_edge_list, to_edge_list
from .reports import FORMATS, render_phi, render_rank, render_verify
from .verify import verify_family

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DISCONNECTED = 3
EXIT_MISMATCH = 4

_RANGE = re.compile(r"(\d+)\.\.(\d+)$")


def _range_arg(text: str) -> tuple[int, int]:
    m = _RANGE.match(text)
    if m:
        return int(m.group(1)), int(m.group(2))
    if text.isdigit():
        value = int(text)
        return value, value
    raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}")


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _read_graph(args: argparse.Namespace):
    text = Path(args.input).read_text()
    return text, parse_edge_list(text)


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "path":
        spec = PathSpec(n=args.n)
    elif args.family == "comet":
        spec = CometSpec(s=args.s, t=args.t)
    elif args.family == "double-comet":
        spec = DoubleCometSpec(n=args.n, a=args.a, b=args.b)
    else:
        spec = LollipopSpec(n=args.n, d=args.d)
    _emit(args, write_labeled(generate(spec)))
    return EXIT_OK


def cmd_rank(args: argparse.Namespace) -> int:
    text, g = _read_graph(args)
    classes = scan_class_comments(text)
    for v in classes:
        if v >= g.n:
            raise EdgeListError(f"class comment for unknown node {v}")
    report = imc_all(g, jobs=args.jobs)
    _emit(args, render_rank(report, classes or None, args.format))
    return EXIT_OK


def cmd_phi(args: argparse.Namespace) -> int:
    _, g = _read_graph(args)
    value = phi(g)
    length = average_path_length(g) if g.n >= 2 else None
    _emit(args, render_phi(value, length, args.format))
    return EXIT_OK


def cmd_contract(args: argparse.Namespace) -> int:
    _, g = _read_graph(args)
    if not 0 <= args.node < g.n:
        print(f"error: node {args.node} out of range for graph of order {g.n}",
              file=sys.stderr)
        return EXIT_USAGE
    if g.n >= 2:
        bfs_distances(g, 0)  # connectivity precondition, names an unreachable node
    result = contract(g, args.node)
    lines = [f"# merged {result.merged_into}"]
    lines += [f"# map {old} {new}" for old, new in sorted(result.old_to_new.items())]
    _emit(args, "".join(line + "\n" for line in lines) + to_edge_list(result.graph))
    return EXIT_OK


_VERIFY_PARAMS = {
    "path": ("n",),
    "comet": ("s", "t"),
    "double-comet": ("a", "b", "k"),
    "lollipop": ("d", "nd"),
}


def cmd_verify(args: argparse.Namespace) -> int:
    ranges = {}
    for name in _VERIFY_PARAMS[args.family]:
        value = getattr(args, name)
        if value is not None:
            ranges[name] = value
    report = verify_family(args.family.replace("-", "_"), ranges, jobs=args.jobs)
    _emit(args, render_verify(report, args.format))
    return EXIT_MISMATCH if report.mismatches else EXIT_OK


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", help="write to this file instead of standard output")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default="table")


def _add_jobs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--jobs", type=int, default=1,
                   help="worker threads; output is identical for any value")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agglorank",
        description="Rank influential nodes by node contraction and network agglomeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a family graph as a labeled edge list")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    gp = gen_sub.add_parser("path")
    gp.add_argument("--n", type=int, required=True)
    gc = gen_sub.add_parser("comet")
    gc.add_argument("--s", type=int, required=True)
    gc.add_argument("--t", type=int, required=True)
    gd = gen_sub.add_parser("double-comet")
    gd.add_argument("--n", type=int, required=True)
    gd.add_argument("--a", type=int, required=True)
    gd.add_argument("--b", type=int, required=True)
    gl = gen_sub.add_parser("lollipop")
    gl.add_argument("--n", type=int, required=True)
    gl.add_argument("--d", type=int, required=True)
    for p in (gp, gc, gd, gl):
        p.set_defaults(func=cmd_gen)
        _add_output(p)

    rank = sub.add_parser("rank", help="rank every node of an edge-list file")
    rank.add_argument("input")
    _add_format(rank)
    _add_jobs(rank)
    _add_output(rank)
    rank.set_defaults(func=cmd_rank)

    phi_p = sub.add_parser("phi", help="agglomeration and average path length")
    phi_p.add_argument("input")
    _add_format(phi_p)
    _add_output(phi_p)
    phi_p.set_defaults(func=cmd_phi)

    con = sub.add_parser("contract", help="contract one node and emit the result")
    con.add_argument("input")
    con.add_argument("--node", type=int, required=True)
    _add_output(con)
    con.set_defaults(func=cmd_contract)

    ver = sub.add_parser("verify", help="compare engine values against closed forms")
    ver_sub = ver.add_subparsers(dest="family", required=True)
    vp = ver_sub.add_parser("path")
    vp.add_argument("--n", type=_range_arg)
    vc = ver_sub.add_parser("comet")
    vc.add_argument("--s", type=_range_arg)
    vc.add_argument("--t", type=_range_arg)
    vd = ver_sub.add_parser("double-comet")
    vd.add_argument("--a", type=_range_arg)
    vd.add_argument("--b", type=_range_arg)
    vd.add_argument("--k", type=_range_arg, help="connecting path length")
    vl = ver_sub.add_parser("lollipop")
    vl.add_argument("--d", type=_range_arg)
    vl.add_argument("--nd", type=_range_arg, help="clique size")
    for p in (vp, vc, vd, vl):
        p.set_defaults(func=cmd_verify)
        _add_format(p)
        _add_jobs(p)
        _add_output(p)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (EdgeListError, FamilyParameterError, FormulaDomainError,
            DegenerateOrderError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConnectivityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    raise SystemExit(main())
