"""bandcli: generate graphs and numberings, run the exact solvers, render
boards and band matrices, and execute the verification suite.

Exit codes: 0 success/optimal, 1 invalid input, 2 unknown (budget exhausted).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import constructions, graphs, solvers, verify
from .boards import format_board, format_staircase, parse_board
from .records import ResultRecord
from .render import render_band

EXIT_OK, EXIT_INVALID, EXIT_UNKNOWN = 0, 1, 2

FAMILIES = {
    "grid": (2, graphs.grid),
    "path": (1, graphs.path),
    "cycle": (1, graphs.cycle),
    "complete": (1, graphs.complete),
    "wheel": (1, graphs.wheel),
    "bipartite": (2, graphs.complete_bipartite),
    "complete_bipartite": (2, graphs.complete_bipartite),
    "double_wheel_axis": (0, graphs.double_wheel_axis),
}


def _build_graph(family: str, params: list[int]):
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    arity, ctor = FAMILIES[family]
    if len(params) != arity:
        raise ValueError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    return ctor(*params)


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    params = list(args.params)
    if args.family == "grid" and args.cols is not None:
        params = [args.cols, args.rows]
    g = _build_graph(args.family, params)
    _emit(graphs.write_edge_list(g), args.out)
    return EXIT_OK


def cmd_numbering(args) -> int:
    params = list(args.params)
    if args.kind == "ddl":
        if len(params) != 2:
            raise ValueError("ddl takes parameters: m n")
        m, n = params
        nu = constructions.down_diagonal_lex(m, n)
        report = None
    elif args.kind == "reduce":
        if len(params) != 3:
            raise ValueError("reduce takes parameters: m n k")
        m, n, k = params
        report = constructions.modified_board_numbering(m, n, k)
        nu = report.numbering
    elif args.kind == "nonadjacent":
        if len(params) != 1:
            raise ValueError("nonadjacent takes one parameter: n")
        (n,) = params
        m = n
        report = constructions.nonadjacent_reduction_numbering(n)
        nu = report.numbering
    else:
        raise ValueError(f"unknown numbering kind {args.kind!r}")

    board = format_board(nu, m, n)
    if args.out:
        Path(args.out).write_text(board)
    if args.kind == "reduce":
        # the staircase display is the board the construction actually numbers
        staircase = constructions.modified_staircase(m, n, params[2])
        sys.stdout.write(format_staircase(staircase.rank_rows()))
    elif not args.out:
        sys.stdout.write(board)
    if report is not None:
        print(f"threshold {report.threshold}")
        for (u, v), length in report.long_edges:
            print(f"long edge {u}-{v} length {length}")
    return EXIT_OK


def cmd_solve(args) -> int:
    budget = solvers.Budget(args.budget_nodes)
    if args.infile:
        g = graphs.read_edge_list(Path(args.infile).read_text())
        graph_desc = {"path": args.infile}
    else:
        if not args.params:
            raise ValueError("give a graph family with parameters or --in FILE")
        family, params = args.params[0], [int(p) for p in args.params[1:]]
        g = _build_graph(family, params)
        graph_desc = {"family": family, "params": params}

    if args.what == "bandwidth":
        outcome = solvers.exact_bandwidth(g, budget)
    elif args.what == "brk":
        outcome = solvers.reduction_number(g, args.k, budget)
    elif args.what == "vi":
        outcome = solvers.vertex_isoperimetric(g)
    else:
        raise ValueError(f"unknown solve target {args.what!r}")

    witness_board = None
    if (
        g.family
        and g.family[0] == "grid"
        and isinstance(outcome.witness, solvers.Numbering)
    ):
        witness_board = format_board(outcome.witness, g.family[1], g.family[2])
    record = ResultRecord(
        command=args.what,
        graph=graph_desc,
        k=args.k if args.what == "brk" else None,
        t=None,
        budget_nodes=args.budget_nodes,
        value=outcome.value,
        status=outcome.status.value,
        nodes_expanded=outcome.nodes_expanded,
        elapsed=outcome.elapsed,
        witness_board=witness_board,
    )
    print(record.to_json())
    if args.out:
        with open(args.out, "a") as fh:
            fh.write(record.to_json() + "\n")
    return EXIT_OK if outcome.status is not solvers.Status.UNKNOWN else EXIT_UNKNOWN


def cmd_render(args) -> int:
    text = Path(args.board).read_text()
    m, n, nu = parse_board(text)
    if args.format == "ascii":
        sys.stdout.write(format_board(nu, m, n))
        return EXIT_OK
    g = graphs.grid(m, n)
    distance = args.distance if args.distance is not None else n
    report = render_band(g, nu, distance)
    for line in report.lines:
        print(line)
    print(
        f"max band distance {report.max_distance}; "
        f"{report.pairs_at} symmetric pairs at distance {distance}; "
        f"{report.pairs_beyond} symmetric pairs beyond distance {distance}"
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    cases = verify.run_suite(args.max_n, args.budget_nodes)
    failed = unknown = 0
    for case in cases:
        tag = case.status.upper()
        print(f"{tag:7s} {case.case_id}: {case.description} "
              f"(expected {case.expected!r}, got {case.actual!r})")
        failed += case.status == "fail"
        unknown += case.status == "unknown"
    print(f"{len(cases)} cases: {len(cases) - failed - unknown} passed, "
          f"{failed} failed, {unknown} unknown")
    if failed:
        return EXIT_INVALID
    return EXIT_UNKNOWN if unknown else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bandcli", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a graph as an edge list")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("numbering", help="construct an explicit numbering")
    p.add_argument("kind", choices=["ddl", "reduce", "nonadjacent"])
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_numbering)

    p = sub.add_parser("solve", help="run an exact solver")
    p.add_argument("what", choices=["bandwidth", "brk", "vi"])
    p.add_argument("params", nargs="*")
    p.add_argument("--in", dest="infile")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--budget-nodes", type=int, default=10**8)
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("render", help="render a board file")
    p.add_argument("board")
    p.add_argument("--format", choices=["ascii", "band"], default="ascii")
    p.add_argument("--distance", type=int)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--budget-nodes", type=int, default=10**8)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
