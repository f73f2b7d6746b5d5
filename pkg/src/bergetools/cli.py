"""Command-line entry point: ``bergetools <subcommand> ...``.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
error, 3 node budget or size limit exhausted.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import constructions, counting, girth5, search, verify
from .berge import PatternGraph, contains_berge, find_expansion
from .errors import ParseError, PreconditionError, ResourceLimitError
from .formats import format_hypergraph, parse_hypergraph
from .hypergraph import Hypergraph, girth

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

FAMILIES = ("polarity", "norm", "bipartite-norm", "composite", "fano", "greedy-girth5")


class _Usage(Exception):
    pass


def _load(path: str) -> Hypergraph:
    text = sys.stdin.read() if path == "-" else open(path).read()
    return parse_hypergraph(text)


def _patterns(specs: Sequence[str]) -> list[PatternGraph]:
    out: list[PatternGraph] = []
    for spec in specs:
        if spec.upper() == "B4":
            out.extend(search.berge_cycle_family(4))
        else:
            out.append(PatternGraph.parse(spec))
    return out


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise _Usage(f"--family {args.family} needs {' '.join(missing)}")


def cmd_construct(args) -> int:
    fam = args.family
    if fam == "polarity":
        _need(args, "q")
        obj, note = constructions.erdos_renyi_polarity(args.q), f"polarity graph q={args.q}"
    elif fam == "norm":
        _need(args, "s", "q")
        obj, note = constructions.norm_graph(args.s, args.q), f"norm graph s={args.s} q={args.q}"
    elif fam == "bipartite-norm":
        _need(args, "s", "q")
        bg = constructions.bipartite_norm_graph(args.s, args.q)
        obj = bg.graph
        note = f"bipartite norm graph s={args.s} q={args.q}; part A = 0..{len(bg.part_a) - 1}"
    elif fam == "composite":
        _need(args, "s", "q")
        comp = constructions.composite_graph(args.s, args.q, args.seed)
        obj = comp.graph
        note = (f"composite s={args.s} q={args.q} seed={args.seed}; "
                f"part A = 0..{len(comp.part_a) - 1}")
    elif fam == "fano":
        obj, note = constructions.fano(), "Fano plane"
    else:
        _need(args, "n")
        r = args.r or 3
        obj = girth5.greedy_girth5(args.n, r, args.seed)
        note = f"greedy girth-5 hypergraph n={args.n} r={r} seed={args.seed}"
    text = format_hypergraph(obj, note)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_check(args) -> int:
    H = _load(args.input)
    if args.berge:
        F = PatternGraph.parse(args.berge)
        w = contains_berge(H, F, budget=args.budget)
    else:
        F = PatternGraph.parse(args.expansion)
        w = find_expansion(H, F, budget=args.budget)
    print(w.format(F) if w else "none")
    return EXIT_OK


def cmd_girth(args) -> int:
    print(f"girth: {girth(_load(args.input), args.max_k)}")
    return EXIT_OK


def cmd_count(args) -> int:
    H = _load(args.input)
    if H.r != 2:
        raise ParseError(f"count needs a graph (r = 2), got r = {H.r}", 1)
    G = H.to_graph()
    if args.clique is not None:
        print(f"cliques[{args.clique}]: {counting.count_cliques(G, args.clique)}")
    elif args.kst is not None:
        s, t = args.kst
        found = counting.find_kst(G, s, t)
        print(f"free: {'true' if found is None else 'false'}")
        if found:
            print(f"witness: {' '.join(map(str, found[0]))} | {' '.join(map(str, found[1]))}")
    elif args.k22:
        print(f"k22: {counting.count_k22(G)}")
    else:
        print(f"ind[{args.ind}]: {counting.count_independent_sets(G, args.ind, budget=args.budget)}")
    return EXIT_OK


def cmd_search(args) -> int:
    patterns = _patterns(args.forbid)
    if args.mode == "graph":
        report = search.ex_graph(args.n, patterns, budget=args.budget)
    elif args.mode == "generalized":
        report = search.ex_generalized(args.n, args.r or 3, patterns, budget=args.budget)
    elif args.mode == "berge":
        report = search.ex_berge(args.n, args.r or 3, patterns, budget=args.budget)
    else:
        report = search.ex_expansion(args.n, args.r or 3, patterns, budget=args.budget)
    sys.stdout.write(report.to_text(telemetry=not args.no_telemetry))
    return EXIT_OK


def cmd_census(args) -> int:
    table = search.census_girth5(args.n, args.r, budget=args.budget)
    sys.stdout.write(table.to_text(telemetry=not args.no_telemetry))
    return EXIT_OK


def cmd_verify(args) -> int:
    def show(res):
        print(res.to_text(), flush=True)

    print(f"suite: {args.suite}")
    result = verify.run_suite(args.suite, on_result=show)
    print(f"result: {'PASS' if result.passed else 'FAIL'}")
    return EXIT_OK if result.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bergetools", description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=int, default=1,
                        help="worker cap (searches currently run on one worker)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="write a named construction in the text format")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="look for a Berge copy or an expansion")
    p.add_argument("input", nargs="?", default="-", help="hypergraph file or - for stdin")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--berge", metavar="PATTERN")
    which.add_argument("--expansion", metavar="PATTERN")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("girth", help="Berge girth of a hypergraph")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--max-k", type=int, default=5)
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("count", help="exact counts on a graph")
    p.add_argument("input", nargs="?", default="-")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--clique", type=int, metavar="M")
    what.add_argument("--kst", type=int, nargs=2, metavar=("S", "T"))
    what.add_argument("--k22", action="store_true")
    what.add_argument("--ind", type=int, metavar="D")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("search", help="exact extremal number by branch and bound")
    p.add_argument("--mode", choices=("graph", "generalized", "berge", "expansion"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, help="uniformity, or clique size for generalized (default 3)")
    p.add_argument("--forbid", action="append", required=True, metavar="PATTERN",
                   help="C<k>, P<k>, K<k>, K<s>,<t>, B4 or a graph file; repeatable")
    p.add_argument("--budget", type=int)
    p.add_argument("--no-telemetry", action="store_true", help="omit nodes and seconds")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("census", help="labelled count of girth-5 hypergraphs by edge number")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--no-telemetry", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--suite", choices=("constructions", "chain", "census", "kw", "all"), default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (_Usage, ParseError, PreconditionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
