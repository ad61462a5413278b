"""Command-line entry point: ``dompoly <subcommand> ...``.

Exit status is 0 on success or a passing check, 1 on a failing check and 2 on
usage or input errors.  Reports go to stdout; progress goes to stderr.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import search, theorems
from .canon import canonical_form
from .constructions import ExpressionError, PartitionSpec, parse_expression
from .extremal import check_kk
from .graph import Graph, GraphError, bits, from_graph6, to_graph6
from .polynomial import BudgetError, SetFamily, nondominating_sets, polynomial

log = logging.getLogger("dompoly")


class UsageError(Exception):
    pass


def read_graph(arg: str) -> Graph:
    """``g6:STRING``, ``@FILE`` (first graph6 line) or a construction expression."""
    if arg.startswith("g6:"):
        return from_graph6(arg[3:])
    if arg.startswith("@"):
        path = Path(arg[1:])
        for line in path.read_text(encoding="ascii").splitlines():
            if line.strip():
                return from_graph6(line)
        raise UsageError(f"{path}: no graph6 line found")
    return parse_expression(arg)


def read_family(path: str, n: int | None) -> SetFamily:
    sets = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            sets.append(sorted({int(tok) for tok in line.split()}))
        except ValueError as exc:
            raise UsageError(f"{path}:{lineno}: {exc}") from exc
    if not sets:
        raise UsageError(f"{path}: empty family")
    sizes = {len(s) for s in sets}
    if len(sizes) != 1:
        raise UsageError(f"{path}: sets have mixed sizes {sorted(sizes)}")
    ground = max(max(s, default=-1) for s in sets) + 1
    if n is None:
        n = ground
    elif n < ground:
        raise UsageError(f"--n {n} is smaller than the largest vertex index + 1 = {ground}")
    return SetFamily.from_sets(n, sizes.pop(), sets)


def _corpus(path: str | None, n: int):
    if path is not None:
        return list(search.ingest_graph6(path))
    if n <= search.MAX_GENERATED_ORDER:
        return list(search.enumerate_graphs(n))
    raise UsageError(f"order {n} needs --corpus FILE (built-in generation stops at {search.MAX_GENERATED_ORDER})")


def cmd_poly(args) -> int:
    p = polynomial(read_graph(args.graph))
    print(json.dumps(p.to_json()) if args.json else p)
    return 0


def cmd_ndsets(args) -> int:
    fam = nondominating_sets(read_graph(args.graph), args.k)
    if args.json:
        print(json.dumps({"n": fam.n, "k": fam.k, "sets": fam.as_lists()}))
    else:
        for s in fam.sets:
            print(" ".join(map(str, bits(s))))
    return 0


def cmd_construct(args) -> int:
    g = parse_expression(args.expr)
    if args.g6:
        print(to_graph6(g))
    else:
        print(g.n, g.num_edges())
        for u, v in g.edges():
            print(u, v)
    return 0


def cmd_class(args) -> int:
    g = read_graph(args.graph)
    report = search.equivalence_class(g, search.ingest_graph6(args.corpus))
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        print(report.polynomial)
        print(f"size {report.size}")
        for m in report.members:
            print(m)
    return 0


def cmd_atlas(args) -> int:
    atlas = search.build_atlas(search.ingest_graph6(args.corpus), workers=args.threads)
    Path(args.out).write_text(atlas.dumps() + "\n")
    if args.csv:
        atlas.write_csv(args.csv)
    print(f"order {atlas.order}: {atlas.total_graphs} graphs in {len(atlas.classes)} classes")
    return 0


def _run_claim(claim: str, params: list[int], corpus_path: str | None):
    def need(k):
        if len(params) != k:
            raise UsageError(f"{claim} takes {k} integer parameter(s), got {len(params)}")

    if claim == "fact1":
        need(2)
        return theorems.verify_fact1(*params)
    if claim == "thm2":
        need(1)
        corpus = list(search.ingest_graph6(corpus_path)) if corpus_path else None
        return theorems.verify_theorem2_members(params[0], corpus)
    if claim == "thm3":
        if not params:
            raise UsageError("thm3 takes the part sizes a1 ... ar")
        spec = PartitionSpec(params)
        corpus = _corpus(corpus_path, spec.n) if theorems.uniqueness_condition(spec) else None
        return theorems.verify_theorem3(spec, corpus)
    if claim == "thm4":
        need(2)
        return theorems.verify_theorem4_members(*params)
    if claim == "conj1-empirical":
        need(1)
        return theorems.conjecture1_class(params[0], _corpus(corpus_path, 2 * params[0] + 1))
    raise UsageError(f"unknown claim id {claim!r}; expected one of fact1, thm2, thm3, thm4, conj1-empirical")


def cmd_verify(args) -> int:
    out = _run_claim(args.claim, args.params, args.corpus)
    if args.json:
        print(out.dumps())
    else:
        print(out.summary())
        for key in sorted(out.evidence):
            print(f"  {key}: {json.dumps(out.evidence[key])}")
    return 0 if out.passed else 1


def cmd_kk(args) -> int:
    report = check_kk(read_family(args.family, args.n))
    print(json.dumps(report.to_json(), sort_keys=True))
    return 0


def cmd_canon(args) -> int:
    print(canonical_form(read_graph(args.graph)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dompoly", description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=int, default=None,
                        help="worker processes for corpus work (default: $DOMPOLY_THREADS or CPU count)")
    parser.add_argument("-q", "--quiet", action="store_true", help="suppress progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="print the domination polynomial")
    p.add_argument("graph", help="construction expression, g6:STRING or @FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("ndsets", help="list non-dominating sets of one size")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ndsets)

    p = sub.add_parser("construct", help="emit a constructed graph")
    p.add_argument("expr")
    p.add_argument("--g6", action="store_true", help="print graph6 instead of an edge list")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("canon", help="print the canonical graph6 form")
    p.add_argument("graph")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("class", help="D-equivalence class of a graph within a corpus")
    p.add_argument("graph")
    p.add_argument("--corpus", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("atlas", help="bucket a corpus by polynomial and save the atlas")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--csv", help="also write a polynomial,size summary")
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("verify", help="run a theorem check")
    p.add_argument("claim", help="fact1 | thm2 | thm3 | thm4 | conj1-empirical")
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--corpus")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kk", help="Kruskal-Katona shadow report for a set family")
    p.add_argument("--family", required=True, help="one set per line, space-separated vertex indices")
    p.add_argument("--n", type=int, default=None, help="ground set size (default: largest index + 1)")
    p.set_defaults(func=cmd_kk)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO,
                        format="%(message)s", stream=sys.stderr)
    if args.threads is not None and args.threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, ExpressionError, GraphError, BudgetError, theorems.PreconditionError,
            search.CorpusError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
