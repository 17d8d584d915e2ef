"""Command-line interface.

Output is line-oriented ``key value`` pairs. Exit codes: 0 success/PASS,
1 usage or input error, 2 bound or verification FAIL, 3 oracle budget
exceeded.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from dfscolor.adversary import AdversaryTranscript, run_adversary, verify_transcript
from dfscolor.errors import BudgetExceeded, ContractViolation, DfsColorError, HypothesisViolation
from dfscolor.generators import GraphDocument, generate
from dfscolor.graph import blocks, validate_coloring
from dfscolor.io import emit_coloring, emit_graph, parse_coloring, parse_graph, sniff_format
from dfscolor.online import ALGORITHMS, make_factory
from dfscolor.oracles import (
    CYCLE_LIMIT,
    chromatic_number_exact,
    clique_number_exact,
    cycle_stats,
    forbidden_subgraph_check,
)
from dfscolor.pipelines import METHODS, run_method

log = logging.getLogger("dfscolor")

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(key: str, value: object) -> None:
    if isinstance(value, (tuple, list)):
        value = ",".join(map(str, value)) or "-"
    elif value is None:
        value = "none"
    print(f"{key} {value}")


def load_graph(arg: str, fmt: str | None = None) -> GraphDocument:
    """A file path (format sniffed unless given) or a family expression."""
    path = Path(arg)
    if path.is_file():
        text = path.read_text()
        doc = parse_graph(text, fmt or sniff_format(text))  # type: ignore[arg-type]
        if doc.relabel is not None:
            log.warning("vertex ids re-indexed: %s", " ".join(f"{a}->{b}" for a, b in doc.relabel.items()))
        return GraphDocument(doc.graph, doc.name or path.stem, f"file: {path}", doc.relabel)
    return generate(arg)


def _limit(args: argparse.Namespace) -> int:
    if args.limit > CYCLE_LIMIT:
        log.warning("oracle budget raised to %d vertices; exhaustive searches are exponential", args.limit)
    return args.limit


def cmd_analyze(args: argparse.Namespace) -> int:
    doc = load_graph(args.graph, args.format)
    g = doc.graph
    limit = _limit(args)
    _emit("name", doc.name)
    _emit("n", g.n)
    _emit("m", g.m)
    _emit("components", len(g.components()))
    stats = cycle_stats(g, limit)
    _emit("girth", stats.girth)
    _emit("spectrum", stats.spectrum)
    _emit("odd_lengths", stats.odd_lengths)
    _emit("odd_circumference", stats.odd_circumference)
    _emit("circumference", stats.circumference)
    _emit("longest_path", stats.longest_path)
    _emit("omega", clique_number_exact(g, max(limit, 30)))
    for which in ("triangle", "C5"):
        found = forbidden_subgraph_check(g, which, limit=max(limit, 30))  # type: ignore[arg-type]
        _emit(which.lower(), "present" if found.present else "absent")
        if found.present:
            _emit(f"{which.lower()}_witness", found.witness)
    bd = blocks(g)
    _emit("blocks", len(bd.blocks))
    _emit("cut_vertices", bd.cut_vertices)
    chi, _ = chromatic_number_exact(g, limit)
    _emit("chi", chi)
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    doc = load_graph(args.graph, args.format)
    g = doc.graph
    try:
        report = run_method(
            g, args.method, ell=args.ell, algo=args.algo, k=args.k, r=args.r, s=args.s, limit=_limit(args)
        )
    except HypothesisViolation as exc:
        _emit("result", "FAIL")
        _emit("reason", "hypothesis violation (the input does not satisfy the method's hypothesis)")
        print(f"detail {exc}")
        for cyc in exc.witness:
            _emit("witness_cycle", cyc)
        return EXIT_FAIL
    _emit("name", doc.name)
    _emit("method", report.method)
    _emit("n", g.n)
    _emit("colors_used", report.colors_used)
    _emit("bound", f"{report.bound.value:g}")
    _emit("bound_formula", report.bound.formula)
    for key, val in report.bound.params.items():
        _emit(f"param_{key}", f"{val:g}")
    for key, val in report.notes.items():
        _emit(key, val)
    _emit("proper", "PASS" if report.proper else "FAIL")
    within = report.colors_used <= report.bound.value
    _emit("within_bound", "PASS" if within else "FAIL")
    _emit("result", "PASS" if report.passed else "FAIL")
    if not report.passed:
        _emit("reason", "bound or properness violated with the hypothesis holding: implementation bug")
    if args.out:
        Path(args.out).write_text(emit_coloring(report.composed.coloring))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_adversary(args: argparse.Namespace) -> int:
    params = {} if args.ell is None else {"ell": args.ell}
    factory = make_factory(args.algo, **params)
    t = run_adversary(factory, args.k)
    verdict = verify_transcript(t)
    _emit("k", t.k)
    _emit("vertices", t.n)
    _emit("bins_used", t.bins_used)
    _emit("stalled", "yes" if t.stalled else "no")
    _emit("max_degree", t.graph.max_degree())
    for name, witness in verdict.failures:
        print(f"violation {name}: {','.join(map(str, witness))}")
    ok = verdict.ok and t.bins_used >= t.k
    _emit("result", "PASS" if ok else "FAIL")
    if args.out:
        Path(args.out).write_text(t.to_text())
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args: argparse.Namespace) -> int:
    if args.transcript:
        t = AdversaryTranscript.from_text(Path(args.transcript).read_text())
        verdict = verify_transcript(t)
        _emit("vertices", t.n)
        _emit("bins_used", t.bins_used)
        for name, witness in verdict.failures:
            print(f"violation {name}: {','.join(map(str, witness))}")
        _emit("result", "PASS" if verdict.ok else "FAIL")
        return EXIT_OK if verdict.ok else EXIT_FAIL
    if not (args.coloring and args.graph):
        raise UsageError("verify needs --transcript FILE or --coloring FILE GRAPH")
    g = load_graph(args.graph, args.format).graph
    c = parse_coloring(Path(args.coloring).read_text())
    verdict = validate_coloring(g, c)
    _emit("colors_used", c.num_colors)
    if not verdict:
        _emit("monochromatic_edge", verdict.witness)
    _emit("result", "PASS" if verdict else "FAIL")
    return EXIT_OK if verdict else EXIT_FAIL


def cmd_gen(args: argparse.Namespace) -> int:
    doc = generate(args.family)
    text = emit_graph(doc, args.format or "edgelist")  # type: ignore[arg-type]
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dfscolor", description="DFS-decomposition graph coloring workbench")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("graph", help="graph file (edge list or DIMACS) or family expression, e.g. 'cycle(9)'")
        p.add_argument("--format", choices=("edgelist", "dimacs"), help="input format (sniffed by default)")
        p.add_argument("--limit", type=int, default=CYCLE_LIMIT, help="vertex budget for exhaustive oracles")

    p = sub.add_parser("analyze", help="cycle statistics, clique number, blocks, chromatic number")
    graph_args(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("color", help="run a coloring method and check its bound")
    graph_args(p)
    p.add_argument("--method", required=True, choices=METHODS)
    p.add_argument("--algo", default="first-fit", choices=sorted(ALGORITHMS), help="online algorithm for the bands method")
    p.add_argument("--ell", type=int, help="odd circumference (skips the exhaustive computation)")
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--out", help="write the coloring as 'vertex color' lines")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("adversary", help="play the online lower-bound game")
    p.add_argument("--algo", default="first-fit", choices=sorted(ALGORITHMS))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, help="parameter for ell-based algorithms")
    p.add_argument("--out", help="write the transcript here")
    p.set_defaults(func=cmd_adversary)

    p = sub.add_parser("verify", help="check a coloring or an adversary transcript")
    p.add_argument("graph", nargs="?")
    p.add_argument("--coloring")
    p.add_argument("--transcript")
    p.add_argument("--format", choices=("edgelist", "dimacs"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="emit a generated graph")
    p.add_argument("family", help="e.g. 'groetzsch', 'random_girth5(50, 0.1, 7)'")
    p.add_argument("--format", choices=("edgelist", "dimacs"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ContractViolation as exc:
        print(f"error contract violation: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (DfsColorError, UsageError, OSError) as exc:
        print(f"error {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
