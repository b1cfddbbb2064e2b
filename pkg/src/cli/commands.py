#!/usr/bin/env python3
"""
Influence - Command Line

Subcommands:

    solve       exact scores and best moves of a graph document
    gen         write a segment, cycle, tree or quasi-path document
    table       single-segment score table
    verify      run verification suites and write their reports
    play        play a graph against the engine in the terminal
    export-dot  DOT text of a graph document

Exit codes: 0 on success, 1 when a verification suite has a failing claim,
2 on usage, parse and parameter errors.

Author: Influence Contributors
License: MIT
"""

import argparse
import json
import logging
import random
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from experiments.registry import SUITE_ALIASES, get_suite, missing_anchors, run_suite, suite_names
from experiments.report import write_rows
from experiments.settings import load_settings, results_dir
from families.cycles import make_cycle
from families.quasi_paths import random_quasi_path
from families.segment_solver import SegmentSumSolver, segment_table
from families.segments import OddClass, make_segment
from families.trees import TreeSpec, make_tree
from graph_core.errors import FamilyParameterError, GraphParseError, NoMoveError, UnknownSuiteError
from graph_core.graph import Color, GameGraph
from graph_core.graph_doc import read_graph, serialize_graph, to_dot, write_graph
from graph_core.position import initial
from solver.engine import InfluenceSolver
from solver.options import SolveMode, SolveOptions

from .play import play_game

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CLAIM_FAILURE = 1
EXIT_USAGE = 2

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def _on_off(value: str) -> bool:
    if value not in ("on", "off"):
        raise argparse.ArgumentTypeError(f"expected on or off, got '{value}'")
    return value == "on"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="influence", description="Exact analysis of the INFLUENCE scoring game.")
    parser.add_argument("--config", default=None, help="JSON settings file (config/influence_config.json by default)")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="Exact scores of a graph document")
    solve.add_argument("path", help="Graph document")
    solve.add_argument("--mode", choices=[m.value for m in SolveMode], default=None)
    solve.add_argument("--pruning", type=_on_off, default=None, metavar="on|off")
    solve.add_argument("--audit", action="store_true", help="Check score invariants on every memo entry")
    solve.add_argument("--parallel", action="store_true", help="Evaluate the root's children on a thread pool")
    solve.add_argument("--json", action="store_true", help="Print the result as JSON")

    gen = commands.add_parser("gen", help="Write an instance of a graph family")
    gen.add_argument("family", choices=["segment", "cycle", "tree", "quasipath"])
    gen.add_argument("--n", type=int, required=True,
                     help="Segment or cycle size, tree depth, or quasi-path length")
    gen.add_argument("--class", dest="odd_class", choices=["minus", "plus"], default=None,
                     help="Endpoint class of an odd segment")
    gen.add_argument("--start", type=int, default=None, help="First label of a segment or cycle")
    gen.add_argument("--c", type=int, default=1, help="Right leaves under each last-level tree vertex")
    gen.add_argument("--seed", type=int, default=None, help="Seed of a random quasi-path")
    gen.add_argument("--out", default=None, help="Output file; the document goes to stdout otherwise")

    table = commands.add_parser("table", help="Single-segment score table")
    table.add_argument("--max-n", type=int, default=38)
    table.add_argument("--class", dest="odd_class", choices=["minus", "plus"], default="minus",
                       help="Class of the odd-length segments")
    table.add_argument("--csv", default=None, help="Also write the rows to this CSV file")

    verify = commands.add_parser("verify", help="Run verification suites")
    which = verify.add_mutually_exclusive_group(required=True)
    which.add_argument("--suite", action="append", help="Suite name; may be repeated")
    which.add_argument("--all", action="store_true", help="Run every registered suite")
    which.add_argument("--list", action="store_true", help="List the registered suites")
    verify.add_argument("--seed", type=int, default=None, help="Seed overriding the configured one")
    verify.add_argument("--cap", type=int, default=None, help="Vertex cap overriding the configured one")
    verify.add_argument("--results-dir", default=None, help="Directory for the JSON and CSV reports")

    play = commands.add_parser("play", help="Play a graph against the engine")
    play.add_argument("path", help="Graph document")
    play.add_argument("--human", choices=["L", "R"], default="R")
    play.add_argument("--first", choices=["L", "R"], default="L")

    export = commands.add_parser("export-dot", help="DOT text of a graph document")
    export.add_argument("path", help="Graph document")
    export.add_argument("--out", default=None, help="Output file; stdout otherwise")
    return parser


# Commands

def _best_label(solver: InfluenceSolver, graph: GameGraph, mover: Color) -> Optional[int]:
    try:
        return solver.best_move(initial(graph), mover).label
    except NoMoveError:
        return None


def solve_result(graph: GameGraph, options: SolveOptions) -> Dict[str, Any]:
    """The ``solve`` payload; every key except ``elapsedMs`` is deterministic."""
    solver = InfluenceSolver(graph, options)
    quad = solver.solve()
    elapsed = solver.last_elapsed_ms
    return {
        'n': quad.n,
        'sL1': quad.s_l1,
        'sL2': quad.s_l2,
        'sR1': quad.s_r1,
        'sR2': quad.s_r2,
        'ls': quad.ls,
        'rs': quad.rs,
        'incentive': quad.incentive,
        'bestMoveL': _best_label(solver, graph, Color.L),
        'bestMoveR': _best_label(solver, graph, Color.R),
        'memoEntries': solver.memo_entries,
        'elapsedMs': round(elapsed, 3),
    }


def cmd_solve(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    graph = read_graph(args.path)
    overrides: Dict[str, Any] = {}
    if args.mode is not None:
        overrides['mode'] = SolveMode(args.mode)
    if args.pruning is not None:
        overrides['pruning'] = args.pruning
    if args.audit:
        overrides['audit'] = True
    if args.parallel:
        overrides['parallel_root'] = True
    options = SolveOptions.from_settings(settings, **overrides)
    result = solve_result(graph, options)

    if args.json:
        print(json.dumps(result, indent=2))
    else:
        print(f"{args.path}: {result['n']} vertices, {options.mode.value} mode")
        print(f"  Left first:  Left {result['sL1']}, Right {result['sR2']}  (Ls = {result['ls']})")
        print(f"  Right first: Left {result['sL2']}, Right {result['sR1']}  (Rs = {result['rs']})")
        print(f"  Incentive {result['incentive']}; best moves Left {result['bestMoveL']}, "
              f"Right {result['bestMoveR']}")
    return EXIT_OK


def generate(args: argparse.Namespace) -> GameGraph:
    """Graph described by the ``gen`` arguments."""
    if args.family == "segment":
        odd_class = OddClass(args.odd_class) if args.odd_class else None
        if args.n % 2 == 0 and odd_class is not None:
            raise FamilyParameterError("--class applies to odd segments only")
        return make_segment(args.n, odd_class, start=args.start)
    if args.family == "cycle":
        return make_cycle(args.n, start=args.start if args.start is not None else 1)
    if args.family == "tree":
        return make_tree(TreeSpec(args.n, args.c))
    _, graph, _ = random_quasi_path(random.Random(args.seed), args.n)
    return graph


def cmd_gen(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    graph = generate(args)
    left = graph.left_mask.bit_count()
    summary = f"{args.family}: {graph.n} vertices ({left} L, {graph.n - left} R), {len(graph.arcs)} arcs"
    if args.out:
        write_graph(graph, args.out)
        print(f"{summary}, written to {args.out}")
    else:
        sys.stdout.write(serialize_graph(graph))
    return EXIT_OK


def cmd_table(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    cap = settings['caps']['max_segment_total']
    if args.max_n < 1 or args.max_n > cap:
        raise FamilyParameterError(f"--max-n must lie in 1..{cap}, got {args.max_n}")
    rows = [r.to_dict() for r in segment_table(args.max_n, OddClass(args.odd_class), SegmentSumSolver())]
    print(f"{'n':>4} {'Ls':>4} {'Rs':>4}")
    for row in rows:
        print(f"{row['n']:>4} {row['ls']:>4} {row['rs']:>4}")
    if args.csv:
        write_rows(args.csv, rows)
        print(f"Rows written to {args.csv}")
    return EXIT_OK


def _suite_params(name: str, cap: Optional[int]) -> Dict[str, Any]:
    return {'cap': cap} if cap is not None and get_suite(name).cap is not None else {}


def cmd_verify(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    if args.list:
        for name in suite_names():
            entry = get_suite(name)
            print(f"{name:<18} {'seeded' if entry.seeded else '      '}  {entry.description}")
        for alias, target in sorted(SUITE_ALIASES.items()):
            print(f"{alias:<18} alias of {target}")
        uncovered = missing_anchors()
        if uncovered:
            print(f"Uncovered anchors: {', '.join(uncovered)}")
        return EXIT_OK

    names: List[str] = suite_names() if args.all else args.suite
    for name in names:
        get_suite(name)
    directory = Path(args.results_dir) if args.results_dir else results_dir(settings)

    failed = []
    for name in names:
        report = run_suite(name, params=_suite_params(name, args.cap), seed=args.seed, settings=settings)
        report.write(directory)
        print(report.summary_line())
        for claim in report.hard_failures:
            print(f"  FAIL {claim.claim_id} [{claim.anchor}] {json.dumps(claim.witness, sort_keys=True)}")
        if not report.passed:
            failed.append(name)

    if failed:
        print(f"{len(failed)} of {len(names)} suites failed: {', '.join(failed)}")
        return EXIT_CLAIM_FAILURE
    print(f"All {len(names)} suites passed; reports in {directory}")
    return EXIT_OK


def cmd_play(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    graph = read_graph(args.path)
    play_game(graph, Color(args.human), first=Color(args.first))
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    graph = read_graph(args.path)
    text = to_dot(graph, name=Path(args.path).stem)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"DOT written to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {
    'solve': cmd_solve,
    'gen': cmd_gen,
    'table': cmd_table,
    'verify': cmd_verify,
    'play': cmd_play,
    'export-dot': cmd_export_dot,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    settings = load_settings(args.config)
    level = logging.DEBUG if args.verbose else getattr(logging, str(settings.get('log_level', 'INFO')), logging.INFO)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)

    try:
        return COMMANDS[args.command](args, settings)
    except (GraphParseError, FamilyParameterError, UnknownSuiteError) as e:
        logger.error(f"❌ {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
