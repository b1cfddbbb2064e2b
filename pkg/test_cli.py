#!/usr/bin/env python3
"""
Influence CLI Tests

Every subcommand end to end on the instance documents, exit codes, and
scripted games against the engine.

Author: Influence Contributors
License: MIT
"""

import sys
import os
import io
import json

# Add src to path
current_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.join(current_dir, 'src'))

import pytest

from cli.commands import EXIT_CLAIM_FAILURE, EXIT_OK, EXIT_USAGE, main as cli_main
from cli.play import play_game
from families.segment_solver import SegmentSumSolver
from families.segments import SegmentConfig, make_segment
from graph_core.graph import Color, empty_graph
from graph_core.graph_doc import parse_graph, read_graph

INSTANCES = os.path.join(current_dir, 'instances')


def instance(name):
    return os.path.join(INSTANCES, name)


@pytest.fixture
def config(tmp_path):
    return str(tmp_path / "influence_config.json")


def run(capsys, config, *argv):
    code = cli_main(["--config", config, *argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def scripted(*answers):
    """input() stand-in replaying ``answers``, then signalling end of input."""
    pending = list(answers)
    prompts = []

    def read(prompt):
        prompts.append(prompt)
        if not pending:
            raise EOFError
        return pending.pop(0)

    read.prompts = prompts
    return read


# solve

def test_solve_matches_golden_output(capsys, config):
    code, out, _ = run(capsys, config, "solve", instance("six_vertex_example.inf"), "--json")
    assert code == EXIT_OK
    result = json.loads(out)
    with open(os.path.join(INSTANCES, "golden", "six_vertex_example_solve.json")) as f:
        golden = json.load(f)
    assert {k: result[k] for k in golden} == golden
    assert result['memoEntries'] > 0
    assert result['elapsedMs'] >= 0


@pytest.mark.parametrize("flags", [
    ["--mode", "raw"],
    ["--pruning", "off"],
    ["--audit"],
    ["--parallel"],
])
def test_solve_switches_keep_scores(capsys, config, flags):
    code, out, _ = run(capsys, config, "solve", instance("six_vertex_example.inf"), "--json", *flags)
    assert code == EXIT_OK
    result = json.loads(out)
    assert (result['ls'], result['rs'], result['bestMoveL'], result['bestMoveR']) == (2, -6, 0, 4)


def test_solve_text_output(capsys, config):
    code, out, _ = run(capsys, config, "solve", instance("six_vertex_example.inf"))
    assert code == EXIT_OK
    assert "Ls = 2" in out and "Rs = -6" in out
    assert "Incentive 8" in out


def test_solve_segment_sum_document(capsys, config):
    code, out, _ = run(capsys, config, "solve", instance("two_segments.inf"), "--json")
    assert code == EXIT_OK
    result = json.loads(out)
    expected = SegmentSumSolver().rel_scores(SegmentConfig.of((5, "minus"), 2))
    assert (result['ls'], result['rs']) == (expected.ls, expected.rs)


def test_solve_empty_graph(capsys, config):
    code, out, _ = run(capsys, config, "solve", instance("empty.inf"), "--json")
    assert code == EXIT_OK
    result = json.loads(out)
    assert result['n'] == 0
    assert all(result[k] == 0 for k in ('sL1', 'sL2', 'sR1', 'sR2', 'ls', 'rs', 'incentive'))
    assert result['bestMoveL'] is None and result['bestMoveR'] is None


def test_solve_rejects_self_loop(capsys, config):
    code, _, err = run(capsys, config, "solve", instance("self_loop.inf"))
    assert code == EXIT_USAGE
    assert "self-loop at line 5" in err


def test_usage_errors(capsys, config):
    assert run(capsys, config, "solve")[0] == EXIT_USAGE
    assert run(capsys, config, "solve", instance("missing.inf"))[0] == EXIT_USAGE
    assert run(capsys, config, "solve", instance("six_vertex_example.inf"), "--pruning", "maybe")[0] == EXIT_USAGE
    assert run(capsys, config, "--help")[0] == EXIT_OK


# gen

def test_gen_segment_to_stdout(capsys, config):
    code, out, _ = run(capsys, config, "gen", "segment", "--n", "5", "--class", "plus")
    assert code == EXIT_OK
    graph = parse_graph(out)
    expected = make_segment(5, "plus")
    assert (graph.labels, graph.colors) == (expected.labels, expected.colors)
    assert set(graph.arcs) == set(expected.arcs)


def test_gen_tree_to_file(capsys, config, tmp_path):
    target = tmp_path / "tree.inf"
    code, out, _ = run(capsys, config, "gen", "tree", "--n", "2", "--c", "4", "--out", str(target))
    assert code == EXIT_OK
    assert "49 vertices" in out
    assert read_graph(target).n == 49


def test_gen_quasi_path_is_seeded(capsys, config):
    first = run(capsys, config, "gen", "quasipath", "--n", "9", "--seed", "4")[1]
    second = run(capsys, config, "gen", "quasipath", "--n", "9", "--seed", "4")[1]
    assert first == second
    assert parse_graph(first).n == 9


def test_gen_parameter_errors(capsys, config):
    assert run(capsys, config, "gen", "cycle", "--n", "5")[0] == EXIT_USAGE
    assert run(capsys, config, "gen", "segment", "--n", "4", "--class", "minus")[0] == EXIT_USAGE
    assert run(capsys, config, "gen", "tree", "--n", "1", "--c", "0")[0] == EXIT_USAGE


# table

def test_table_with_csv(capsys, config, tmp_path):
    target = tmp_path / "segments.csv"
    code, out, _ = run(capsys, config, "table", "--max-n", "10", "--csv", str(target))
    assert code == EXIT_OK
    lines = target.read_text().splitlines()
    assert lines[0] == "n,ls,rs"
    assert lines[5] == "5,1,-5"
    assert len(lines) == 11


def test_table_cap(capsys, config):
    assert run(capsys, config, "table", "--max-n", "500")[0] == EXIT_USAGE


# verify

def test_verify_one_suite(capsys, config, tmp_path):
    code, out, _ = run(capsys, config, "verify", "--suite", "example-game", "--results-dir", str(tmp_path))
    assert code == EXIT_OK
    report = json.loads((tmp_path / "example-game.json").read_text())
    assert report['passed']
    assert "All 1 suites passed" in out


def test_verify_list(capsys, config):
    code, out, _ = run(capsys, config, "verify", "--list")
    assert code == EXIT_OK
    assert "segment-table" in out
    assert "Uncovered anchors" not in out


def test_verify_unknown_suite(capsys, config, tmp_path):
    code, _, err = run(capsys, config, "verify", "--suite", "nope", "--results-dir", str(tmp_path))
    assert code == EXIT_USAGE
    assert "unknown suite" in err


def test_verify_reports_failures(capsys, config, tmp_path, monkeypatch):
    import experiments.suites_segments as suites

    monkeypatch.setitem(suites.PUBLISHED_TABLE, 2, (0, 0))
    code, out, _ = run(capsys, config, "verify", "--suite", "segment-table", "--results-dir", str(tmp_path))
    assert code == EXIT_CLAIM_FAILURE
    assert "FAIL published-values" in out


# export-dot

def test_export_dot(capsys, config, tmp_path):
    code, out, _ = run(capsys, config, "export-dot", instance("six_vertex_example.inf"))
    assert code == EXIT_OK
    assert "digraph" in out and "->" in out
    target = tmp_path / "example.dot"
    assert run(capsys, config, "export-dot", instance("six_vertex_example.inf"), "--out", str(target))[0] == EXIT_OK
    assert "digraph" in target.read_text()


# play

def test_play_engine_opens_and_human_answers():
    lines = []
    read = scripted("x", "0", "1")
    graph = read_graph(instance("six_vertex_example.inf"))
    result = play_game(graph, Color.R, input_fn=read, output_fn=lines.append)
    assert result.moves == [(Color.L, 0), (Color.R, 1)]
    assert result.scores == {Color.L: 4, Color.R: 2}
    assert lines[0] == "Left plays 0 and takes [0, 2, 4, 5]"
    assert "'x' is not a vertex label" in lines
    assert "vertex 0 is not an alive R-vertex" in lines
    assert len(read.prompts) == 3
    assert lines[-2:] == ["Final score: Left 4, Right 2", "Left wins by 2"]


def test_play_end_of_input_abandons():
    lines = []
    graph = read_graph(instance("six_vertex_example.inf"))
    result = play_game(graph, Color.R, input_fn=scripted(), output_fn=lines.append)
    assert result.abandoned
    assert "Input ended, game abandoned" in lines
    assert lines[-1] == "Final score: Left 4, Right 0"


def test_play_empty_graph():
    lines = []
    result = play_game(empty_graph(), Color.L, input_fn=scripted(), output_fn=lines.append)
    assert lines == ["Game over: the graph has no vertex to play"]
    assert result.winner is None and not result.moves


def test_play_waiting_player():
    lines = []
    result = play_game(make_segment(4), Color.R, input_fn=scripted(), output_fn=lines.append)
    assert result.scores == {Color.L: 4, Color.R: 0}
    assert "Right has no vertex left and waits" in lines
    assert result.winner is Color.L
    assert lines[-1] == "Left wins by 4"


def test_play_command_reads_stdin(capsys, config, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("1\n"))
    code, out, _ = run(capsys, config, "play", instance("six_vertex_example.inf"), "--human", "R")
    assert code == EXIT_OK
    assert "Left wins by 2" in out


def main():
    """Run all tests"""
    print("🚀 Influence CLI Tests")
    print("=" * 40)
    return pytest.main([__file__, "-q"]) == 0


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
