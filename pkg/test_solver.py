#!/usr/bin/env python3
"""
Influence Solver Tests

Exact scores on hand-checked games, agreement of every solver switch, and
the score properties of relevant positions on random graphs.

Author: Influence Contributors
License: MIT
"""

import sys
import os
from concurrent.futures import ThreadPoolExecutor

# Add src to path
current_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.join(current_dir, 'src'))

import pytest
from hypothesis import given, settings, strategies as st

from families.segments import OddClass, SegmentConfig, make_segment, materialize
from graph_core.errors import AuditError, NoMoveError
from graph_core.graph import Color, GameGraph, build_graph, disjoint_sum, empty_graph, negative
from graph_core.graph_doc import read_graph
from graph_core.moves import apply_move, relevant_reduce
from graph_core.position import initial
from solver.engine import InfluenceSolver, best_move, rel_scores, rel_scores_direct, solve
from solver.memo import MemoTable
from solver.milnor import milnor_bounds_check
from solver.options import SolveMode, SolveOptions
from solver.scores import ZERO, RelScores, ScoreQuad

INSTANCES = os.path.join(current_dir, 'instances')


@st.composite
def relevant_graphs(draw, max_n: int = 7) -> GameGraph:
    n = draw(st.integers(min_value=2, max_value=max_n))
    colors = draw(st.lists(st.sampled_from(["L", "R"]), min_size=n, max_size=n))
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=2 * n))
    graph = build_graph(colors, arcs)
    return relevant_reduce(initial(graph)).as_graph()


@st.composite
def any_graphs(draw, max_n: int = 6) -> GameGraph:
    n = draw(st.integers(min_value=1, max_value=max_n))
    colors = draw(st.lists(st.sampled_from(["L", "R"]), min_size=n, max_size=n))
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=2 * n)) if pairs else []
    return build_graph(colors, arcs)


def example() -> GameGraph:
    return read_graph(os.path.join(INSTANCES, 'six_vertex_example.inf'))


# Score types

def test_quad_accessors():
    quad = ScoreQuad(s_l1=4, s_l2=0, s_r1=6, s_r2=2)
    assert quad.n == 6
    assert (quad.ls, quad.rs, quad.incentive) == (2, -6, 8)
    assert quad.rel == RelScores(2, -6)
    assert ScoreQuad.from_rel(6, quad.rel) == quad
    assert quad.to_dict()['incentive'] == 8
    quad.check()


def test_quad_audit_errors():
    with pytest.raises(AuditError):
        ScoreQuad.from_rel(5, RelScores(2, 0))
    with pytest.raises(AuditError):
        ScoreQuad(s_l1=3, s_l2=1, s_r1=2, s_r2=1).check()


def test_relative_scores_arithmetic():
    first, second = RelScores(2, -2), RelScores(1, -5)
    assert first + second == RelScores(3, -7)
    assert second.negated() == RelScores(5, -1)
    assert second.incentive == 6


def test_credits_fold_into_quad():
    quad = ScoreQuad.from_left(4, 4, 0).with_credits(0, 2)
    assert quad == ScoreQuad(s_l1=4, s_l2=0, s_r1=6, s_r2=2)


# Memo and options

def test_memo_rejects_conflicting_writes():
    memo = MemoTable()
    memo.put(3, (1, 0))
    memo.put(3, (1, 0))
    with pytest.raises(AuditError):
        memo.put(3, (2, 0))
    assert memo.get(3) == (1, 0)
    assert memo.get(5) is None
    stats = memo.get_stats()
    assert (stats['entries'], stats['hits'], stats['misses']) == (1, 1, 1)
    assert memo.items() == [(3, (1, 0))]


def test_memo_counters_under_concurrent_lookups():
    memo = MemoTable()
    for key in range(0, 100, 2):
        memo.put(key, (key, 0))

    def lookups(_):
        return sum(memo.get(key) is not None for key in range(100) for _ in range(50))

    with ThreadPoolExecutor(max_workers=8) as pool:
        found = sum(pool.map(lookups, range(8)))
    stats = memo.get_stats()
    assert found == stats['hits'] == 8 * 50 * 50
    assert stats['hits'] + stats['misses'] == 8 * 100 * 50


def test_options_from_settings():
    settings_ = {'solver': {'mode': 'raw', 'pruning': False, 'workers': 2}}
    options = SolveOptions.from_settings(settings_, audit=True)
    assert options.mode is SolveMode.RAW
    assert not options.pruning and options.audit
    assert options.workers == 2
    assert options.plain().route_segments is False
    with pytest.raises(ValueError):
        SolveOptions(workers=0)


# Hand-checked games

@pytest.mark.parametrize("mode", list(SolveMode))
def test_example_scores(mode):
    solver = InfluenceSolver(example(), SolveOptions(mode=mode))
    assert solver.solve() == ScoreQuad(s_l1=4, s_l2=0, s_r1=6, s_r2=2)
    assert solver.rel_scores() == RelScores(2, -6)
    assert solver.incentive() == 8
    assert solver.memo_entries > 0


@pytest.mark.parametrize("mode", list(SolveMode))
def test_example_best_moves(mode):
    graph = example()
    solver = InfluenceSolver(graph, SolveOptions(mode=mode))
    left = solver.best_move(initial(graph), Color.L)
    right = solver.best_move(initial(graph), Color.R)
    assert (left.vertex, left.achieved) == (0, 4)
    assert (right.vertex, right.achieved) == (4, 6)
    assert right.captured == 5


def test_best_move_without_vertices():
    graph = build_graph(["L", "L"], [(0, 1)])
    with pytest.raises(NoMoveError):
        best_move(initial(graph), Color.R)


def test_trivial_games():
    assert solve(empty_graph()) == ZERO
    assert solve(build_graph(["L", "L", "L"], [])) == ScoreQuad(s_l1=3, s_l2=3, s_r1=0, s_r2=0)
    assert rel_scores(build_graph(["R"], [])) == RelScores(-1, -1)


def test_raw_waiting_rule():
    graph = build_graph(["L", "R", "R"], [(0, 1)])
    raw = solve(graph, SolveOptions(mode=SolveMode.RAW))
    assert raw == ScoreQuad(s_l1=2, s_l2=0, s_r1=3, s_r2=1)
    assert solve(graph) == raw


def test_segment_routing_agrees_with_search():
    config = SegmentConfig.of(6, (5, OddClass.PLUS))
    graph = materialize(config)
    routed = InfluenceSolver(graph).rel_scores()
    searched = InfluenceSolver(graph, SolveOptions(route_segments=False)).rel_scores()
    assert routed == searched


def test_single_segment_scores():
    assert rel_scores(make_segment(5, OddClass.MINUS)) == RelScores(1, -5)
    assert rel_scores(make_segment(4)) == RelScores(4, -4)


# Properties on random graphs

@settings(max_examples=60, deadline=None)
@given(any_graphs())
def test_raw_and_relevant_modes_agree(graph):
    assert solve(graph, SolveOptions(mode=SolveMode.RAW)) == solve(graph)


@settings(max_examples=60, deadline=None)
@given(relevant_graphs())
def test_switches_never_change_scores(graph):
    reference = solve(graph, SolveOptions().plain())
    assert solve(graph) == reference
    assert solve(graph, SolveOptions(parallel_root=True, workers=2)) == reference
    assert solve(graph, SolveOptions(audit=True, check_removals=True)) == reference


@settings(max_examples=60, deadline=None)
@given(relevant_graphs())
def test_relative_recursion_and_parity(graph):
    direct = rel_scores_direct(graph)
    assert direct == rel_scores(graph)
    assert (direct.ls - graph.n) % 2 == 0
    assert (direct.rs - graph.n) % 2 == 0


@settings(max_examples=60, deadline=None)
@given(relevant_graphs())
def test_positions_are_nonzugzwang(graph):
    solver = InfluenceSolver(graph)
    solver.solve()
    for key, (s_l1, s_l2) in solver.memo.items():
        quad = ScoreQuad.from_left(key.bit_count(), s_l1, s_l2)
        quad.check()
        assert quad.is_nonzugzwang


@settings(max_examples=60, deadline=None)
@given(relevant_graphs())
def test_negative_game_swaps_scores(graph):
    assert rel_scores(negative(graph)) == rel_scores(graph).negated()


@settings(max_examples=100, deadline=None)
@given(relevant_graphs(max_n=10))
def test_game_plus_negative_is_zero(graph):
    assert rel_scores(disjoint_sum(graph, negative(graph))) == RelScores(0, 0)


@settings(max_examples=40, deadline=None)
@given(relevant_graphs(max_n=5), relevant_graphs(max_n=5))
def test_sum_bounds(first, second):
    report = milnor_bounds_check(first, second)
    assert report.passed
    assert len(report.claims) == 4


@settings(max_examples=40, deadline=None)
@given(relevant_graphs())
def test_opponent_moves_never_raise_scores(graph):
    solver = InfluenceSolver(graph)
    whole = solver.solve()
    p = initial(graph)
    for v in p.alive_vertices():
        child = solver.solve_mask(apply_move(p, v).alive)
        if graph.colors[v] is Color.R:
            assert whole.s_l1 >= child.s_l1 and whole.s_l2 >= child.s_l2
        else:
            assert whole.s_r1 >= child.s_r1 and whole.s_r2 >= child.s_r2


def test_solve_is_deterministic():
    graph = example()
    first = InfluenceSolver(graph)
    second = InfluenceSolver(graph)
    assert first.solve() == second.solve()
    assert first.memo.items() == second.memo.items()


def main():
    """Run all tests"""
    print("🚀 Influence Solver Tests")
    print("=" * 40)
    return pytest.main([__file__, "-q"]) == 0


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
