#!/usr/bin/env python3
"""
Influence Graph Core Tests

Graph documents, closures, forced vertices, removal sets and move
application, with networkx and numpy as independent oracles.

Author: Influence Contributors
License: MIT
"""

import sys
import os

# Add src to path
current_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.join(current_dir, 'src'))

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from families.segments import OddClass, make_segment
from graph_core.closure import reachability_matrix, strong_components, succ_closure, pred_closure
from graph_core.errors import (
    ContractViolationError,
    GraphParseError,
    IllegalMoveError,
    InvalidVertexError,
    NoMoveError,
)
from graph_core.graph import Color, GameGraph, build_graph, disjoint_sum, empty_graph, iter_bits, mask_of, negative
from graph_core.graph_doc import parse_graph, read_graph, serialize_graph, to_dot
from graph_core.moves import (
    MoveMode,
    RemovalKind,
    alternative_removal_mask_of,
    apply_move,
    dominant_moves,
    forced_sets,
    is_relevant,
    move_closure_of,
    relevant_reduce,
    removal_masks_of,
    rmv,
)
from graph_core.position import Position, initial

INSTANCES = os.path.join(current_dir, 'instances')


@st.composite
def colored_digraphs(draw, max_n: int = 7) -> GameGraph:
    n = draw(st.integers(min_value=1, max_value=max_n))
    colors = draw(st.lists(st.sampled_from(["L", "R"]), min_size=n, max_size=n))
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=2 * n)) if pairs else []
    return build_graph(colors, arcs)


@st.composite
def relevant_positions(draw, max_n: int = 7) -> Position:
    graph = draw(colored_digraphs(max_n))
    return relevant_reduce(initial(graph))


def example() -> GameGraph:
    return read_graph(os.path.join(INSTANCES, 'six_vertex_example.inf'))


# Graph documents

def test_parse_example_document():
    graph = example()
    assert graph.n == 6
    assert [c.value for c in graph.colors] == ["L", "R", "L", "R", "R", "R"]
    assert len(graph.arcs) == 6
    assert graph.labels == (0, 1, 2, 3, 4, 5)


def test_serialization_is_canonical():
    graph = example()
    text = serialize_graph(graph)
    assert serialize_graph(parse_graph(text)) == text
    assert text.splitlines()[0] == "influence v1"


def test_sparse_ids_become_labels():
    graph = parse_graph("influence v1\nv 10 L\nv 3 R\na 10 3\n")
    assert graph.labels == (3, 10)
    assert graph.index_of(10) == 1
    assert graph.arcs == ((1, 0),)


def test_self_loop_is_rejected_with_line():
    with pytest.raises(GraphParseError) as info:
        read_graph(os.path.join(INSTANCES, 'self_loop.inf'))
    assert info.value.line == 5
    assert str(info.value) == "self-loop at line 5"


def test_parse_errors_carry_columns():
    with pytest.raises(GraphParseError) as info:
        parse_graph("influence v1\nv 0 B\n")
    assert (info.value.line, info.value.column) == (2, 5)
    with pytest.raises(GraphParseError):
        parse_graph("v 0 L\n")
    with pytest.raises(GraphParseError):
        parse_graph("influence v1\nv 0 L\na 0 7\n")
    with pytest.raises(GraphParseError):
        parse_graph("influence v1\nv 0 L\nv 0 R\n")


def test_duplicate_arc_is_ignored_with_warning(caplog):
    graph = parse_graph("influence v1\nv 0 L\nv 1 R\na 0 1\na 0 1\n")
    assert graph.arcs == ((0, 1),)
    assert any("Duplicate arc" in r.message for r in caplog.records)


def test_empty_document():
    graph = read_graph(os.path.join(INSTANCES, 'empty.inf'))
    assert graph.n == 0
    assert serialize_graph(graph) == "influence v1\n"


def test_dot_export_marks_left_vertices():
    text = to_dot(example(), name="example")
    assert "digraph" in text
    assert "black" in text
    assert "->" in text


# Graph operations

def test_negative_swaps_colours_and_reverses_arcs():
    graph = example()
    neg = negative(graph)
    assert all(a is b.opponent for a, b in zip(neg.colors, graph.colors))
    assert set(neg.arcs) == {(b, a) for a, b in graph.arcs}
    assert negative(neg) == graph


def test_disjoint_sum_shifts_ids_and_labels():
    first = make_segment(3)
    second = make_segment(2)
    total = disjoint_sum(first, second)
    assert total.n == 5
    assert total.labels == (1, 2, 3, 4, 5)
    assert disjoint_sum(empty_graph(), second) == second


def test_invalid_graphs_are_rejected():
    with pytest.raises(InvalidVertexError):
        example().label(9)
    with pytest.raises(ValueError):
        GameGraph(colors=(Color.L, Color.R), arcs=(), labels=(2, 1))


# Closures

@settings(max_examples=100, deadline=None)
@given(colored_digraphs())
def test_closures_match_networkx(graph):
    p = initial(graph)
    digraph = graph.to_networkx()
    for v in graph.vertices:
        assert succ_closure(p, v) == nx.descendants(digraph, v) | {v}
        assert pred_closure(p, v) == nx.ancestors(digraph, v) | {v}


@settings(max_examples=50, deadline=None)
@given(colored_digraphs())
def test_reachability_matrix_matches_closures(graph):
    p = initial(graph)
    reach = reachability_matrix(p)
    for i, v in enumerate(p.alive_vertices()):
        row = {p.alive_vertices()[j] for j in range(len(reach)) if reach[i, j]}
        assert row == succ_closure(p, v)


@settings(max_examples=100, deadline=None)
@given(colored_digraphs())
def test_moves_take_whole_strong_components(graph):
    p = initial(graph)
    components = strong_components(p)
    assert sorted(v for c in components for v in c) == list(graph.vertices)
    for v in graph.vertices:
        closure = move_closure_of(graph, p.alive, v)
        for component in components:
            inside = {bool(closure >> w & 1) for w in component}
            assert len(inside) == 1


def test_closure_of_dead_vertex_is_an_error():
    p = initial(example()).with_alive(mask_of([0, 2]))
    with pytest.raises(InvalidVertexError):
        succ_closure(p, 4)


# Forced vertices and relevant positions

def test_example_forced_vertices_and_reduction():
    start = initial(example())
    forced_l, forced_r = forced_sets(start)
    assert forced_l == frozenset()
    assert forced_r == {1, 3}
    reduced = relevant_reduce(start)
    assert reduced.vertex_set() == {0, 2, 4, 5}
    assert (reduced.credit_l, reduced.credit_r) == (0, 2)
    assert relevant_reduce(reduced) is reduced
    assert is_relevant(reduced)


@settings(max_examples=100, deadline=None)
@given(colored_digraphs())
def test_reduction_banks_each_removed_vertex(graph):
    reduced = relevant_reduce(initial(graph))
    assert is_relevant(reduced)
    removed = graph.full_mask & ~reduced.alive
    assert reduced.credit_l == (removed & graph.left_mask).bit_count()
    assert reduced.credit_r == (removed & graph.right_mask).bit_count()
    assert relevant_reduce(reduced) == reduced


def test_raw_move_can_leave_forced_vertices():
    graph = read_graph(os.path.join(INSTANCES, 'forced_after_move.inf'))
    start = initial(graph)
    assert is_relevant(start)
    after = apply_move(start, 0, MoveMode.RAW)
    assert forced_sets(after) == (frozenset({1, 3}), frozenset())
    removal = rmv(start, 0)
    assert removal.kind is RemovalKind.WITH_FORCED
    assert removal.vertices == frozenset(graph.vertices)
    after = apply_move(start, 0)
    assert after.is_empty
    assert after.credit_l == 2


# Removal sets on segments

def _labels(graph: GameGraph, vertices) -> set:
    return {graph.labels[v] for v in vertices}


def test_interior_move_next_to_the_end_is_a_three_move():
    segment = make_segment(5, OddClass.MINUS)
    removal = rmv(initial(segment), segment.index_of(4))
    assert _labels(segment, removal.vertices) == {3, 4, 5}
    assert removal.by_player is Color.L


def test_move_leaving_a_segment_removes_three():
    segment = make_segment(5, OddClass.MINUS)
    after = apply_move(initial(segment), segment.index_of(2))
    assert _labels(segment, after.vertex_set()) == {4, 5}
    assert after.removed_by_moves() == 3


def test_central_move_on_plus_segment_is_a_five_move():
    segment = make_segment(5, OddClass.PLUS)
    assert segment.labels == (2, 3, 4, 5, 6)
    removal = rmv(initial(segment), segment.index_of(4))
    assert _labels(segment, removal.vertices) == {2, 3, 4, 5, 6}
    assert _labels(segment, iter_bits(removal.forced)) == {2, 6}
    after = apply_move(initial(segment), segment.index_of(4))
    assert after.credit_l == 2


@settings(max_examples=100, deadline=None)
@given(relevant_positions())
def test_removal_characterizations_agree(p):
    for v in p.alive_vertices():
        closure, forced_l, forced_r = removal_masks_of(p.base, p.alive, v)
        assert alternative_removal_mask_of(p.base, p.alive, v) == closure | forced_l | forced_r
        rmv(p, v, check=True)


@settings(max_examples=100, deadline=None)
@given(relevant_positions())
def test_forced_vertices_belong_to_the_mover(p):
    for v in p.alive_vertices():
        removal = rmv(p, v)
        mover_mask = p.base.color_mask(removal.by_player)
        assert removal.forced & ~mover_mask == 0
        child = apply_move(p, v)
        assert is_relevant(child)


@settings(max_examples=100, deadline=None)
@given(relevant_positions())
def test_removal_membership_is_symmetric(p):
    graph = p.base
    for x in iter_bits(p.alive & graph.left_mask):
        for y in iter_bits(p.alive & graph.right_mask):
            in_x = bool(rmv(p, x).mask >> y & 1)
            in_y = bool(rmv(p, y).mask >> x & 1)
            assert in_x == in_y


@settings(max_examples=100, deadline=None)
@given(relevant_positions())
def test_dominant_moves_keep_a_representative(p):
    for mover in Color:
        kept = dominant_moves(p, mover)
        candidates = list(iter_bits(p.alive_of(mover)))
        assert bool(kept) == bool(candidates)
        for w in candidates:
            assert any(rmv(p, v).mask >> w & 1 for v in kept)


@st.composite
def acyclic_relevant_positions(draw, max_n: int = 8) -> Position:
    n = draw(st.integers(min_value=1, max_value=max_n))
    colors = draw(st.lists(st.sampled_from(["L", "R"]), min_size=n, max_size=n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=2 * n)) if pairs else []
    return relevant_reduce(initial(build_graph(colors, arcs)))


def _sources_and_sinks_only(p: Position) -> bool:
    graph = p.base
    left_ok = all(graph.pred_masks[v] & p.alive == 0 for v in dominant_moves(p, Color.L))
    right_ok = all(graph.succ_masks[v] & p.alive == 0 for v in dominant_moves(p, Color.R))
    return left_ok and right_ok


@settings(max_examples=200, deadline=None)
@given(acyclic_relevant_positions())
def test_dominant_moves_on_acyclic_positions_are_sources_and_sinks(p):
    assert _sources_and_sinks_only(p)


def test_equal_removals_keep_the_sink():
    # Right moves 3, 4 and 6 all remove every vertex; only 6 is a sink.
    arcs = [(0, 3), (1, 3), (1, 7), (2, 3), (2, 4), (2, 5), (3, 4), (3, 6), (4, 6), (5, 6), (5, 7)]
    p = relevant_reduce(initial(build_graph(list("LLLRRRRR"), arcs)))
    kept = dominant_moves(p, Color.R)
    assert 3 not in kept and 4 not in kept
    assert _sources_and_sinks_only(p)


def test_example_dominant_left_move_is_u():
    p = relevant_reduce(initial(example()))
    assert dominant_moves(p, Color.L) == [0]


# Contract violations

def test_move_errors():
    start = initial(example())
    with pytest.raises(IllegalMoveError):
        apply_move(start, 1, MoveMode.RAW, mover=Color.L)
    with pytest.raises(ContractViolationError):
        rmv(start, 0)
    with pytest.raises(ContractViolationError):
        apply_move(start, 0)
    with pytest.raises(NoMoveError):
        apply_move(start.with_alive(0), 0, MoveMode.RAW)
    with pytest.raises(InvalidVertexError):
        apply_move(start.with_alive(mask_of([0, 2])), 4, MoveMode.RAW)


def main():
    """Run all tests"""
    print("🚀 Influence Graph Core Tests")
    print("=" * 40)
    return pytest.main([__file__, "-q"]) == 0


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
