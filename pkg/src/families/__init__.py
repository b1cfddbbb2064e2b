#!/usr/bin/env python3
"""
Influence - Instance Families Package

Generators for segments, cycles, oriented trees, quasi-paths and random
graphs, the symbolic solver for segment sums, and score-sequence tools.

Author: Influence Contributors
License: MIT
"""

from .segments import (
    MoveClass,
    MoveKind,
    OddClass,
    SegmentConfig,
    SegmentDescriptor,
    SegmentMove,
    classify_move,
    make_segment,
    materialize,
    recognize_segments,
)
from .segment_solver import SegmentSumSolver, TableRow, segment_table, single_segment, solve_segment_config
from .cycles import cycle_left_score_from_segment, make_cycle
from .trees import TreeSpec, forest_below, make_J, make_tree, ratio_table
from .quasi_paths import QuasiPathSpec, make_quasi_path, random_collection, random_quasi_path
from .random_graphs import random_dag, random_digraph, random_relevant_graph
from .sequences import detect_period, survey_conjectures, ultimate_period

__all__ = [
    'MoveClass', 'MoveKind', 'OddClass', 'SegmentConfig', 'SegmentDescriptor', 'SegmentMove',
    'classify_move', 'make_segment', 'materialize', 'recognize_segments',
    'SegmentSumSolver', 'TableRow', 'segment_table', 'single_segment', 'solve_segment_config',
    'cycle_left_score_from_segment', 'make_cycle',
    'TreeSpec', 'forest_below', 'make_J', 'make_tree', 'ratio_table',
    'QuasiPathSpec', 'make_quasi_path', 'random_collection', 'random_quasi_path',
    'random_dag', 'random_digraph', 'random_relevant_graph',
    'detect_period', 'survey_conjectures', 'ultimate_period',
]
