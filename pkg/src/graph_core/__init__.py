#!/usr/bin/env python3
"""
Influence - Graph Core Package

Coloured directed graphs, positions, reachability closures, forced vertices,
removal sets, move application and the on-disk graph format.

Author: Influence Contributors
License: MIT
"""

from .errors import (
    AuditError,
    ContractViolationError,
    FamilyParameterError,
    GraphParseError,
    IllegalMoveError,
    InfluenceError,
    InvalidVertexError,
    NoMoveError,
    UnknownSuiteError,
)
from .graph import Color, GameGraph, build_graph, disjoint_sum, empty_graph, iter_bits, mask_of, negative, weak_components
from .position import Position, initial
from .closure import pred_closure, reachability_matrix, strong_components, succ_closure
from .moves import (
    MoveMode,
    RemovalKind,
    RemovalSet,
    apply_move,
    dominant_moves,
    forced_sets,
    is_relevant,
    legal_moves,
    relevant_reduce,
    rmv,
)
from .graph_doc import parse_graph, read_graph, serialize_graph, to_dot, write_graph

__all__ = [
    'AuditError', 'ContractViolationError', 'FamilyParameterError', 'GraphParseError',
    'IllegalMoveError', 'InfluenceError', 'InvalidVertexError', 'NoMoveError', 'UnknownSuiteError',
    'Color', 'GameGraph', 'build_graph', 'disjoint_sum', 'empty_graph', 'iter_bits', 'mask_of',
    'negative', 'weak_components',
    'Position', 'initial',
    'pred_closure', 'reachability_matrix', 'strong_components', 'succ_closure',
    'MoveMode', 'RemovalKind', 'RemovalSet', 'apply_move', 'dominant_moves', 'forced_sets',
    'is_relevant', 'legal_moves', 'relevant_reduce', 'rmv',
    'parse_graph', 'read_graph', 'serialize_graph', 'to_dot', 'write_graph',
]
