#!/usr/bin/env python3
"""
Influence - Alternated Cycles

An alternated cycle is an even segment closed by one more arc from its Left
endpoint to its Right endpoint. Every first move of Left removes three
vertices and leaves an odd segment with Left endpoints, so

    Ls(C_n) = 3 + Rs(S_{n-3}, plus)

where the smallest cycle leaves a single forced Left vertex.

Author: Influence Contributors
License: MIT
"""

from typing import Optional

from graph_core.errors import FamilyParameterError
from graph_core.graph import Color, GameGraph

from .segment_solver import SegmentSumSolver, single_segment
from .segments import OddClass, make_segment


def make_cycle(n: int, start: int = 1) -> GameGraph:
    """
    Alternated cycle on the labels ``start .. start+n-1``.

    Raises:
        FamilyParameterError: if ``n`` is odd or smaller than 4
    """
    if n % 2 or n < 4:
        raise FamilyParameterError(f"alternated cycles have an even size of at least 4, got {n}")
    path = make_segment(n, OddClass.NONE, start=start)
    left_end = 0 if path.colors[0] is Color.L else n - 1
    right_end = n - 1 - left_end
    return GameGraph(
        colors=path.colors,
        arcs=path.arcs + ((left_end, right_end),),
        labels=path.labels,
    )


def cycle_left_score_from_segment(n: int, solver: Optional[SegmentSumSolver] = None) -> int:
    """Ls of the n-cycle obtained from the segment left after Left's first move."""
    if n % 2 or n < 4:
        raise FamilyParameterError(f"alternated cycles have an even size of at least 4, got {n}")
    solver = solver or SegmentSumSolver()
    return 3 + solver.rel_scores(single_segment(n - 3, OddClass.PLUS)).rs
