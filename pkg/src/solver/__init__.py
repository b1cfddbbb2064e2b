#!/usr/bin/env python3
"""
Influence - Solver Package

Exact absolute and relative scores, incentives and optimal moves.

Author: Influence Contributors
License: MIT
"""

from .scores import ZERO, RelScores, ScoreQuad
from .options import SolveMode, SolveOptions
from .memo import MemoTable
from .engine import InfluenceSolver, MoveChoice, best_move, incentive, rel_scores, rel_scores_direct, solve
from .milnor import milnor_bounds_check

__all__ = [
    'ZERO', 'RelScores', 'ScoreQuad',
    'SolveMode', 'SolveOptions',
    'MemoTable',
    'InfluenceSolver', 'MoveChoice', 'best_move', 'incentive', 'rel_scores', 'rel_scores_direct', 'solve',
    'milnor_bounds_check',
]
