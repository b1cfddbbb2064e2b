#!/usr/bin/env python3
"""
Influence - Command Line Package

Author: Influence Contributors
License: MIT
"""

from .commands import EXIT_CLAIM_FAILURE, EXIT_OK, EXIT_USAGE, build_parser, main, solve_result
from .play import PlayResult, play_game

__all__ = [
    'EXIT_CLAIM_FAILURE', 'EXIT_OK', 'EXIT_USAGE', 'build_parser', 'main', 'solve_result',
    'PlayResult', 'play_game',
]
