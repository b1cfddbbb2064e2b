#!/usr/bin/env python3
"""
Influence - Terminal Play

Human against the engine on a graph document. Play follows the plain rules:
a move takes the chosen vertex with its successor closure (Left) or
predecessor closure (Right), and a player without a vertex of their colour
waits while the opponent keeps moving. The engine answers with the solver's
best move, so replays of the same line are identical.

Author: Influence Contributors
License: MIT
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from graph_core.errors import InvalidVertexError
from graph_core.graph import Color, GameGraph, iter_bits
from graph_core.moves import MoveMode, apply_move, move_closure_of
from graph_core.position import Position, initial
from solver.engine import InfluenceSolver
from solver.options import SolveMode, SolveOptions

logger = logging.getLogger(__name__)

InputFn = Callable[[str], str]
OutputFn = Callable[[str], None]


@dataclass
class PlayResult:
    """
    Attributes:
        scores (Dict[Color, int]): vertices captured by each player
        moves (List[Tuple[Color, int]]): (player, label) in play order
        abandoned (bool): input ended before the game did
    """

    scores: Dict[Color, int] = field(default_factory=lambda: {Color.L: 0, Color.R: 0})
    moves: List[Tuple[Color, int]] = field(default_factory=list)
    abandoned: bool = False

    @property
    def margin(self) -> int:
        """Left's captures minus Right's."""
        return self.scores[Color.L] - self.scores[Color.R]

    @property
    def winner(self) -> Optional[Color]:
        if self.margin == 0:
            return None
        return Color.L if self.margin > 0 else Color.R


def _labels(graph: GameGraph, mask: int) -> str:
    return ", ".join(str(graph.labels[v]) for v in iter_bits(mask))


def _ask_move(p: Position, human: Color, input_fn: InputFn, output_fn: OutputFn) -> Optional[int]:
    """Prompt until a legal vertex is entered; None when input ends."""
    graph = p.base
    choices = p.alive_of(human)
    while True:
        try:
            answer = input_fn(f"{human.player_name} to move, choose one of [{_labels(graph, choices)}]: ")
        except EOFError:
            return None
        answer = answer.strip()
        try:
            v = graph.index_of(int(answer))
        except (ValueError, InvalidVertexError):
            output_fn(f"'{answer}' is not a vertex label")
            continue
        if not choices >> v & 1:
            output_fn(f"vertex {answer} is not an alive {human.value}-vertex")
            continue
        return v


def play_game(
    graph: GameGraph,
    human: Color,
    input_fn: InputFn = input,
    output_fn: OutputFn = print,
    first: Color = Color.L,
    solver: Optional[InfluenceSolver] = None,
) -> PlayResult:
    """
    Run one game in the terminal.

    Args:
        graph: the game graph
        human: colour played by the human; the engine plays the other one
        input_fn: reads a line after showing a prompt
        output_fn: writes one line
        first: player making the first move
        solver: engine solver; a raw-mode solver on ``graph`` by default

    Returns:
        PlayResult: captures, the move list and whether input ended early
    """
    human = Color(human)
    solver = solver or InfluenceSolver(graph, SolveOptions(mode=SolveMode.RAW))
    result = PlayResult()
    p = initial(graph)
    to_move = Color(first)

    if p.is_empty:
        output_fn("Game over: the graph has no vertex to play")
        return result

    while not p.is_empty:
        if not p.alive_of(to_move):
            output_fn(f"{to_move.player_name} has no vertex left and waits")
            to_move = to_move.opponent

        if to_move is human:
            v = _ask_move(p, human, input_fn, output_fn)
            if v is None:
                output_fn("Input ended, game abandoned")
                result.abandoned = True
                break
        else:
            v = solver.best_move(p, to_move).vertex

        captured = move_closure_of(graph, p.alive, v)
        result.scores[to_move] += captured.bit_count()
        result.moves.append((to_move, graph.labels[v]))
        output_fn(f"{to_move.player_name} plays {graph.labels[v]} and takes [{_labels(graph, captured)}]")
        logger.debug(f"🔍 {to_move.player_name} played {graph.labels[v]}, {p.size - captured.bit_count()} left")
        p = apply_move(p, v, MoveMode.RAW, mover=to_move)
        to_move = to_move.opponent

    left, right = result.scores[Color.L], result.scores[Color.R]
    output_fn(f"Final score: Left {left}, Right {right}")
    if result.abandoned:
        return result
    winner = result.winner
    output_fn("Draw" if winner is None else f"{winner.player_name} wins by {abs(result.margin)}")
    return result
