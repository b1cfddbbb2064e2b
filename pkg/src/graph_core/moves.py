#!/usr/bin/env python3
"""
Influence - Forced Vertices and Moves

Forced-vertex computation, relevant reduction, the removal set of a move in a
relevant position and move application in both raw and relevant semantics.

A vertex is forced when its closure never leaves its own colour: whatever
happens, its owner ends up with it. A relevant position has no forced vertex.
In a relevant position a move removes its closure together with the vertices
that the removal leaves forced; those are credited to their owner at once.

Author: Influence Contributors
License: MIT
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, List, Optional, Tuple

from .closure import closure_mask
from .errors import AuditError, ContractViolationError, IllegalMoveError, NoMoveError
from .graph import Color, GameGraph, iter_bits
from .position import Position

logger = logging.getLogger(__name__)


class MoveMode(str, Enum):
    """Game semantics: plain closures, or Rmv sets with forced credits."""

    RAW = "raw"
    RELEVANT = "relevant"


class RemovalKind(str, Enum):
    PLAIN = "plain"
    WITH_FORCED = "with-forced"


@dataclass(frozen=True)
class RemovalSet:
    """
    Vertices removed by one move.

    Attributes:
        vertices (FrozenSet[int]): every removed vertex
        by_player (Color): the player making the move
        kind (RemovalKind): plain closure, or closure plus newly forced vertices
        closure (int): bit set of the move's own closure
        forced (int): bit set of the vertices left forced by the removal
    """

    vertices: FrozenSet[int]
    by_player: Color
    kind: RemovalKind
    closure: int
    forced: int

    @property
    def mask(self) -> int:
        return self.closure | self.forced

    @property
    def size(self) -> int:
        return len(self.vertices)


# Bit-mask primitives shared with the solver's inner loop.

def forced_masks_of(graph: GameGraph, alive: int) -> Tuple[int, int]:
    """
    Forced Left and Right vertices of the alive subgraph.

    A Left vertex is forced exactly when it reaches no Right vertex, i.e. it
    lies outside the predecessor closure of the alive Right vertices.
    """
    left = alive & graph.left_mask
    right = alive & graph.right_mask
    reaches_right = closure_mask(graph.pred_masks, right, alive)
    reached_from_left = closure_mask(graph.succ_masks, left, alive)
    return left & ~reaches_right, right & ~reached_from_left


def move_closure_of(graph: GameGraph, alive: int, v: int) -> int:
    """Closure taken by playing ``v``: successors for Left, predecessors for Right."""
    adjacency = graph.succ_masks if graph.colors[v] is Color.L else graph.pred_masks
    return closure_mask(adjacency, 1 << v, alive)


def removal_masks_of(graph: GameGraph, alive: int, v: int) -> Tuple[int, int, int]:
    """
    Rmv of ``v`` in a relevant position as (closure, forced Left, forced Right).
    """
    closure = move_closure_of(graph, alive, v)
    forced_l, forced_r = forced_masks_of(graph, alive & ~closure)
    return closure, forced_l, forced_r


def alternative_removal_mask_of(graph: GameGraph, alive: int, v: int) -> int:
    """
    Rmv of ``v`` from the one-shot characterization: for a Left move, every
    vertex whose successors all lie in L or in the move's closure (the Right
    case mirrors it with predecessors).
    """
    closure = move_closure_of(graph, alive, v)
    if graph.colors[v] is Color.L:
        targets = alive & graph.right_mask & ~closure
        return alive & ~closure_mask(graph.pred_masks, targets, alive)
    targets = alive & graph.left_mask & ~closure
    return alive & ~closure_mask(graph.succ_masks, targets, alive)


def reduce_mask_of(graph: GameGraph, alive: int) -> Tuple[int, int, int]:
    """Iterated forced removal as (remaining alive, Left credit, Right credit)."""
    gained_l = gained_r = 0
    while True:
        forced_l, forced_r = forced_masks_of(graph, alive)
        if not forced_l and not forced_r:
            return alive, gained_l, gained_r
        gained_l += forced_l.bit_count()
        gained_r += forced_r.bit_count()
        alive &= ~(forced_l | forced_r)


# Position-level operations

def forced_sets(p: Position) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Forced Left and Right vertices of the position, as vertex sets."""
    forced_l, forced_r = forced_masks_of(p.base, p.alive)
    return frozenset(iter_bits(forced_l)), frozenset(iter_bits(forced_r))


def is_relevant(p: Position) -> bool:
    forced_l, forced_r = forced_masks_of(p.base, p.alive)
    return not forced_l and not forced_r


def require_relevant(p: Position, operation: str) -> None:
    if not is_relevant(p):
        raise ContractViolationError(f"{operation} requires a relevant position")


def relevant_reduce(p: Position) -> Position:
    """
    Remove forced vertices until none is left, banking each one with its owner.

    Idempotent; credits grow by exactly the number of removed vertices of each
    colour.
    """
    alive, gained_l, gained_r = reduce_mask_of(p.base, p.alive)
    if alive == p.alive:
        return p
    logger.debug(f"🔍 Reduced position: banked {gained_l} Left / {gained_r} Right forced vertices")
    return p.with_alive(alive, gained_l, gained_r)


def legal_moves(p: Position, mover: Color) -> List[int]:
    return list(iter_bits(p.alive_of(mover)))


def rmv(p: Position, v: int, check: bool = False) -> RemovalSet:
    """
    Removal set of playing ``v`` in a relevant position.

    Args:
        p: relevant position
        v: alive vertex; its colour decides the mover
        check: also compute the one-shot characterization and compare

    Returns:
        RemovalSet: closure of ``v`` plus the vertices its removal leaves forced

    Raises:
        InvalidVertexError: if ``v`` is not alive
        ContractViolationError: if ``p`` has forced vertices
        AuditError: if ``check`` is set and the two characterizations differ
    """
    p.require_alive(v)
    require_relevant(p, "rmv")
    closure, forced_l, forced_r = removal_masks_of(p.base, p.alive, v)
    mover = p.base.colors[v]
    forced = forced_l | forced_r
    if check:
        alternative = alternative_removal_mask_of(p.base, p.alive, v)
        if alternative != closure | forced:
            raise AuditError(
                f"removal sets disagree for vertex {v}: "
                f"{sorted(iter_bits(closure | forced))} vs {sorted(iter_bits(alternative))}"
            )
    return RemovalSet(
        vertices=frozenset(iter_bits(closure | forced)),
        by_player=mover,
        kind=RemovalKind.WITH_FORCED if forced else RemovalKind.PLAIN,
        closure=closure,
        forced=forced,
    )


def apply_move(
    p: Position,
    v: int,
    mode: MoveMode = MoveMode.RELEVANT,
    mover: Optional[Color] = None,
) -> Position:
    """
    Play ``v`` and return the resulting position.

    Raw mode removes the plain closure. Relevant mode removes Rmv and credits
    every newly forced vertex to its owner.

    Raises:
        NoMoveError: if the position is empty
        IllegalMoveError: if ``v`` does not belong to ``mover``
        ContractViolationError: relevant mode on a non-relevant position
        AuditError: if a move leaves forced vertices of the opponent's colour
    """
    if p.is_empty:
        raise NoMoveError("no legal vertex: the position is empty")
    p.require_alive(v)
    color = p.base.colors[v]
    if mover is not None and color is not mover:
        raise IllegalMoveError(f"{mover.player_name} cannot play {color.value}-vertex {v}")

    if MoveMode(mode) is MoveMode.RAW:
        closure = move_closure_of(p.base, p.alive, v)
        return p.with_alive(p.alive & ~closure)

    require_relevant(p, "apply_move")
    closure, forced_l, forced_r = removal_masks_of(p.base, p.alive, v)
    stray = forced_r if color is Color.L else forced_l
    if stray:
        raise AuditError(
            f"{color.player_name} move {v} left forced vertices of the opponent: {sorted(iter_bits(stray))}"
        )
    return p.with_alive(
        p.alive & ~(closure | forced_l | forced_r),
        forced_l.bit_count(),
        forced_r.bit_count(),
    )


def dominant_moves_of(graph: GameGraph, alive: int, mover: Color) -> List[Tuple[int, int]]:
    """
    Undominated moves of ``mover`` as (vertex, Rmv mask), larger Rmv first.

    A move ``w`` is dropped when another move ``v`` removes it. When two moves
    remove each other their Rmv sets coincide; the one with the larger plain
    closure is kept, so on acyclic positions the survivor is a source (Left)
    or a sink (Right). Equal closures fall back to the lower id.
    """
    candidates = []
    for v in iter_bits(alive & graph.color_mask(mover)):
        closure, forced_l, forced_r = removal_masks_of(graph, alive, v)
        candidates.append((v, closure | forced_l | forced_r, (-closure.bit_count(), v)))

    kept = []
    for w, w_mask, w_rank in candidates:
        dominated = False
        for v, v_mask, v_rank in candidates:
            if v != w and v_mask >> w & 1 and (not w_mask >> v & 1 or v_rank < w_rank):
                dominated = True
                break
        if not dominated:
            kept.append((w, w_mask))
    kept.sort(key=lambda item: (-item[1].bit_count(), item[0]))
    return kept


def dominant_moves(p: Position, mover: Color) -> List[int]:
    """
    Moves of ``mover`` that are not dominated by another move of the same player.

    The result always contains an optimal move; it is empty only when the
    mover has no alive vertex.
    """
    require_relevant(p, "dominant_moves")
    return [v for v, _ in dominant_moves_of(p.base, p.alive, mover)]
