#!/usr/bin/env python3
"""
Influence - Positions

A position is the base graph plus the bit set of vertices still alive, along
with the vertex counts already banked by each player from forced removals.
Every reachable subposition of a game is an induced subgraph of the original
graph, so the alive bit set alone identifies it.

Author: Influence Contributors
License: MIT
"""

from dataclasses import dataclass, replace
from typing import FrozenSet, List

from .errors import InvalidVertexError
from .graph import Color, GameGraph, iter_bits


@dataclass(frozen=True)
class Position:
    """
    Live subposition of a game.

    Attributes:
        base (GameGraph): the original graph
        alive (int): bit set of alive vertex ids
        credit_l (int): vertices already banked by Left through forced removals
        credit_r (int): vertices already banked by Right through forced removals
    """

    base: GameGraph
    alive: int
    credit_l: int = 0
    credit_r: int = 0

    def __post_init__(self) -> None:
        if self.alive & ~self.base.full_mask:
            raise InvalidVertexError("alive set contains vertices outside the base graph")
        if self.credit_l < 0 or self.credit_r < 0:
            raise ValueError("credits must be non-negative")

    @property
    def size(self) -> int:
        return self.alive.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.alive == 0

    @property
    def left_alive(self) -> int:
        return self.alive & self.base.left_mask

    @property
    def right_alive(self) -> int:
        return self.alive & self.base.right_mask

    def alive_of(self, color: Color) -> int:
        return self.alive & self.base.color_mask(color)

    def alive_vertices(self) -> List[int]:
        return list(iter_bits(self.alive))

    def vertex_set(self) -> FrozenSet[int]:
        return frozenset(iter_bits(self.alive))

    def is_alive(self, v: int) -> bool:
        return 0 <= v < self.base.n and bool(self.alive >> v & 1)

    def require_alive(self, v: int) -> None:
        if not self.is_alive(v):
            raise InvalidVertexError(f"vertex {v} is not alive in this position")

    def removed_by_moves(self) -> int:
        """Vertices taken by actual moves, i.e. neither alive nor credited."""
        return self.base.n - self.size - self.credit_l - self.credit_r

    def with_alive(self, alive: int, extra_l: int = 0, extra_r: int = 0) -> "Position":
        return replace(
            self,
            alive=alive,
            credit_l=self.credit_l + extra_l,
            credit_r=self.credit_r + extra_r,
        )

    def as_graph(self) -> GameGraph:
        """The induced subgraph on the alive vertices, as a standalone graph."""
        return self.base.induced(self.alive)[0]


def initial(graph: GameGraph) -> Position:
    """Starting position: every vertex alive, nothing banked."""
    return Position(base=graph, alive=graph.full_mask)
