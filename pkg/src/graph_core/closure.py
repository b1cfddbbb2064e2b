#!/usr/bin/env python3
"""
Influence - Reachability Closures

Successor and predecessor closures restricted to the alive vertices of a
position. Closures are inclusive: a vertex always belongs to its own closure.
The worklist runs over bit masks, so no recursion is involved.

Author: Influence Contributors
License: MIT
"""

from typing import FrozenSet, List, Sequence

import networkx as nx
import numpy as np

from .graph import iter_bits
from .position import Position


def closure_mask(adjacency: Sequence[int], start: int, alive: int) -> int:
    """
    Fixpoint of ``start`` under the adjacency masks, restricted to ``alive``.

    Args:
        adjacency: per-vertex successor (or predecessor) masks
        start: bit set of starting vertices, must be a subset of ``alive``
        alive: bit set the walk is confined to

    Returns:
        int: bit set of every vertex reachable from ``start``, ``start`` included
    """
    reached = start & alive
    frontier = reached
    while frontier:
        grown = 0
        for v in iter_bits(frontier):
            grown |= adjacency[v]
        frontier = grown & alive & ~reached
        reached |= frontier
    return reached


def succ_mask(p: Position, v: int) -> int:
    p.require_alive(v)
    return closure_mask(p.base.succ_masks, 1 << v, p.alive)


def pred_mask(p: Position, v: int) -> int:
    p.require_alive(v)
    return closure_mask(p.base.pred_masks, 1 << v, p.alive)


def succ_closure(p: Position, v: int) -> FrozenSet[int]:
    """Vertices reachable from ``v`` through alive vertices, ``v`` included."""
    return frozenset(iter_bits(succ_mask(p, v)))


def pred_closure(p: Position, v: int) -> FrozenSet[int]:
    """Vertices that reach ``v`` through alive vertices, ``v`` included."""
    return frozenset(iter_bits(pred_mask(p, v)))


def strong_components(p: Position) -> List[FrozenSet[int]]:
    """
    Strongly connected components of the alive subgraph, lowest id first.

    Any closure containing one vertex of a component contains all of it, so
    playing a vertex always takes its whole component.
    """
    graph = p.base.to_networkx().subgraph(p.alive_vertices())
    components = [frozenset(c) for c in nx.strongly_connected_components(graph)]
    return sorted(components, key=min)


def reachability_matrix(p: Position) -> np.ndarray:
    """
    Inclusive reachability of the alive subgraph as a boolean matrix.

    Computed by repeated boolean squaring of the adjacency matrix, which is
    independent of the worklist above and used as a test oracle.
    """
    alive = p.alive_vertices()
    matrix = p.base.adjacency_matrix()[np.ix_(alive, alive)]
    reach = matrix | np.eye(len(alive), dtype=bool)
    while True:
        squared = (reach.astype(np.int64) @ reach.astype(np.int64)) > 0
        if np.array_equal(squared, reach):
            return reach
        reach = squared
