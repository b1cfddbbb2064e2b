#!/usr/bin/env python3
"""
Influence - Oriented Trees

T(n, c) is an out-tree of Left vertices on levels 0..n in which every vertex
above level n has three children, and every vertex of level n carries c Right
leaves. J(n, c) is the sum of two copies.

Playing a leaf as Right takes the whole path up to the root, the other c-1
leaves of the same parent become forced Right vertices, and the two sibling
subtrees hanging off each path vertex remain: the sum J(0, c) + ... + J(n-1, c).

Author: Influence Contributors
License: MIT
"""

from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from graph_core.errors import FamilyParameterError
from graph_core.graph import Color, GameGraph, disjoint_sum

BRANCHING = 3


@dataclass(frozen=True)
class TreeSpec:
    """
    Attributes:
        depth (int): index n of the last Left level
        fanout (int): Right leaves under each last-level vertex
    """

    depth: int
    fanout: int

    def __post_init__(self) -> None:
        if self.depth < 0 or self.fanout < 1:
            raise FamilyParameterError(f"tree needs depth >= 0 and fanout >= 1, got {self}")

    @property
    def left_count(self) -> int:
        return (BRANCHING ** (self.depth + 1) - 1) // 2

    @property
    def leaf_count(self) -> int:
        return self.fanout * BRANCHING ** self.depth

    @property
    def size(self) -> int:
        return self.left_count + self.leaf_count

    def bound(self) -> int:
        """Upper bound on Right's first-player score in J(n, c)."""
        return 2 ** self.depth * (self.depth + self.fanout) + 1


def make_tree(spec: TreeSpec) -> GameGraph:
    """T(n, c) with vertices numbered level by level, root first."""
    colors: List[Color] = [Color.L]
    arcs = []
    level = [0]
    for depth in range(spec.depth):
        following = []
        for parent in level:
            for _ in range(BRANCHING):
                child = len(colors)
                colors.append(Color.L)
                arcs.append((parent, child))
                following.append(child)
        level = following
    for parent in level:
        for _ in range(spec.fanout):
            arcs.append((parent, len(colors)))
            colors.append(Color.R)
    return GameGraph(colors=tuple(colors), arcs=tuple(arcs))


def make_J(spec: TreeSpec) -> GameGraph:
    tree = make_tree(spec)
    return disjoint_sum(tree, tree)


def forest_below(spec: TreeSpec) -> GameGraph:
    """J(0, c) + ... + J(n-1, c), what a leaf move leaves of T(n, c)."""
    forest = GameGraph(colors=())
    for depth in range(spec.depth):
        forest = disjoint_sum(forest, make_J(TreeSpec(depth, spec.fanout)))
    return forest


def ratio_table(depths: Sequence[int], fanouts: Sequence[int]) -> np.ndarray:
    """
    Rows (n, c, |L(J)|/|V(J)|, lower bound on Left's second-player share) of
    the doubled trees J(n, c), from the closed forms alone.
    """
    n = np.repeat(np.asarray(depths, dtype=float), len(fanouts))
    c = np.tile(np.asarray(fanouts, dtype=float), len(depths))
    left = 3.0 ** (n + 1) - 1
    size = left + 2 * c * 3.0 ** n
    share_bound = 1 - (2.0 ** n * (n + c) + 1) / size
    return np.column_stack([n, c, left / size, share_bound])
