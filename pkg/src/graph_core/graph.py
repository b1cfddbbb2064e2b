#!/usr/bin/env python3
"""
Influence - Game Graph

Immutable black/white directed graph the game is played on. Vertices are the
dense ids 0..n-1; each vertex carries a colour (L for Left, R for Right) and a
user-facing label (the id used in graph documents and output). Adjacency is
precomputed as integer bit masks so that every position of the game can be
described by the bit set of its alive vertices.

Author: Influence Contributors
License: MIT
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from .errors import InvalidVertexError


class Color(str, Enum):
    """Vertex colour, which is also the name of the player owning it."""

    L = "L"
    R = "R"

    @property
    def opponent(self) -> "Color":
        return Color.R if self is Color.L else Color.L

    @property
    def player_name(self) -> str:
        return "Left" if self is Color.L else "Right"


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the vertex ids set in a bit mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Bit mask holding the given vertex ids."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class GameGraph:
    """
    Coloured directed graph of a game of INFLUENCE.

    Attributes:
        colors (Tuple[Color, ...]): colour of each dense vertex id
        arcs (Tuple[Tuple[int, int], ...]): sorted, duplicate-free arc list
        labels (Tuple[int, ...]): strictly increasing user-facing vertex labels

    Raises:
        ValueError: on self-loops, duplicate arcs, out-of-range ids or
            non-increasing labels
    """

    colors: Tuple[Color, ...]
    arcs: Tuple[Tuple[int, int], ...] = ()
    labels: Tuple[int, ...] = ()
    succ_masks: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    pred_masks: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    left_mask: int = field(init=False, repr=False, compare=False)
    right_mask: int = field(init=False, repr=False, compare=False)
    full_mask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.colors)
        colors = tuple(Color(c) for c in self.colors)
        labels = tuple(self.labels) if self.labels else tuple(range(n))
        arcs = tuple(sorted({(int(a), int(b)) for a, b in self.arcs}))

        if len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        if any(b <= a for a, b in zip(labels, labels[1:])):
            raise ValueError("vertex labels must be strictly increasing")
        if len(arcs) != len(self.arcs):
            raise ValueError("duplicate arcs")

        succ = [0] * n
        pred = [0] * n
        for a, b in arcs:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"arc ({a}, {b}) references a vertex outside 0..{n - 1}")
            if a == b:
                raise ValueError(f"self-loop on vertex {a}")
            succ[a] |= 1 << b
            pred[b] |= 1 << a

        left = mask_of(v for v in range(n) if colors[v] is Color.L)
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "succ_masks", tuple(succ))
        object.__setattr__(self, "pred_masks", tuple(pred))
        object.__setattr__(self, "left_mask", left)
        object.__setattr__(self, "full_mask", (1 << n) - 1)
        object.__setattr__(self, "right_mask", ((1 << n) - 1) & ~left)

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def color(self, v: int) -> Color:
        self._check(v)
        return self.colors[v]

    def color_mask(self, color: Color) -> int:
        return self.left_mask if color is Color.L else self.right_mask

    def label(self, v: int) -> int:
        self._check(v)
        return self.labels[v]

    def index_of(self, label: int) -> int:
        """Dense id of a user-facing label."""
        index = self._label_index().get(label)
        if index is None:
            raise InvalidVertexError(f"no vertex labelled {label}")
        return index

    def vertices_of(self, mask: int) -> FrozenSet[int]:
        return frozenset(iter_bits(mask & self.full_mask))

    def labels_of(self, vertices: Iterable[int]) -> List[int]:
        return sorted(self.labels[v] for v in vertices)

    def adjacency_matrix(self) -> np.ndarray:
        """Boolean adjacency matrix, row = tail, column = head."""
        matrix = np.zeros((self.n, self.n), dtype=bool)
        for a, b in self.arcs:
            matrix[a, b] = True
        return matrix

    def to_networkx(self) -> nx.DiGraph:
        """DiGraph keyed by dense id with ``color`` and ``label`` node attributes."""
        graph = nx.DiGraph()
        for v in self.vertices:
            graph.add_node(v, color=self.colors[v].value, label=self.labels[v])
        graph.add_edges_from(self.arcs)
        return graph

    def induced(self, mask: int) -> Tuple["GameGraph", List[int]]:
        """
        Induced subgraph on the vertices of ``mask``, re-densified.

        Returns:
            Tuple[GameGraph, List[int]]: the subgraph and, for each of its
            dense ids, the id it had in this graph
        """
        kept = [v for v in self.vertices if mask >> v & 1]
        index = {v: i for i, v in enumerate(kept)}
        arcs = [(index[a], index[b]) for a, b in self.arcs if a in index and b in index]
        sub = GameGraph(
            colors=tuple(self.colors[v] for v in kept),
            arcs=tuple(arcs),
            labels=tuple(self.labels[v] for v in kept),
        )
        return sub, kept

    def _label_index(self) -> Dict[int, int]:
        cache = self.__dict__.get("_label_cache")
        if cache is None:
            cache = {label: i for i, label in enumerate(self.labels)}
            object.__setattr__(self, "_label_cache", cache)
        return cache

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v} outside 0..{self.n - 1}")


def build_graph(
    colors: Sequence[str],
    arcs: Iterable[Tuple[int, int]],
    labels: Optional[Sequence[int]] = None,
) -> GameGraph:
    """Convenience constructor accepting plain 'L'/'R' strings."""
    return GameGraph(
        colors=tuple(Color(c) for c in colors),
        arcs=tuple(arcs),
        labels=tuple(labels) if labels is not None else (),
    )


def empty_graph() -> GameGraph:
    return GameGraph(colors=())


def negative(graph: GameGraph) -> GameGraph:
    """The negative game: colours swapped and every arc reversed."""
    return GameGraph(
        colors=tuple(c.opponent for c in graph.colors),
        arcs=tuple((b, a) for a, b in graph.arcs),
        labels=graph.labels,
    )


def disjoint_sum(first: GameGraph, second: GameGraph) -> GameGraph:
    """
    Sum of two games: disjoint union, the second graph's ids shifted by
    ``first.n``. Labels of the second operand are shifted past the first
    operand's labels when the two ranges would interleave.
    """
    if first.n == 0:
        return second
    if second.n == 0:
        return first
    shift = 0
    if second.labels[0] <= first.labels[-1]:
        shift = first.labels[-1] + 1 - second.labels[0]
    offset = first.n
    return GameGraph(
        colors=first.colors + second.colors,
        arcs=first.arcs + tuple((a + offset, b + offset) for a, b in second.arcs),
        labels=first.labels + tuple(label + shift for label in second.labels),
    )


def weak_components(graph: GameGraph) -> List[GameGraph]:
    """Weakly connected components as standalone graphs, ordered by lowest id."""
    components = nx.weakly_connected_components(graph.to_networkx())
    ordered = sorted((sorted(c) for c in components), key=lambda c: c[0])
    return [graph.induced(mask_of(c))[0] for c in ordered]
