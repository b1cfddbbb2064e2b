#!/usr/bin/env python3
"""
Influence - Segments

Alternated directed paths and their sums. A segment is a path on consecutive
integers where even labels are Left, odd labels are Right and every arc goes
from an even label to an adjacent odd one. Up to mirroring a segment is fixed
by its length and, for odd lengths, by the colour of its endpoints:

    even length  -> one Left and one Right endpoint
    odd, minus   -> both endpoints Right (one more Right vertex)
    odd, plus    -> both endpoints Left (one more Left vertex)

A sum of segments is described symbolically by a SegmentConfig, the multiset
of its segment descriptors.

Author: Influence Contributors
License: MIT
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, List, Optional, Tuple

import networkx as nx

from graph_core.errors import FamilyParameterError
from graph_core.graph import Color, GameGraph, disjoint_sum, empty_graph, mask_of


class OddClass(str, Enum):
    NONE = "none"
    MINUS = "minus"
    PLUS = "plus"

    @property
    def sign(self) -> int:
        return {OddClass.NONE: 0, OddClass.MINUS: -1, OddClass.PLUS: 1}[self]

    @classmethod
    def from_sign(cls, sign: int) -> "OddClass":
        return {0: cls.NONE, -1: cls.MINUS, 1: cls.PLUS}[sign]

    @property
    def opposite(self) -> "OddClass":
        return OddClass.from_sign(-self.sign)


@dataclass(frozen=True, order=True)
class SegmentDescriptor:
    """
    One segment of a sum.

    Attributes:
        length (int): number of vertices, at least 1
        odd_class (OddClass): NONE exactly when the length is even
    """

    length: int
    odd_class: OddClass = OddClass.NONE

    def __post_init__(self) -> None:
        object.__setattr__(self, "odd_class", OddClass(self.odd_class))
        if self.length < 1:
            raise FamilyParameterError(f"segment length must be positive, got {self.length}")
        if (self.length % 2 == 0) != (self.odd_class is OddClass.NONE):
            raise FamilyParameterError(
                f"class {self.odd_class.value} is inconsistent with length {self.length}"
            )

    @classmethod
    def of(cls, length: int, odd_class: Optional[OddClass] = None) -> "SegmentDescriptor":
        """Descriptor with the odd class defaulting to NONE or MINUS by parity."""
        if odd_class is None:
            odd_class = OddClass.NONE if length % 2 == 0 else OddClass.MINUS
        return cls(length, OddClass(odd_class))

    @property
    def key(self) -> Tuple[int, int]:
        return self.length, self.odd_class.sign

    @property
    def first_color(self) -> Color:
        """Colour of the first vertex; even segments are read from their Left end."""
        return Color.R if self.odd_class is OddClass.MINUS else Color.L

    @property
    def left_count(self) -> int:
        return (self.length + self.odd_class.sign) // 2

    @property
    def right_count(self) -> int:
        return self.length - self.left_count

    def negative(self) -> "SegmentDescriptor":
        return SegmentDescriptor(self.length, self.odd_class.opposite)

    def describe(self) -> str:
        suffix = {OddClass.NONE: "", OddClass.MINUS: "-", OddClass.PLUS: "+"}[self.odd_class]
        return f"S{self.length}{suffix}"


@dataclass(frozen=True)
class SegmentConfig:
    """
    Sum of segments, kept in canonical sorted order.

    Attributes:
        segments (Tuple[SegmentDescriptor, ...]): the descriptors, sorted
    """

    segments: Tuple[SegmentDescriptor, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "segments", tuple(sorted(self.segments)))

    @classmethod
    def of(cls, *items: object) -> "SegmentConfig":
        """Build from descriptors, bare lengths, or (length, class) pairs."""
        descriptors = []
        for item in items:
            if isinstance(item, SegmentDescriptor):
                descriptors.append(item)
            elif isinstance(item, tuple):
                descriptors.append(SegmentDescriptor.of(item[0], OddClass(item[1])))
            else:
                descriptors.append(SegmentDescriptor.of(int(item)))
        return cls(tuple(descriptors))

    @classmethod
    def from_key(cls, key: Iterable[Tuple[int, int]]) -> "SegmentConfig":
        return cls(tuple(SegmentDescriptor(length, OddClass.from_sign(sign)) for length, sign in key))

    @property
    def key(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(s.key for s in self.segments)

    @property
    def total(self) -> int:
        return sum(s.length for s in self.segments)

    @property
    def left_count(self) -> int:
        return sum(s.left_count for s in self.segments)

    @property
    def right_count(self) -> int:
        return self.total - self.left_count

    @property
    def odd_segments(self) -> List[SegmentDescriptor]:
        return [s for s in self.segments if s.odd_class is not OddClass.NONE]

    def class_label(self) -> Optional[str]:
        """'=', '+' or '-' for the three classes with at most one odd segment."""
        odd = self.odd_segments
        if not odd:
            return "="
        if len(odd) == 1:
            return "+" if odd[0].odd_class is OddClass.PLUS else "-"
        return None

    def negative(self) -> "SegmentConfig":
        return SegmentConfig(tuple(s.negative() for s in self.segments))

    def plus(self, other: "SegmentConfig") -> "SegmentConfig":
        return SegmentConfig(self.segments + other.segments)

    def describe(self) -> str:
        return " + ".join(s.describe() for s in self.segments) or "0"


def make_segment(
    n: int,
    odd_class: Optional[OddClass] = None,
    start: Optional[int] = None,
    allow_unit: bool = False,
) -> GameGraph:
    """
    Segment on the consecutive labels ``start .. start+n-1``.

    Args:
        n: number of vertices
        odd_class: endpoint class for odd ``n`` (MINUS by default); NONE for even ``n``
        start: first label; defaults to 1 for minus and even segments, 2 for plus
        allow_unit: admit the single-vertex segment used by score tables

    Raises:
        FamilyParameterError: on a class/parity mismatch, a start label of the
            wrong parity, or ``n`` below 2 without ``allow_unit``
    """
    if n < 1 or (n == 1 and not allow_unit):
        raise FamilyParameterError(f"a segment needs at least 2 vertices, got {n}")
    descriptor = SegmentDescriptor.of(n, odd_class)
    if start is None:
        start = 2 if descriptor.odd_class is OddClass.PLUS else 1
    if descriptor.odd_class is OddClass.MINUS and start % 2 == 0:
        raise FamilyParameterError("a minus segment must start on an odd (Right) label")
    if descriptor.odd_class is OddClass.PLUS and start % 2 == 1:
        raise FamilyParameterError("a plus segment must start on an even (Left) label")
    if start < 0:
        raise FamilyParameterError("labels must be non-negative")

    labels = list(range(start, start + n))
    colors = tuple(Color.L if label % 2 == 0 else Color.R for label in labels)
    arcs = []
    for i, label in enumerate(labels):
        if label % 2:
            continue
        if i > 0:
            arcs.append((i, i - 1))
        if i < n - 1:
            arcs.append((i, i + 1))
    return GameGraph(colors=colors, arcs=tuple(arcs), labels=tuple(labels))


def materialize(config: SegmentConfig) -> GameGraph:
    """
    Graph of a segment sum. Segments sit on consecutive label ranges separated
    by one unused label; even segments take whichever orientation fits.
    """
    graph = empty_graph()
    cursor = 1
    for s in config.segments:
        start = cursor
        if s.odd_class is OddClass.MINUS and start % 2 == 0:
            start += 1
        elif s.odd_class is OddClass.PLUS and start % 2 == 1:
            start += 1
        graph = disjoint_sum(graph, make_segment(s.length, s.odd_class, start=start, allow_unit=True))
        cursor = start + s.length + 1
    return graph


def _component_descriptor(graph: GameGraph, nodes: List[int], undirected: nx.Graph) -> Optional[SegmentDescriptor]:
    if len(nodes) < 2:
        return None
    degrees = [undirected.degree(v) for v in nodes]
    if max(degrees) > 2 or undirected.number_of_edges() != len(nodes) - 1:
        return None
    ends = [v for v, d in zip(nodes, degrees) if d == 1]
    order = [ends[0]]
    previous = None
    while len(order) < len(nodes):
        following = [w for w in undirected.neighbors(order[-1]) if w != previous]
        previous = order[-1]
        order.append(following[0])
    colors = [graph.colors[v] for v in order]
    if any(a is b for a, b in zip(colors, colors[1:])):
        return None
    if len(order) % 2 == 0:
        return SegmentDescriptor(len(order), OddClass.NONE)
    return SegmentDescriptor(len(order), OddClass.PLUS if colors[0] is Color.L else OddClass.MINUS)


def recognize_segments(graph: GameGraph, alive: Optional[int] = None) -> Optional[SegmentConfig]:
    """
    SegmentConfig of the alive subgraph, or None when it is not a segment sum.

    Each weakly connected component must be a path whose colours alternate and
    whose arcs all go from the Left end to the Right end of their edge.
    """
    alive = graph.full_mask if alive is None else alive
    if not alive:
        return None
    for a, b in graph.arcs:
        if alive >> a & 1 and alive >> b & 1:
            if graph.colors[a] is not Color.L or graph.colors[b] is not Color.R:
                return None
    digraph = graph.to_networkx().subgraph([v for v in graph.vertices if alive >> v & 1])
    descriptors = []
    for component in nx.weakly_connected_components(digraph):
        nodes = sorted(component)
        undirected = digraph.subgraph(nodes).to_undirected(as_view=True)
        descriptor = _component_descriptor(graph, nodes, undirected)
        if descriptor is None:
            return None
        descriptors.append(descriptor)
    return SegmentConfig(tuple(descriptors))


# Move taxonomy

class MoveKind(str, Enum):
    BORDER = "border"
    CUTTING = "cutting"


@dataclass(frozen=True)
class MoveClass:
    """
    Size and kind of a move in a segment sum.

    Attributes:
        k (int): vertices removed, forced ones included
        kind (MoveKind): cutting when the move splits a segment into two segments
    """

    k: int
    kind: MoveKind


@dataclass(frozen=True)
class SegmentMove:
    """
    A move on segment ``index`` of a config at 0-based ``offset``, read from
    the segment's first vertex (its Left end for even segments).
    """

    index: int
    offset: int


@lru_cache(maxsize=None)
def segment_moves(length: int, sign: int) -> Tuple[Tuple[int, Color, int, Tuple[Tuple[int, int], ...]], ...]:
    """
    Every move on one segment as (offset, mover, removed count, child pieces).

    Playing offset ``p`` removes ``p-1 .. p+1``. A remaining piece of one
    vertex is isolated, hence forced, and always has the mover's colour; it
    is counted in the removed total. Pieces of two or more vertices are
    segments again: the left one starts with the segment's first colour, the
    right one with the mover's colour.
    """
    first = Color.R if sign < 0 else Color.L
    moves = []
    for p in range(length):
        mover = first if p % 2 == 0 else first.opponent
        removed = min(p + 1, length - 1) - max(p - 1, 0) + 1
        pieces = []
        for piece_length, piece_first in ((p - 1, first), (length - p - 2, mover)):
            if piece_length == 1:
                removed += 1
            elif piece_length >= 2:
                piece_sign = 0
                if piece_length % 2:
                    piece_sign = 1 if piece_first is Color.L else -1
                pieces.append((piece_length, piece_sign))
        moves.append((p, mover, removed, tuple(sorted(pieces))))
    return tuple(moves)


def classify_move(config: SegmentConfig, move: SegmentMove) -> MoveClass:
    """
    Size and kind of a move.

    Raises:
        FamilyParameterError: if the move does not address a vertex of the config
    """
    if not 0 <= move.index < len(config.segments):
        raise FamilyParameterError(f"no segment {move.index} in {config.describe()}")
    segment = config.segments[move.index]
    if not 0 <= move.offset < segment.length:
        raise FamilyParameterError(f"offset {move.offset} outside {segment.describe()}")
    _, _, removed, pieces = segment_moves(*segment.key)[move.offset]
    cutting = len(pieces) == 2
    return MoveClass(k=removed, kind=MoveKind.CUTTING if cutting else MoveKind.BORDER)


def segment_vertex(graph: GameGraph, config: SegmentConfig, move: SegmentMove) -> int:
    """
    Dense id, in ``materialize(config)``, of the vertex a SegmentMove addresses.
    """
    offset = sum(s.length for s in config.segments[:move.index])
    segment = config.segments[move.index]
    v = offset + move.offset
    if graph.colors[offset] is not segment.first_color:
        v = offset + segment.length - 1 - move.offset
    return v


def config_mask(graph: GameGraph, config: SegmentConfig, index: int) -> int:
    offset = sum(s.length for s in config.segments[:index])
    return mask_of(range(offset, offset + config.segments[index].length))
