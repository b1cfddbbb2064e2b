#!/usr/bin/env python3
"""
Influence - Quasi-Paths

A quasi-path is a relevant graph whose underlying undirected graph is a simple
path; colours and arc orientations along the path are arbitrary. Random
instances are drawn with independent uniform colours and orientations and
kept only when relevant.

Author: Influence Contributors
License: MIT
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from graph_core.errors import FamilyParameterError
from graph_core.graph import Color, GameGraph, disjoint_sum, empty_graph
from graph_core.moves import forced_masks_of

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 1_000_000
REJECTION_WARNING = 100_000


@dataclass(frozen=True)
class QuasiPathSpec:
    """
    Attributes:
        colors (Tuple[Color, ...]): colour of each vertex along the path
        forward (Tuple[bool, ...]): orientation of each edge; True means i -> i+1
    """

    colors: Tuple[Color, ...]
    forward: Tuple[bool, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(Color(c) for c in self.colors))
        if not self.colors:
            raise FamilyParameterError("a quasi-path needs at least one vertex")
        if len(self.forward) != len(self.colors) - 1:
            raise FamilyParameterError(
                f"{len(self.colors)} vertices need {len(self.colors) - 1} orientations, got {len(self.forward)}"
            )

    @property
    def left_share(self) -> Fraction:
        """Proportion u of Left vertices."""
        return Fraction(sum(c is Color.L for c in self.colors), len(self.colors))

    def to_graph(self) -> GameGraph:
        arcs = [(i, i + 1) if ahead else (i + 1, i) for i, ahead in enumerate(self.forward)]
        return GameGraph(colors=self.colors, arcs=tuple(arcs))


def make_quasi_path(spec: QuasiPathSpec) -> GameGraph:
    """
    Graph of a quasi-path spec.

    Raises:
        FamilyParameterError: if the resulting graph has a forced vertex
    """
    graph = spec.to_graph()
    forced_l, forced_r = forced_masks_of(graph, graph.full_mask)
    if forced_l or forced_r:
        raise FamilyParameterError("quasi-path spec is not relevant: it has forced vertices")
    return graph


# Relevance scanned left to right. The state after vertex i is
#   (forward run ending at i holds an L,
#    backward run ending at i holds an R,
#    forward run holds an L still looking for an R ahead,
#    backward run holds an R still looking for an L ahead)
# where the forward run is the chain of i-1 -> i arcs ending at i and the
# backward run the chain of i -> i-1 arcs. A breaking run drops its pending
# vertex for good, which rejects the path.
ScanState = Tuple[bool, bool, bool, bool]
STEPS = tuple((ahead, color) for ahead in (True, False) for color in (Color.L, Color.R))


def scan_start(color: Color) -> ScanState:
    is_left = color is Color.L
    return is_left, not is_left, is_left, not is_left


def scan_step(state: ScanState, ahead: bool, color: Color) -> Optional[ScanState]:
    """Extend the scan by one edge and vertex; None once relevance is lost."""
    fwd_l, back_r, pend_l, pend_r = state
    if ahead:
        if pend_r:
            return None
        if color is Color.R:
            return fwd_l, True, False, not fwd_l
        return True, False, True, False
    if pend_l:
        return None
    if color is Color.L:
        return True, back_r, not back_r, False
    return False, True, False, True


def scan_accepts(state: Optional[ScanState]) -> bool:
    return state is not None and not state[2] and not state[3]


def is_relevant_spec(spec: QuasiPathSpec) -> bool:
    state: Optional[ScanState] = scan_start(spec.colors[0])
    for ahead, color in zip(spec.forward, spec.colors[1:]):
        state = scan_step(state, ahead, color)
        if state is None:
            return False
    return scan_accepts(state)


@lru_cache(maxsize=None)
def _completions(state: ScanState, remaining: int) -> int:
    """Number of ways to add ``remaining`` vertices and end relevant."""
    if remaining == 0:
        return int(scan_accepts(state))
    total = 0
    for ahead, color in STEPS:
        following = scan_step(state, ahead, color)
        if following is not None:
            total += _completions(following, remaining - 1)
    return total


def count_relevant(length: int) -> int:
    """Number of relevant quasi-path specs with ``length`` vertices."""
    return sum(_completions(scan_start(color), length - 1) for color in (Color.L, Color.R))


def conditioned_spec(rng: random.Random, length: int) -> QuasiPathSpec:
    """
    A spec drawn uniformly among the relevant ones, i.e. from the uniform
    draw conditioned on relevance, without redrawing.
    """
    starts = [(color, _completions(scan_start(color), length - 1)) for color in (Color.L, Color.R)]
    color = _weighted(rng, starts)
    state = scan_start(color)
    colors, forward = [color], []
    for remaining in range(length - 1, 0, -1):
        choices = []
        for ahead, next_color in STEPS:
            following = scan_step(state, ahead, next_color)
            if following is not None:
                choices.append(((ahead, next_color, following), _completions(following, remaining - 1)))
        ahead, next_color, state = _weighted(rng, choices)
        forward.append(ahead)
        colors.append(next_color)
    return QuasiPathSpec(tuple(colors), tuple(forward))


def _weighted(rng: random.Random, choices: List[Tuple[object, int]]) -> object:
    total = sum(weight for _, weight in choices)
    if total == 0:
        raise FamilyParameterError("no relevant completion exists")
    pick = rng.randrange(total)
    for value, weight in choices:
        if pick < weight:
            return value
        pick -= weight
    raise AssertionError("unreachable")


def scanned_draw(rng: random.Random, length: int) -> Optional[QuasiPathSpec]:
    """Uniform spec draw, abandoned (None) at the first step that loses relevance."""
    color = rng.choice((Color.L, Color.R))
    state: Optional[ScanState] = scan_start(color)
    colors, forward = [color], []
    for _ in range(length - 1):
        ahead = rng.random() < 0.5
        color = rng.choice((Color.L, Color.R))
        state = scan_step(state, ahead, color)
        if state is None:
            return None
        forward.append(ahead)
        colors.append(color)
    return QuasiPathSpec(tuple(colors), tuple(forward)) if scan_accepts(state) else None


def random_quasi_path(
    rng: random.Random,
    length: int,
    conditioned: bool = False,
) -> Tuple[QuasiPathSpec, GameGraph, int]:
    """
    Random relevant quasi-path of ``length`` vertices.

    By default colours and orientations are drawn uniformly and the draw is
    rejected and redrawn until it is relevant; the scan automaton abandons a
    draw as soon as it turns irrelevant. With ``conditioned`` the spec comes
    straight from the conditioned distribution and nothing is rejected. Every
    accepted spec still goes through the graph-level relevance filter.

    Returns:
        Tuple[QuasiPathSpec, GameGraph, int]: the accepted spec, its graph and
        the number of rejected draws

    Raises:
        FamilyParameterError: if no relevant draw turns up within MAX_ATTEMPTS
    """
    if length < 2:
        raise FamilyParameterError("a relevant quasi-path needs at least 2 vertices")
    for rejected in range(MAX_ATTEMPTS):
        spec = conditioned_spec(rng, length) if conditioned else scanned_draw(rng, length)
        if spec is None:
            continue
        try:
            graph = make_quasi_path(spec)
        except FamilyParameterError:
            continue
        if rejected >= REJECTION_WARNING:
            logger.warning(f"⚠️ Quasi-path of length {length} accepted after {rejected} rejections")
        return spec, graph, rejected
    raise FamilyParameterError(f"no relevant quasi-path of length {length} in {MAX_ATTEMPTS} draws")


@dataclass(frozen=True)
class QuasiPathCollection:
    specs: Tuple[QuasiPathSpec, ...]
    graph: GameGraph
    rejections: int

    @property
    def left_share(self) -> Fraction:
        left = sum(sum(c is Color.L for c in s.colors) for s in self.specs)
        return Fraction(left, self.graph.n)


def random_collection(
    rng: random.Random,
    max_total: int = 20,
    max_paths: int = 3,
    min_length: int = 2,
) -> QuasiPathCollection:
    """Sum of 1..max_paths random relevant quasi-paths with at most ``max_total`` vertices."""
    if max_total < min_length:
        raise FamilyParameterError(f"max_total {max_total} is below the minimum path length")
    count = rng.randint(1, max(1, min(max_paths, max_total // min_length)))
    remaining = max_total
    specs: List[QuasiPathSpec] = []
    graph = empty_graph()
    rejections = 0
    for i in range(count):
        reserve = min_length * (count - i - 1)
        length = rng.randint(min_length, remaining - reserve)
        spec, path, rejected = random_quasi_path(rng, length)
        specs.append(spec)
        graph = disjoint_sum(graph, path)
        rejections += rejected
        remaining -= length
    return QuasiPathCollection(tuple(specs), graph, rejections)


def left_share_bound(u: Fraction) -> Fraction:
    """Upper bound (2 + u) / 3 on Left's second-player share of a quasi-path sum."""
    return (2 + u) / 3
