#!/usr/bin/env python3
"""
Influence - Random Graphs

Seeded random coloured digraphs for property suites and cross-checks.

Author: Influence Contributors
License: MIT
"""

import itertools
import random
from typing import Iterator, Tuple

from graph_core.graph import Color, GameGraph
from graph_core.moves import reduce_mask_of

MAX_ATTEMPTS = 1_000


def random_digraph(rng: random.Random, n: int, arc_probability: float = 0.3) -> GameGraph:
    """Uniform colours, each ordered pair an arc with ``arc_probability``."""
    colors = tuple(rng.choice((Color.L, Color.R)) for _ in range(n))
    arcs = [
        (a, b)
        for a, b in itertools.permutations(range(n), 2)
        if rng.random() < arc_probability
    ]
    return GameGraph(colors=colors, arcs=tuple(arcs))


def random_dag(rng: random.Random, n: int, arc_probability: float = 0.3) -> GameGraph:
    """Random digraph whose arcs all go from a lower to a higher id."""
    colors = tuple(rng.choice((Color.L, Color.R)) for _ in range(n))
    arcs = [
        (a, b)
        for a, b in itertools.combinations(range(n), 2)
        if rng.random() < arc_probability
    ]
    return GameGraph(colors=colors, arcs=tuple(arcs))


def relevant_core(graph: GameGraph) -> GameGraph:
    """The graph with its forced vertices removed, re-densified."""
    core, _, _ = reduce_mask_of(graph, graph.full_mask)
    return graph.induced(core)[0]


def random_relevant_graph(
    rng: random.Random,
    max_n: int = 12,
    min_n: int = 2,
    arc_probability: float = 0.3,
) -> GameGraph:
    """
    Relevant core of a random digraph, redrawn until it keeps at least
    ``min_n`` vertices.
    """
    for _ in range(MAX_ATTEMPTS):
        n = rng.randint(min_n, max_n)
        core = relevant_core(random_digraph(rng, n, arc_probability))
        if core.n >= min_n:
            return core
    raise RuntimeError(f"no relevant core with {min_n}+ vertices in {MAX_ATTEMPTS} draws")


def all_colorings(n: int) -> Iterator[Tuple[Color, ...]]:
    return itertools.product((Color.L, Color.R), repeat=n)


def all_digraphs(n: int) -> Iterator[GameGraph]:
    """Every coloured digraph on ``n`` labelled vertices."""
    pairs = list(itertools.permutations(range(n), 2))
    for bits in range(1 << len(pairs)):
        arcs = tuple(pair for i, pair in enumerate(pairs) if bits >> i & 1)
        for colors in all_colorings(n):
            yield GameGraph(colors=colors, arcs=arcs)
