#!/usr/bin/env python3
"""
Influence - Rule Suites

Suites on general graphs: the six-vertex example game, the structural
properties of relevant positions on random graphs, the sum bounds and the
agreement of raw and relevant semantics.

Author: Influence Contributors
License: MIT
"""

import logging
import random
from typing import Any, Dict, List, Optional

from families.random_graphs import all_colorings, all_digraphs, random_digraph, random_relevant_graph
from families.segments import make_segment
from graph_core.closure import closure_mask, strong_components
from graph_core.errors import AuditError, FamilyParameterError
from graph_core.graph import Color, GameGraph, build_graph, disjoint_sum, empty_graph, iter_bits, mask_of, negative
from graph_core.moves import (
    MoveMode,
    alternative_removal_mask_of,
    apply_move,
    forced_sets,
    is_relevant,
    move_closure_of,
    relevant_reduce,
    removal_masks_of,
    rmv,
)
from graph_core.position import initial
from solver.engine import InfluenceSolver, rel_scores_direct
from solver.milnor import milnor_bounds_check
from solver.options import SolveMode, SolveOptions
from solver.scores import ScoreQuad

from .registry import register_suite
from .report import VerifyReport, graph_witness
from .settings import MAX_GENERAL_VERTICES, MAX_MODE_EQUIVALENCE_VERTICES, MAX_PROPERTY_VERTICES

logger = logging.getLogger(__name__)

EXAMPLE_NAMES = ("u", "v", "w", "x", "y", "z")
EXAMPLE_QUAD = ScoreQuad(s_l1=4, s_l2=0, s_r1=6, s_r2=2)


def example_game() -> GameGraph:
    """Six-vertex game in which Left owns u and w and Right owns v, x, y and z."""
    return build_graph(
        colors=["L", "R", "L", "R", "R", "R"],
        arcs=[(0, 2), (1, 2), (2, 4), (2, 5), (3, 5), (3, 1)],
    )


def forced_after_move_game() -> GameGraph:
    """Relevant game in which Left's move at 0 leaves vertices 1 and 3 forced."""
    return build_graph(
        colors=["L", "L", "R", "L", "R", "R"],
        arcs=[(0, 2), (1, 2), (2, 4), (2, 5), (3, 5), (0, 4), (1, 3)],
    )


@register_suite("example-game", anchors=("example-game-scores", "forced-after-move"))
def example_game_suite() -> VerifyReport:
    """Scores, optimal openings and forced vertices of the six-vertex example."""
    anchor = "example-game-scores"
    report = VerifyReport(suite="example-game")
    graph = example_game()
    start = initial(graph)

    for mode in SolveMode:
        solver = InfluenceSolver(graph, SolveOptions(mode=mode))
        quad = solver.solve()
        report.check(f"quad-{mode.value}", anchor, quad == EXAMPLE_QUAD, **quad.to_dict())
        left = solver.best_move(start, Color.L)
        right = solver.best_move(start, Color.R)
        report.check(f"best-left-{mode.value}", anchor, left.vertex == 0,
                     vertex=EXAMPLE_NAMES[left.vertex], achieved=left.achieved)
        report.check(f"best-right-{mode.value}", anchor, right.vertex == 4,
                     vertex=EXAMPLE_NAMES[right.vertex], achieved=right.achieved)

    rel = InfluenceSolver(graph).rel_scores()
    report.check("rel-scores", anchor, (rel.ls, rel.rs) == (2, -6), ls=rel.ls, rs=rel.rs)
    report.check("incentive", anchor, rel.incentive == 8, incentive=rel.incentive)

    forced_l, forced_r = forced_sets(start)
    report.check("initial-forced", anchor, not forced_l and forced_r == {1, 3},
                 forced_left=sorted(EXAMPLE_NAMES[v] for v in forced_l),
                 forced_right=sorted(EXAMPLE_NAMES[v] for v in forced_r))
    reduced = relevant_reduce(start)
    report.check("reduced-core", anchor, reduced.vertex_set() == {0, 2, 4, 5} and reduced.credit_r == 2,
                 alive=sorted(EXAMPLE_NAMES[v] for v in reduced.vertex_set()),
                 credit_l=reduced.credit_l, credit_r=reduced.credit_r)

    anchor = "forced-after-move"
    graph = forced_after_move_game()
    start = initial(graph)
    report.check("relevant-before-move", anchor, is_relevant(start))
    after_raw = apply_move(start, 0, MoveMode.RAW)
    forced_l, forced_r = forced_sets(after_raw)
    report.check("forced-after-raw-move", anchor, forced_l == {1, 3} and not forced_r,
                 forced_left=sorted(forced_l), forced_right=sorted(forced_r))
    removal = rmv(start, 0, check=True)
    report.check("removal-takes-forced", anchor,
                 removal.vertices == frozenset(graph.vertices) and removal.forced == mask_of((1, 3)),
                 removed=sorted(removal.vertices), forced=sorted(iter_bits(removal.forced)))
    after = apply_move(start, 0)
    report.check("forced-credited-to-mover", anchor, after.is_empty and after.credit_l == 2,
                 credit_l=after.credit_l, credit_r=after.credit_r)
    return report


class _Tally:
    """Failures per claim across a batch of random instances."""

    def __init__(self, report: VerifyReport) -> None:
        self.report = report
        self.checked: Dict[str, int] = {}
        self.failures: Dict[str, List[Dict[str, Any]]] = {}
        self.anchors: Dict[str, str] = {}

    def expect(self, claim_id: str, anchor: str, holds: bool, graph: GameGraph, **values: Any) -> None:
        self.anchors[claim_id] = anchor
        self.checked[claim_id] = self.checked.get(claim_id, 0) + 1
        failures = self.failures.setdefault(claim_id, [])
        if not holds:
            failures.append(graph_witness(graph, **values))

    def close(self) -> VerifyReport:
        for claim_id, anchor in self.anchors.items():
            self.report.check_all(claim_id, anchor, self.checked[claim_id], self.failures[claim_id])
        return self.report


def _removal_mask(graph: GameGraph, alive: int, v: int) -> int:
    closure, forced_l, forced_r = removal_masks_of(graph, alive, v)
    return closure | forced_l | forced_r


def _check_scores(tally: _Tally, graph: GameGraph, solver: InfluenceSolver, quad: ScoreQuad) -> None:
    direct = rel_scores_direct(graph)
    tally.expect("parity", "score-parity",
                 (direct.ls - graph.n) % 2 == 0 and (direct.rs - graph.n) % 2 == 0,
                 graph, ls=direct.ls, rs=direct.rs)
    tally.expect("relative-recursion", "relative-recursion", direct == quad.rel,
                 graph, direct=[direct.ls, direct.rs], absolute=[quad.ls, quad.rs])

    bad_sum, zugzwang = [], []
    for key, entry in solver.memo.items():
        entry_quad = ScoreQuad.from_left(key.bit_count(), *entry)
        try:
            entry_quad.check()
        except AuditError:
            bad_sum.append(key)
        if not entry_quad.is_nonzugzwang:
            zugzwang.append(key)
    tally.expect("constant-sum-memo", "score-parity", not bad_sum, graph, positions=bad_sum[:3])
    tally.expect("nonzugzwang-memo", "nonzugzwang", not zugzwang, graph, positions=zugzwang[:3])
    tally.expect("incentive-nonnegative", "nonzugzwang", quad.incentive >= 0,
                 graph, incentive=quad.incentive)


def _check_monotonicity(tally: _Tally, graph: GameGraph, solver: InfluenceSolver, quad: ScoreQuad,
                        masks: Dict[int, int]) -> None:
    full = graph.full_mask
    for v, mask in masks.items():
        child = solver.solve_mask(full & ~mask)
        if graph.colors[v] is Color.R:
            holds = quad.s_l1 >= child.s_l1 and quad.s_l2 >= child.s_l2
        else:
            holds = quad.s_r1 >= child.s_r1 and quad.s_r2 >= child.s_r2
        tally.expect("subposition-monotonicity", "subposition-monotonicity", holds,
                     graph, move=v, scores=quad.to_dict(), child=child.to_dict())


def _check_closures(tally: _Tally, graph: GameGraph, masks: Dict[int, int]) -> None:
    full = graph.full_mask
    broken = []
    for u, mask in masks.items():
        child = full & ~mask
        for v in iter_bits(child):
            for adjacency in (graph.succ_masks, graph.pred_masks):
                if closure_mask(adjacency, 1 << v, child) != closure_mask(adjacency, 1 << v, full) & child:
                    broken.append((u, v))
    tally.expect("closure-evolution", "closure-evolution", not broken, graph, move_vertex_pairs=broken[:3])

    components = [mask_of(c) for c in strong_components(initial(graph))]
    split = []
    for v in graph.vertices:
        closure = move_closure_of(graph, full, v)
        split.extend((v, c) for c in components if closure & c not in (0, c))
    tally.expect("strong-components", "strong-components-in-closures", not split, graph,
                 split=[[v, sorted(iter_bits(c))] for v, c in split[:3]])

    mismatched = [v for v, mask in masks.items() if alternative_removal_mask_of(graph, full, v) != mask]
    tally.expect("removal-characterizations", "removal-characterizations", not mismatched,
                 graph, vertices=mismatched)
    stray = []
    for v in graph.vertices:
        _, forced_l, forced_r = removal_masks_of(graph, full, v)
        if (forced_r if graph.colors[v] is Color.L else forced_l):
            stray.append(v)
    tally.expect("forced-belong-to-mover", "removal-characterizations", not stray, graph, vertices=stray)


def _check_commutation(tally: _Tally, graph: GameGraph, masks: Dict[int, int]) -> None:
    full = graph.full_mask

    def after(alive: int, v: int) -> int:
        return alive & ~_removal_mask(graph, alive, v)

    broken = []
    for color in (Color.L, Color.R):
        same = list(iter_bits(graph.color_mask(color)))
        for x in same:
            for x2 in same:
                if x == x2:
                    continue
                if masks[x] >> x2 & 1:
                    holds = not masks[x2] & ~masks[x]
                    without_x2 = full & ~masks[x2]
                    if without_x2 >> x & 1:
                        holds = holds and after(without_x2, x) == full & ~masks[x]
                    else:
                        holds = holds and masks[x2] == masks[x]
                elif not masks[x2] >> x & 1:
                    holds = after(full & ~masks[x2], x) == after(full & ~masks[x], x2)
                else:
                    continue
                if not holds:
                    broken.append((x, x2))

    asymmetric = []
    for x in iter_bits(graph.left_mask):
        for y in iter_bits(graph.right_mask):
            x_in_y = bool(masks[y] >> x & 1)
            if x_in_y != bool(masks[x] >> y & 1):
                asymmetric.append((x, y))
                continue
            if x_in_y:
                continue
            without_x = full & ~masks[x]
            same_removal = _removal_mask(graph, without_x, y) == masks[y]
            if not same_removal or after(without_x, y) != after(full & ~masks[y], x):
                broken.append((x, y))

    tally.expect("move-commutation", "move-commutation", not broken, graph, pairs=broken[:3])
    tally.expect("symmetric-membership", "symmetric-removal-membership", not asymmetric,
                 graph, pairs=asymmetric[:3])


def _check_negation_and_determinism(tally: _Tally, graph: GameGraph, quad: ScoreQuad,
                                    negation_max_n: int) -> None:
    rel = quad.rel
    mirror = negative(graph)
    negated = InfluenceSolver(mirror).rel_scores()
    tally.expect("negative-game", "negative-game-scores", negated == rel.negated(),
                 graph, rel=[rel.ls, rel.rs], negative=[negated.ls, negated.rs])

    if graph.n <= negation_max_n:
        doubled = InfluenceSolver(disjoint_sum(graph, mirror)).rel_scores()
        tally.expect("plus-negative-is-zero", "game-plus-negative-is-zero",
                     (doubled.ls, doubled.rs) == (0, 0), graph, ls=doubled.ls, rs=doubled.rs)

    variants = {
        'unpruned': SolveOptions(pruning=False),
        'parallel': SolveOptions(parallel_root=True, workers=2),
        'unrouted': SolveOptions(route_segments=False),
        'checked-removals': SolveOptions(check_removals=True, audit=True),
    }
    differing = {}
    for name, options in variants.items():
        try:
            other = InfluenceSolver(graph, options).solve()
        except AuditError as e:
            differing[name] = str(e)
            continue
        if other != quad:
            differing[name] = other.to_dict()
    tally.expect("search-determinism", "search-determinism", not differing, graph,
                 expected=quad.to_dict(), differing=differing)


@register_suite(
    "properties",
    anchors=(
        "score-parity", "nonzugzwang", "relative-recursion", "subposition-monotonicity",
        "closure-evolution", "strong-components-in-closures", "removal-characterizations",
        "move-commutation", "symmetric-removal-membership", "negative-game-scores",
        "game-plus-negative-is-zero", "search-determinism",
    ),
    seeded=True,
    cap="max_property_vertices",
)
def properties_suite(
    seed: Optional[int] = None,
    instances: int = 100,
    max_n: int = 10,
    negation_max_n: int = 10,
    cap: Optional[int] = None,
) -> VerifyReport:
    """Structural properties of relevant positions on seeded random graphs."""
    cap = cap or MAX_PROPERTY_VERTICES
    if max_n > cap:
        raise FamilyParameterError(f"max_n {max_n} exceeds the property cap of {cap} vertices")
    rng = random.Random(seed)
    report = VerifyReport(suite="properties", seed=seed, params={
        'instances': instances, 'max_n': max_n, 'negation_max_n': negation_max_n,
    })
    tally = _Tally(report)

    for i in range(instances):
        graph = random_relevant_graph(rng, max_n=max_n)
        solver = InfluenceSolver(graph)
        quad = solver.solve()
        masks = {v: _removal_mask(graph, graph.full_mask, v) for v in graph.vertices}

        _check_scores(tally, graph, solver, quad)
        _check_monotonicity(tally, graph, solver, quad, masks)
        _check_closures(tally, graph, masks)
        _check_commutation(tally, graph, masks)
        _check_negation_and_determinism(tally, graph, quad, negation_max_n)
        report.rows.append({'instance': i, 'n': graph.n, 'arcs': len(graph.arcs),
                            'ls': quad.ls, 'rs': quad.rs})
        logger.debug(f"🔍 Property instance {i}: n={graph.n} Ls={quad.ls} Rs={quad.rs}")

    return tally.close()


@register_suite("milnor", anchors=("sum-score-bounds",), seeded=True, cap="max_general_vertices")
def milnor_suite(
    seed: Optional[int] = None,
    pairs: int = 100,
    max_n: int = 8,
    cap: Optional[int] = None,
) -> VerifyReport:
    """Sum bounds on pairs of seeded random relevant graphs."""
    cap = cap or MAX_GENERAL_VERTICES
    if 2 * max_n > cap:
        raise FamilyParameterError(f"sums of two {max_n}-vertex graphs exceed the cap of {cap} vertices")
    rng = random.Random(seed)
    report = VerifyReport(suite="milnor", seed=seed, params={'pairs': pairs, 'max_n': max_n})

    two = make_segment(2)
    milnor_bounds_check(two, two, report=report, tag="two-vertex-segments-")
    report.check("two-vertex-segments-sum", "sum-score-bounds",
                 InfluenceSolver(disjoint_sum(two, two)).rel_scores().ls == 0)
    milnor_bounds_check(two, empty_graph(), report=report, tag="empty-operand-")

    scratch = VerifyReport(suite="milnor")
    for i in range(pairs):
        first = random_relevant_graph(rng, max_n=max_n)
        second = random_relevant_graph(rng, max_n=max_n)
        milnor_bounds_check(first, second, report=scratch, tag=f"pair-{i}-")
        report.rows.append({'pair': i, 'n_first': first.n, 'n_second': second.n})

    for bound in ("ls-lower", "ls-upper", "rs-lower", "rs-upper"):
        claims = [c for c in scratch.claims if c.claim_id.endswith(bound)]
        failures = [dict(c.witness, claim=c.claim_id) for c in claims if not c.holds]
        report.check_all(f"random-pairs-{bound}", "sum-score-bounds", len(claims), failures)
    return report


def _mode_mismatch(graph: GameGraph) -> Optional[Dict[str, Any]]:
    raw = InfluenceSolver(graph, SolveOptions(mode=SolveMode.RAW)).solve()
    relevant = InfluenceSolver(graph, SolveOptions(mode=SolveMode.RELEVANT)).solve()
    if raw == relevant:
        return None
    return graph_witness(graph, raw=raw.to_dict(), relevant=relevant.to_dict())


@register_suite("mode-equivalence", anchors=("mode-equivalence",), seeded=True,
                cap="max_mode_equivalence_vertices")
def mode_equivalence_suite(
    seed: Optional[int] = None,
    max_n: int = MAX_MODE_EQUIVALENCE_VERTICES,
    exhaustive_n: int = 4,
    arc_sets: int = 3,
    arc_probability: float = 0.3,
    cap: Optional[int] = None,
) -> VerifyReport:
    """
    Raw and relevant semantics give the same scores: every digraph and
    colouring up to ``exhaustive_n`` vertices, then every colouring of seeded
    random arc sets up to ``max_n``.
    """
    cap = cap or MAX_MODE_EQUIVALENCE_VERTICES
    if max_n > cap:
        raise FamilyParameterError(f"max_n {max_n} exceeds the mode-equivalence cap of {cap} vertices")
    rng = random.Random(seed)
    report = VerifyReport(suite="mode-equivalence", seed=seed, params={
        'max_n': max_n, 'exhaustive_n': exhaustive_n, 'arc_sets': arc_sets,
        'arc_probability': arc_probability,
    })

    for n in range(1, max_n + 1):
        if n <= exhaustive_n:
            graphs = list(all_digraphs(n))
        else:
            graphs = []
            for _ in range(arc_sets):
                arcs = random_digraph(rng, n, arc_probability).arcs
                graphs.extend(GameGraph(colors=colors, arcs=arcs) for colors in all_colorings(n))
        failures = [w for w in map(_mode_mismatch, graphs) if w is not None]
        report.check_all(f"raw-equals-relevant-n{n}", "mode-equivalence", len(graphs), failures)
        report.rows.append({'n': n, 'graphs': len(graphs), 'mismatches': len(failures),
                            'exhaustive': n <= exhaustive_n})
        logger.info(f"📊 Mode equivalence on {n} vertices: {len(graphs)} graphs, {len(failures)} mismatches")
    return report
