#!/usr/bin/env python3
"""
Influence - Position Suites

Score bounds that tie a player's result to the shape of the graph rather than
to its colour proportion: doubled oriented trees and sums of quasi-paths.

Author: Influence Contributors
License: MIT
"""

import logging
import random
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

import networkx as nx

from families.quasi_paths import left_share_bound, random_collection
from families.trees import TreeSpec, forest_below, make_J, make_tree, ratio_table
from graph_core.errors import FamilyParameterError
from graph_core.graph import Color, GameGraph
from graph_core.moves import removal_masks_of
from solver.engine import InfluenceSolver

from .registry import register_suite
from .report import VerifyReport, graph_witness
from .settings import MAX_EXACT_TREE_DEPTH, MAX_GENERAL_VERTICES

logger = logging.getLogger(__name__)

COUNT_DEPTHS = range(0, 5)
COUNT_FANOUTS = range(1, 6)
DECOMPOSITION_DEPTH = 2
EXACT_J1_FANOUT = 3
TREND_DEPTHS = range(0, 13)


def _same_colored_shape(first: nx.DiGraph, second: nx.DiGraph) -> bool:
    return nx.is_isomorphic(first, second, node_match=lambda a, b: a["color"] == b["color"])


def _right_first(graph: GameGraph) -> int:
    return InfluenceSolver(graph).solve().s_r1


def _trend_breaks(
    rows: List[Dict[str, Any]],
    group: str,
    along: str,
    value: Callable[[Dict[str, Any]], float],
    strict: bool = False,
) -> List[Dict[str, Any]]:
    """Consecutive row pairs, within each ``group``, where ``value`` fails to rise along ``along``."""
    breaks = []
    groups: Dict[Any, List[Dict[str, Any]]] = {}
    for row in rows:
        groups.setdefault(row[group], []).append(row)
    for members in groups.values():
        members = sorted(members, key=lambda r: r[along])
        for before, after in zip(members, members[1:]):
            rise = value(after) - value(before)
            if rise < 0 or (strict and rise == 0):
                breaks.append({group: before[group], along: [before[along], after[along]],
                               'values': [value(before), value(after)]})
    return breaks


@register_suite(
    "trees",
    anchors=("tree-counts", "tree-leaf-decomposition", "tree-score-bound",
             "tree-score-recurrence", "tree-ratio-trend"),
    cap="max_exact_tree_depth",
)
def tree_bounds(n_max: int = 1, c_max: int = 6, cap: Optional[int] = None) -> VerifyReport:
    """
    Doubled trees J(n, c): closed-form counts, the leaf-move decomposition and
    Right's first-player score against its bound. Exact scores are computed
    for depths up to ``n_max``; J(1, c) only for small fanouts.
    """
    cap = MAX_EXACT_TREE_DEPTH if cap is None else cap
    if n_max > cap:
        raise FamilyParameterError(f"exact tree depth {n_max} exceeds the cap of {cap}")
    if c_max < 1:
        raise FamilyParameterError(f"fanout must be at least 1, got {c_max}")
    report = VerifyReport(suite="trees", params={'n_max': n_max, 'c_max': c_max})

    count_failures = []
    checked = 0
    for depth in COUNT_DEPTHS:
        for fanout in COUNT_FANOUTS:
            spec = TreeSpec(depth, fanout)
            tree = make_tree(spec)
            checked += 1
            left = tree.left_mask.bit_count()
            right = tree.right_mask.bit_count()
            leaf_parents = [v for v in tree.vertices if tree.colors[v] is Color.L and tree.succ_masks[v]
                            and not tree.succ_masks[v] & tree.left_mask]
            fan = {tree.succ_masks[v].bit_count() for v in leaf_parents}
            if (left, right) != (spec.left_count, spec.leaf_count) or fan != {fanout} \
                    or left != (3 ** (depth + 1) - 1) // 2:
                count_failures.append({'n': depth, 'c': fanout, 'left': left, 'leaves': right})
    report.check_all("left-and-leaf-counts", "tree-counts", checked, count_failures)

    decomposition_failures = []
    checked = 0
    for depth in range(0, DECOMPOSITION_DEPTH + 1):
        for fanout in range(1, min(c_max, EXACT_J1_FANOUT) + 1):
            spec = TreeSpec(depth, fanout)
            tree = make_tree(spec)
            expected = forest_below(spec).to_networkx()
            leaves = [v for v in tree.vertices if tree.colors[v] is Color.R]
            for leaf in (leaves[0], leaves[-1]):
                checked += 1
                closure, forced_l, forced_r = removal_masks_of(tree, tree.full_mask, leaf)
                removed = closure | forced_l | forced_r
                rest, _ = tree.induced(tree.full_mask & ~removed)
                if removed.bit_count() != depth + 1 + fanout or \
                        not _same_colored_shape(rest.to_networkx(), expected):
                    decomposition_failures.append(graph_witness(tree, leaf=leaf, removed=removed.bit_count()))
    report.check_all("leaf-move-leaves-smaller-trees", "tree-leaf-decomposition",
                     checked, decomposition_failures)

    scores: Dict[int, Dict[int, int]] = {}
    for depth in range(0, n_max + 1):
        for fanout in range(1, c_max + 1):
            if depth >= 1 and fanout > EXACT_J1_FANOUT:
                continue
            spec = TreeSpec(depth, fanout)
            graph = make_J(spec)
            quad = InfluenceSolver(graph).solve()
            scores.setdefault(depth, {})[fanout] = quad.s_r1
            report.rows.append({
                'n': depth, 'c': fanout, 'size': graph.n, 's_r1': quad.s_r1, 'bound': spec.bound(),
                's_l2': quad.s_l2, 'left_share': round(quad.s_l2 / graph.n, 6),
                'left_proportion': round(graph.left_mask.bit_count() / graph.n, 6),
            })

    star = [{'c': c, 's_r1': s} for c, s in scores.get(0, {}).items() if s != c + 1]
    report.check_all("single-level-right-score", "tree-score-bound", len(scores.get(0, {})), star)
    over = [row for row in report.rows if row['s_r1'] > row['bound']]
    report.check_all("right-score-within-bound", "tree-score-bound", len(report.rows), over)

    recurrence = []
    checked = 0
    for depth in range(1, n_max + 1):
        for fanout, s_r1 in scores.get(depth, {}).items():
            checked += 1
            limit = depth + 1 + fanout + sum(scores[i][fanout] for i in range(depth))
            if s_r1 > limit:
                recurrence.append({'n': depth, 'c': fanout, 's_r1': s_r1, 'limit': limit})
    report.check_all("right-score-recurrence", "tree-score-recurrence", checked, recurrence)

    measured = report.rows
    report.check_all("measured-proportion-falls-with-fanout", "tree-ratio-trend", len(measured),
                     _trend_breaks(measured, 'n', 'c', lambda r: -r['left_proportion'], strict=True))
    report.check_all("measured-share-rises-with-depth", "tree-ratio-trend", len(measured),
                     _trend_breaks(measured, 'c', 'n', lambda r: r['left_share']))
    report.check_all("measured-share-gap-rises-with-depth", "tree-ratio-trend", len(measured),
                     _trend_breaks(measured, 'c', 'n', lambda r: r['left_share'] - r['left_proportion']))

    table = ratio_table(list(TREND_DEPTHS), list(range(1, c_max + 1)))
    overtaken = {}
    for n, c, proportion, share in table:
        if share > proportion and int(c) not in overtaken:
            overtaken[int(c)] = int(n)
    report.check("share-bound-overtakes-proportion", "tree-ratio-trend",
                 len(overtaken) == c_max, report_only=True,
                 first_depth_by_fanout={str(c): n for c, n in sorted(overtaken.items())})
    logger.info(f"📊 Tree trend over depths {TREND_DEPTHS.start}..{TREND_DEPTHS.stop - 1}: {overtaken}")
    return report


@register_suite("quasi-paths", anchors=("quasi-path-share-bound",), seeded=True, cap="max_general_vertices")
def quasi_path_bound(
    seed: Optional[int] = None,
    trials: int = 500,
    max_len: int = 20,
    max_paths: int = 3,
    cap: Optional[int] = None,
) -> VerifyReport:
    """
    Left's second-player share of random sums of relevant quasi-paths against
    (2 + u) / 3, u being the proportion of Left vertices.
    """
    cap = cap or MAX_GENERAL_VERTICES
    if max_len > cap:
        raise FamilyParameterError(f"max_len {max_len} exceeds the cap of {cap} vertices")
    rng = random.Random(seed)
    anchor = "quasi-path-share-bound"
    report = VerifyReport(suite="quasi-paths", seed=seed, params={
        'trials': trials, 'max_len': max_len, 'max_paths': max_paths,
    })

    half = Fraction(1, 2)
    report.check("bound-at-half", anchor, left_share_bound(half) == Fraction(5, 6),
                 u=str(half), bound=str(left_share_bound(half)))

    failures: List[Dict[str, Any]] = []
    rejections = 0
    tightest = None
    for trial in range(trials):
        collection = random_collection(rng, max_total=max_len, max_paths=max_paths)
        graph = collection.graph
        rejections += collection.rejections
        s_l2 = InfluenceSolver(graph).solve().s_l2
        u = collection.left_share
        ratio = Fraction(s_l2, graph.n)
        bound = left_share_bound(u)
        if ratio > bound:
            failures.append(graph_witness(graph, u=str(u), ratio=str(ratio), bound=str(bound)))
        slack = bound - ratio
        if tightest is None or slack < tightest:
            tightest = slack
        report.rows.append({
            'trial': trial, 'n': graph.n, 'paths': len(collection.specs),
            'u': str(u), 'ratio': str(ratio), 'bound': str(bound),
        })

    report.check_all("second-player-share-within-bound", anchor, trials, failures)
    logger.info(f"📊 Quasi-paths: {trials} sums, {rejections} rejected draws, tightest slack {tightest}")
    return report
