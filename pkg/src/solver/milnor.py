#!/usr/bin/env python3
"""
Influence - Sum Bounds

Bounds on the scores of a sum of two relevant games from the scores of its
parts, valid for every pair of nonzugzwang dicot games:

    max(Ls(G) + Rs(H), Rs(G) + Ls(H)) <= Ls(G + H) <= Ls(G) + Ls(H)
    Rs(G) + Rs(H) <= Rs(G + H) <= min(Ls(G) + Rs(H), Rs(G) + Ls(H))

Author: Influence Contributors
License: MIT
"""

from typing import Optional

from experiments.report import VerifyReport, graph_witness
from graph_core.graph import GameGraph, disjoint_sum

from .engine import InfluenceSolver
from .options import SolveOptions

ANCHOR = "sum-score-bounds"


def milnor_bounds_check(
    first: GameGraph,
    second: GameGraph,
    options: Optional[SolveOptions] = None,
    report: Optional[VerifyReport] = None,
    tag: str = "",
) -> VerifyReport:
    """
    Check the four sum inequalities for ``first + second``.

    Args:
        first, second: relevant graphs
        options: solver switches used for all three solves
        report: report to append to; a new one is created when omitted
        tag: prefix for the claim ids, to keep them unique in shared reports

    Returns:
        VerifyReport: four claims with the exact values in their witnesses
    """
    report = report if report is not None else VerifyReport(suite="milnor")
    g = InfluenceSolver(first, options).rel_scores()
    h = InfluenceSolver(second, options).rel_scores()
    total = disjoint_sum(first, second)
    s = InfluenceSolver(total, options).rel_scores()

    values = {
        'ls_g': g.ls, 'rs_g': g.rs, 'ls_h': h.ls, 'rs_h': h.rs,
        'ls_sum': s.ls, 'rs_sum': s.rs,
    }
    checks = {
        'ls-lower': max(g.ls + h.rs, g.rs + h.ls) <= s.ls,
        'ls-upper': s.ls <= g.ls + h.ls,
        'rs-lower': g.rs + h.rs <= s.rs,
        'rs-upper': s.rs <= min(g.ls + h.rs, g.rs + h.ls),
    }
    for name, holds in checks.items():
        witness = values if holds else graph_witness(total, n_first=first.n, **values)
        report.check(f"{tag}{name}", ANCHOR, holds, **witness)
    return report
