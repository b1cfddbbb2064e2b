#!/usr/bin/env python3
"""
Influence - Score Sequences

Periodicity tools for the score sequences of single segments, and the
consistency surveys of the open statements about them. Surveys only report:
nothing here can fail a run.

Author: Influence Contributors
License: MIT
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from experiments.report import VerifyReport

from .segment_solver import SegmentSumSolver, TableRow, segment_table
from .segments import OddClass

logger = logging.getLogger(__name__)

RARE_SCORES = ((4, -4), (1, -5))
ANCHOR_PERIODIC = "segment-sequences-ultimately-periodic"
ANCHOR_ONE_MOD_FOUR = "segment-ls-one-mod-four"
ANCHOR_ZERO_MOD_FOUR = "segment-ls-zero-mod-four"
ANCHOR_RARE = "segment-rare-scores"


def detect_period(
    values: Sequence[int],
    start: int = 0,
    stop: Optional[int] = None,
    max_period: Optional[int] = None,
) -> Optional[int]:
    """
    Smallest p such that ``values[i] == values[i + p]`` for every
    ``start <= i < i + p < stop``, with the window holding at least two
    periods. None when no such p exists.
    """
    window = np.asarray(values[start:stop])
    size = len(window)
    limit = size // 2 if max_period is None else min(max_period, size // 2)
    for p in range(1, limit + 1):
        if np.array_equal(window[p:], window[:-p]):
            return p
    return None


def ultimate_period(values: Sequence[int], min_repeats: int = 3) -> Optional[Tuple[int, int]]:
    """
    (preperiod, period) with the smallest preperiod, then the smallest period,
    such that the tail after the preperiod spans at least ``min_repeats``
    periods. None when no tail qualifies.
    """
    size = len(values)
    for pre in range(size):
        tail = size - pre
        p = detect_period(values, pre, max_period=tail // min_repeats)
        if p is not None:
            return pre, p
    return None


def sequences_of(rows: Sequence[TableRow]) -> Tuple[Dict[int, int], Dict[int, int]]:
    return {r.n: r.ls for r in rows}, {r.n: r.rs for r in rows}


def survey_conjectures(
    max_n: int = 80,
    solver: Optional[SegmentSumSolver] = None,
    rows: Optional[List[TableRow]] = None,
) -> VerifyReport:
    """
    Report-only consistency of the open statements on segment sequences.

    Covers ultimate periodicity (and the period-4 window from 38), Ls = 1 for
    minus segments with n = 1 mod 4 (n > 5), Ls = 2 for n = 0 mod 4 (n > 4),
    and where the rare scores (4, -4) and (1, -5) occur.
    """
    report = VerifyReport(suite="conjectures", params={'max_n': max_n})
    if rows is None:
        rows = list(segment_table(max_n, OddClass.MINUS, solver=solver))
    ls, rs = sequences_of(rows)
    ns = sorted(ls)

    pair_codes = [10 * ls[n] + rs[n] for n in ns]
    ultimate = ultimate_period(pair_codes)
    report.check(
        "ultimately-periodic", ANCHOR_PERIODIC, ultimate is not None, report_only=True,
        preperiod_n=ns[ultimate[0]] if ultimate else None,
        period=ultimate[1] if ultimate else None,
    )

    if max_n >= 76:
        window = (ns.index(38), ns.index(76) + 1)
        period = detect_period(pair_codes, *window)
        report.check(
            "period-window-38-76", ANCHOR_PERIODIC, period == 4,
            report_only=True, period=period,
        )

    one_mod_four = [n for n in ns if n % 4 == 1 and n > 5]
    breaks = [n for n in one_mod_four if ls[n] != 1]
    report.check("ls-one-mod-four", ANCHOR_ONE_MOD_FOUR, not breaks, report_only=True,
                 checked=len(one_mod_four), counterexamples=breaks)

    zero_mod_four = [n for n in ns if n % 4 == 0 and n > 4]
    breaks = [n for n in zero_mod_four if ls[n] != 2]
    report.check("ls-zero-mod-four", ANCHOR_ZERO_MOD_FOUR, not breaks, report_only=True,
                 checked=len(zero_mod_four), counterexamples=breaks)

    rare = {f"{a},{b}": [n for n in ns if (ls[n], rs[n]) == (a, b)] for a, b in RARE_SCORES}
    last_four = rare["4,-4"][-1] if rare["4,-4"] else None
    report.check("rare-scores", ANCHOR_RARE, True, report_only=True,
                 occurrences=rare, last_four_minus_four=last_four)

    report.rows = [r.to_dict() for r in rows]
    logger.info(f"📊 Conjecture survey over 1..{max_n}: ultimate period {ultimate}")
    return report
