#!/usr/bin/env python3
"""
Influence - Segment Sum Solver

Exact Left- and Right-scores of sums of segments, computed on symbolic
configurations instead of graphs. A move on a segment removes at most three
consecutive vertices plus any isolated leftover vertex, and leaves at most
two smaller segments, so every position stays a segment sum and is keyed by
its sorted multiset of (length, sign) descriptors.

Only Left-first scores are searched. Right-first scores come from the
negative position, Rs(G) = -Ls(-G), and negating a key flips the sign of its
odd segments. The search is an alpha-beta negamax over a transposition table
of [lower, upper] bounds:

* static bounds of a sum come from the exact scores of its single segments,
  Rs(G) + Ls(H) <= Ls(G + H) <= Ls(G) + Ls(H), tightened to the parity of the
  vertex count;
* the root value is pinned down by null-window tests over those bounds.

Two rewrites keep the key space small:

* a 2-move on a segment longer than two vertices is dominated by a larger
  move on the same segment and is skipped;
* a segment and its negative cancel: their sum adds nothing to either score
  of any game it is added to. Pairs of equal even segments and opposite odd
  segments of equal length are dropped from the key.

Sums are never folded by their (Ls, Rs) pair: two sums with equal scores can
still behave differently inside a larger sum.

Every shortcut can be switched off to cross-check it.

Author: Influence Contributors
License: MIT
"""

import bisect
import logging
import threading
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Set, Tuple

from graph_core.errors import AuditError
from graph_core.graph import Color
from graph_core.moves import removal_masks_of
from solver.scores import RelScores, ScoreQuad

from .segments import (
    OddClass,
    SegmentConfig,
    SegmentDescriptor,
    SegmentMove,
    materialize,
    recognize_segments,
    segment_moves,
    segment_vertex,
)

logger = logging.getLogger(__name__)

Key = Tuple[Tuple[int, int], ...]
Bounds = Tuple[int, int]
MOVE_SIZES = (2, 3, 4, 5)
_INFINITY = 1 << 30


@dataclass(frozen=True)
class TableRow:
    n: int
    ls: int
    rs: int

    def to_dict(self) -> Dict[str, int]:
        return {'n': self.n, 'ls': self.ls, 'rs': self.rs}


@lru_cache(maxsize=None)
def segment_options(length: int, sign: int, mover: Color, prune_two_moves: bool) -> Tuple[Tuple[int, Key], ...]:
    """
    Distinct (removed count, pieces) pairs of ``mover`` on one segment.

    Raises:
        AuditError: on a move size no segment can produce
    """
    result = []
    for _, who, removed, pieces in segment_moves(length, sign):
        if who is not mover:
            continue
        if removed not in MOVE_SIZES or (len(pieces) == 2 and removed != 3):
            raise AuditError(f"impossible {removed}-move on segment {(length, sign)}")
        if prune_two_moves and removed == 2 and length != 2:
            continue
        if (removed, pieces) not in result:
            result.append((removed, pieces))
    return tuple(result)


def negate_key(key: Key) -> Key:
    """Key of the negative sum: odd signs flip, even segments stay."""
    return tuple(sorted((length, -sign) for length, sign in key))


def _fit_parity(lo: int, hi: int, total: int) -> Bounds:
    if (lo - total) % 2:
        lo += 1
    if (hi - total) % 2:
        hi -= 1
    return lo, hi


class SegmentSumSolver:
    """
    Memoized solver for segment sums; one instance can serve many queries.

    Attributes:
        prune_two_moves (bool): skip 2-moves on segments longer than two
        cancel_negatives (bool): drop segment/negative pairs from keys
        use_bounds (bool): seed the search with single-segment bounds
        debug_materialize (bool): re-derive every expansion on the graph
    """

    def __init__(
        self,
        prune_two_moves: bool = True,
        cancel_negatives: bool = True,
        debug_materialize: bool = False,
        use_bounds: bool = True,
    ) -> None:
        self.prune_two_moves = prune_two_moves
        self.cancel_negatives = cancel_negatives
        self.debug_materialize = debug_materialize
        self.use_bounds = use_bounds
        self._table: Dict[Key, Bounds] = {}
        self._singles: Dict[Tuple[int, int], int] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0
        self.searches = 0

    @property
    def memo_entries(self) -> int:
        return len(self._table)

    def rel_scores(self, config: SegmentConfig) -> RelScores:
        key, credit = self.canonical(config.key)
        if self.use_bounds:
            self._ensure_singles(max((length for length, _ in key), default=0))
        ls = self.left_score(key)
        rs = -self.left_score(negate_key(key))
        return RelScores(ls + credit, rs + credit)

    def solve(self, config: SegmentConfig) -> ScoreQuad:
        return ScoreQuad.from_rel(config.total, self.rel_scores(config))

    def canonical(self, key: Key) -> Tuple[Key, int]:
        """
        Sorted key without unit segments, cancelled if enabled.

        A unit segment is a lone forced vertex: it shifts both scores by +1
        (Left vertex) or -1 (Right vertex) and is returned as that shift.
        """
        credit = sum(sign for length, sign in key if length == 1)
        rest = sorted(item for item in key if item[0] > 1)
        if self.cancel_negatives:
            rest = self._cancel(rest)
        return tuple(rest), credit

    @staticmethod
    def _cancel(items: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
        counts = Counter(items)
        kept: List[Tuple[int, int]] = []
        for length in sorted({length for length, _ in items}):
            if length % 2 == 0:
                kept.extend([(length, 0)] * (counts[(length, 0)] % 2))
            else:
                surplus = counts[(length, 1)] - counts[(length, -1)]
                sign = 1 if surplus > 0 else -1
                kept.extend([(length, sign)] * abs(surplus))
        return kept

    def options(self, key: Key, mover: Color) -> Set[Tuple[int, Key]]:
        """Distinct (removed count, child key) pairs for ``mover``."""
        result: Set[Tuple[int, Key]] = set()
        for index, (length, sign) in enumerate(key):
            if index and key[index - 1] == (length, sign):
                continue
            rest = list(key[:index] + key[index + 1:])
            for removed, pieces in segment_options(length, sign, mover, self.prune_two_moves):
                result.add((removed, self._merge(rest, pieces)))
        return result

    def _merge(self, rest: List[Tuple[int, int]], pieces: Key) -> Key:
        """Canonical ``rest + pieces`` for a canonical ``rest``."""
        items = list(rest)
        for length, sign in pieces:
            partner = (length, -sign)
            if self.cancel_negatives:
                at = bisect.bisect_left(items, partner)
                if at < len(items) and items[at] == partner:
                    del items[at]
                    continue
            bisect.insort(items, (length, sign))
        return tuple(items)

    def _negated_children(self, key: Key) -> Set[Tuple[int, Key]]:
        """(removed, -child) for every Left move of ``key``."""
        result: Set[Tuple[int, Key]] = set()
        for index, (length, sign) in enumerate(key):
            if index and key[index - 1] == (length, sign):
                continue
            negated_rest = list(negate_key(key[:index] + key[index + 1:]))
            for removed, pieces in segment_options(length, sign, Color.L, self.prune_two_moves):
                flipped = tuple((piece, -piece_sign) for piece, piece_sign in pieces)
                result.add((removed, self._merge(negated_rest, flipped)))
        return result

    def _ensure_singles(self, max_length: int) -> None:
        """Exact Ls of every single segment up to ``max_length``, shortest first."""
        for length in range(2, max_length + 1):
            for sign in ((0,) if length % 2 == 0 else (-1, 1)):
                if (length, sign) not in self._singles:
                    self._singles[(length, sign)] = self.left_score(((length, sign),))

    def _static(self, key: Key) -> Bounds:
        total = sum(length for length, _ in key)
        lo, hi = -total, total
        if self.use_bounds:
            upper = 0
            right_floor = 0
            gap = -_INFINITY
            for length, sign in key:
                own = self._singles.get((length, sign))
                opposite = self._singles.get((length, -sign))
                ls_lo, ls_hi = (own, own) if own is not None else (-length, length)
                rs_lo = -opposite if opposite is not None else -length
                upper += ls_hi
                right_floor += rs_lo
                gap = max(gap, ls_lo - rs_lo)
            hi = min(hi, upper)
            lo = max(lo, right_floor + gap)
        return _fit_parity(lo, hi, total)

    def _bounds(self, key: Key) -> Bounds:
        entry = self._table.get(key)
        if entry is not None:
            self.hits += 1
            return entry
        self.misses += 1
        if self.debug_materialize:
            self._cross_check(key)
        return self._store(key, *self._static(key))

    def _peek(self, key: Key) -> Bounds:
        if not key:
            return 0, 0
        entry = self._table.get(key)
        return entry if entry is not None else self._static(key)

    def _store(self, key: Key, lo: int, hi: int) -> Bounds:
        total = sum(length for length, _ in key)
        with self._lock:
            old_lo, old_hi = self._table.get(key, (-total, total))
            lo, hi = _fit_parity(max(lo, old_lo), min(hi, old_hi), total)
            if lo > hi:
                raise AuditError(f"segment bounds for {key} crossed: [{lo}, {hi}]")
            self._table[key] = (lo, hi)
        return lo, hi

    def left_score(self, key: Key) -> int:
        """Exact Ls of a canonical key."""
        if not key:
            return 0
        lo, hi = self._bounds(key)
        while lo < hi:
            target = lo + 2 * ((hi - lo + 2) // 4)
            value = self._search(key, target - 1, target)
            self.searches += 1
            if value >= target:
                lo = max(lo, value)
            else:
                hi = min(hi, value)
            lo, hi = self._store(key, lo, hi)
        return lo

    def _search(self, key: Key, alpha: int, beta: int) -> int:
        """Fail-soft negamax for Ls(key) against the window (alpha, beta)."""
        if not key:
            return 0
        lo, hi = self._bounds(key)
        if lo >= beta or lo == hi:
            return lo
        if hi <= alpha:
            return hi
        floor, ceiling = max(alpha, lo - 1), min(beta, hi + 1)

        ordered = []
        for removed, child in self._negated_children(key):
            child_lo, child_hi = self._peek(child)
            ordered.append((2 * removed - child_lo - child_hi, removed - child_hi, removed, child))
        ordered.sort(reverse=True)

        best = -_INFINITY
        for _, _, removed, child in ordered:
            low = max(floor, best)
            value = removed - self._search(child, removed - ceiling, removed - low)
            if value > best:
                best = value
                if best >= ceiling or best >= hi:
                    break

        if best <= floor:
            lo, hi = self._store(key, lo, best)
            return hi
        if best >= ceiling:
            lo, hi = self._store(key, best, hi)
            return lo
        self._store(key, best, best)
        return best

    def _cross_check(self, key: Key) -> None:
        """Compare every symbolic move of ``key`` with the graph-level Rmv."""
        config = SegmentConfig.from_key(key)
        graph = materialize(config)
        for index, segment in enumerate(config.segments):
            rest = key[:index] + key[index + 1:]
            for offset, _, removed, pieces in segment_moves(*segment.key):
                v = segment_vertex(graph, config, SegmentMove(index, offset))
                closure, forced_l, forced_r = removal_masks_of(graph, graph.full_mask, v)
                mask = closure | forced_l | forced_r
                child = recognize_segments(graph, graph.full_mask & ~mask)
                child_key = child.key if child is not None else ()
                if mask.bit_count() != removed or child_key != tuple(sorted(rest + pieces)):
                    raise AuditError(
                        f"move {offset} on {segment.describe()} in {config.describe()}: "
                        f"symbolic {removed}/{sorted(rest + pieces)} vs graph {mask.bit_count()}/{child_key}"
                    )

    def get_stats(self) -> Dict[str, int]:
        return {
            'entries': len(self._table),
            'hits': self.hits,
            'misses': self.misses,
            'searches': self.searches,
        }


def solve_segment_config(
    config: SegmentConfig,
    solver: Optional[SegmentSumSolver] = None,
) -> Tuple[RelScores, ScoreQuad]:
    solver = solver or SegmentSumSolver()
    rel = solver.rel_scores(config)
    return rel, ScoreQuad.from_rel(config.total, rel)


def single_segment(n: int, odd_class: OddClass = OddClass.MINUS) -> SegmentConfig:
    """The one-segment config of length ``n``; ``odd_class`` applies to odd ``n``."""
    return SegmentConfig((SegmentDescriptor(n, OddClass.NONE if n % 2 == 0 else odd_class),))


def segment_table(
    max_n: int,
    odd_class: OddClass = OddClass.MINUS,
    solver: Optional[SegmentSumSolver] = None,
    start: int = 1,
) -> Iterator[TableRow]:
    """
    Stream (n, Ls(S_n), Rs(S_n)) for ``start <= n <= max_n``. Odd segments
    take ``odd_class``; one table of bounds serves every row.
    """
    solver = solver or SegmentSumSolver()
    for n in range(start, max_n + 1):
        rel = solver.rel_scores(single_segment(n, odd_class))
        logger.debug(f"📊 S{n}: Ls={rel.ls} Rs={rel.rs} ({solver.memo_entries} configs in table)")
        yield TableRow(n, rel.ls, rel.rs)
    logger.info(f"✅ Segment table up to n={max_n} done, {solver.memo_entries} configs in table")
