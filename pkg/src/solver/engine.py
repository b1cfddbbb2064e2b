#!/usr/bin/env python3
"""
Influence - Exact Solver

Memoized constant-sum minimax over the alive subsets of one base graph.

Raw mode plays plain closures and follows the waiting rule: a player with no
vertex of their colour left lets the opponent take everything that remains.
Relevant mode first banks forced vertices, then searches the relevant core
with Rmv moves, optionally dropping dominated moves and handing pure segment
sums to the segment solver. Both modes report the scores of the original game.

Recursions on the Left scores (the Right scores follow from constant sum):

    s_l1(A) = max over Left moves x of |removed(x)| + s_l2(A - removed(x))
    s_l2(A) = min over Right moves y of s_l1(A - removed(y))

Author: Influence Contributors
License: MIT
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

from graph_core.errors import AuditError, NoMoveError
from graph_core.graph import Color, GameGraph, iter_bits
from graph_core.moves import (
    alternative_removal_mask_of,
    dominant_moves_of,
    move_closure_of,
    reduce_mask_of,
    removal_masks_of,
)
from graph_core.position import Position

from .memo import Entry, MemoTable
from .options import SolveMode, SolveOptions
from .scores import ZERO, RelScores, ScoreQuad

logger = logging.getLogger(__name__)

Option = Tuple[int, int]  # (vertices captured, child alive mask)


@dataclass(frozen=True)
class MoveChoice:
    """
    An optimal move and the scores around it.

    Attributes:
        vertex (int): dense id of the chosen vertex
        label (int): user-facing label of the vertex
        mover (Color): the player making the move
        captured (int): vertices removed by the move's closure
        child (ScoreQuad): scores of the remaining game
        total (ScoreQuad): scores of the position before the move
    """

    vertex: int
    label: int
    mover: Color
    captured: int
    child: ScoreQuad
    total: ScoreQuad

    @property
    def achieved(self) -> int:
        """Vertices the mover ends up with after this move and optimal play."""
        later = self.child.s_l2 if self.mover is Color.L else self.child.s_r2
        return self.captured + later


class InfluenceSolver:
    """
    Exact solver bound to one base graph.

    Attributes:
        graph (GameGraph): the base graph; every key is a subset of its vertices
        options (SolveOptions): search switches
        memo (MemoTable): alive mask -> (s_l1, s_l2)
        last_elapsed_ms (float): wall time of the latest top-level solve
    """

    def __init__(self, graph: GameGraph, options: Optional[SolveOptions] = None) -> None:
        self.graph = graph
        self.options = options or SolveOptions()
        self.memo = MemoTable()
        self.last_elapsed_ms = 0.0
        self._segment_solver: Optional[Any] = None

    # Public API

    def solve(self) -> ScoreQuad:
        return self.solve_mask(self.graph.full_mask)

    def solve_position(self, p: Position) -> ScoreQuad:
        """
        Scores of the game on the alive vertices of ``p``.

        Credits already banked by ``p`` are not part of that game and are left out.
        """
        self._check_base(p)
        return self.solve_mask(p.alive)

    def solve_mask(self, alive: int) -> ScoreQuad:
        started = time.perf_counter()
        n = alive.bit_count()
        if self.options.mode is SolveMode.RAW:
            s_l1, s_l2 = self._value(alive)
            quad = ScoreQuad.from_left(n, s_l1, s_l2)
        else:
            core, credit_l, credit_r = reduce_mask_of(self.graph, alive)
            quad = self._core_quad(core).with_credits(credit_l, credit_r)
        self.last_elapsed_ms = (time.perf_counter() - started) * 1000.0
        logger.debug(
            f"🔍 Solved {n} vertices: Ls={quad.ls} Rs={quad.rs} "
            f"({len(self.memo)} memo entries, {self.last_elapsed_ms:.1f} ms)"
        )
        return quad

    def rel_scores(self) -> RelScores:
        quad = self.solve()
        quad.check()
        return quad.rel

    def incentive(self) -> int:
        return self.rel_scores().incentive

    def best_move(self, p: Position, mover: Color) -> MoveChoice:
        """
        Optimal move of ``mover`` in ``p``, lowest id among equally good moves.

        Every vertex of the mover's colour is a candidate, forced ones included,
        and each child is scored exactly in the solver's mode.

        Raises:
            NoMoveError: if the mover has no alive vertex
        """
        self._check_base(p)
        candidates = list(iter_bits(p.alive_of(mover)))
        if not candidates:
            raise NoMoveError(f"{mover.player_name} has no vertex to play")

        total = self.solve_mask(p.alive)
        best: Optional[MoveChoice] = None
        for v in candidates:
            closure = move_closure_of(self.graph, p.alive, v)
            choice = MoveChoice(
                vertex=v,
                label=self.graph.labels[v],
                mover=mover,
                captured=closure.bit_count(),
                child=self.solve_mask(p.alive & ~closure),
                total=total,
            )
            if best is None or choice.achieved > best.achieved:
                best = choice

        expected = total.s_l1 if mover is Color.L else total.s_r1
        if best.achieved != expected:
            raise AuditError(
                f"best move {best.vertex} reaches {best.achieved}, position promises {expected}"
            )
        return best

    @property
    def memo_entries(self) -> int:
        extra = self._segment_solver.memo_entries if self._segment_solver is not None else 0
        return len(self.memo) + extra

    def get_stats(self) -> Dict[str, Any]:
        stats = self.memo.get_stats()
        stats.update(mode=self.options.mode.value, memo_entries=self.memo_entries,
                     elapsed_ms=self.last_elapsed_ms)
        return stats

    # Search

    def _core_quad(self, core: int) -> ScoreQuad:
        if not core:
            return ZERO
        s_l1, s_l2 = self._value(core)
        return ScoreQuad.from_left(core.bit_count(), s_l1, s_l2)

    def _segment_shaped(self, alive: int) -> bool:
        """Cheap necessary condition for a segment sum: sources in L, sinks in R, degree <= 2."""
        graph = self.graph
        for v in iter_bits(alive):
            succ = graph.succ_masks[v] & alive
            pred = graph.pred_masks[v] & alive
            if graph.colors[v] is Color.L:
                if pred or succ.bit_count() > 2:
                    return False
            elif succ or pred.bit_count() > 2:
                return False
        return True

    def _segment_scores(self, core: int) -> Optional[RelScores]:
        from families.segments import recognize_segments
        from families.segment_solver import SegmentSumSolver

        config = recognize_segments(self.graph, core)
        if config is None:
            return None
        if self._segment_solver is None:
            self._segment_solver = SegmentSumSolver()
        logger.debug(f"🔍 Routing segment sum {config.describe()} to the segment solver")
        return self._segment_solver.rel_scores(config)

    def _routed(self, key: int) -> Optional[Entry]:
        """Memo entry of a relevant segment-sum position, from the segment solver."""
        if self.options.mode is SolveMode.RAW or not self.options.route_segments:
            return None
        if not self._segment_shaped(key):
            return None
        rel = self._segment_scores(key)
        if rel is None:
            return None
        quad = ScoreQuad.from_rel(key.bit_count(), rel)
        entry = (quad.s_l1, quad.s_l2)
        self._store(key, entry)
        return entry

    def _value(self, key: int) -> Entry:
        entry = self.memo.get(key)
        if entry is not None:
            return entry
        base = self._base(key)
        if base is not None:
            return base
        routed = self._routed(key)
        if routed is not None:
            return routed
        if self.options.parallel_root:
            self._evaluate_parallel(key)
        else:
            self._evaluate(key)
        return self.memo.peek(key)

    def _base(self, alive: int) -> Optional[Entry]:
        """Values fixed without search: empty game, or one colour missing."""
        if not alive:
            return (0, 0)
        if not alive & self.graph.left_mask:
            return (0, 0)
        if not alive & self.graph.right_mask:
            n = alive.bit_count()
            return (n, n)
        return None

    def _lookup(self, alive: int) -> Entry:
        entry = self.memo.peek(alive)
        return entry if entry is not None else self._base(alive)

    def _options(self, alive: int, mover: Color) -> List[Option]:
        graph = self.graph
        if self.options.mode is SolveMode.RAW:
            result = []
            for v in iter_bits(alive & graph.color_mask(mover)):
                closure = move_closure_of(graph, alive, v)
                result.append((closure.bit_count(), alive & ~closure))
            return result

        if self.options.pruning:
            moves = dominant_moves_of(graph, alive, mover)
        else:
            moves = []
            for v in iter_bits(alive & graph.color_mask(mover)):
                closure, forced_l, forced_r = removal_masks_of(graph, alive, v)
                moves.append((v, closure | forced_l | forced_r))

        if self.options.check_removals:
            for v, mask in moves:
                alternative = alternative_removal_mask_of(graph, alive, v)
                if alternative != mask:
                    raise AuditError(f"removal sets disagree for vertex {v} in position {alive:#x}")
        return [(mask.bit_count(), alive & ~mask) for _, mask in moves]

    def _expand(self, alive: int) -> Tuple[List[Option], List[Option]]:
        return self._options(alive, Color.L), self._options(alive, Color.R)

    def _combine(self, expansion: Tuple[List[Option], List[Option]]) -> Entry:
        left_options, right_options = expansion
        s_l1 = max(gain + self._lookup(child)[1] for gain, child in left_options)
        s_l2 = min(self._lookup(child)[0] for _, child in right_options)
        return s_l1, s_l2

    def _store(self, key: int, value: Entry) -> None:
        if self.options.audit:
            quad = ScoreQuad.from_left(key.bit_count(), *value)
            quad.check()
            if self.options.mode is SolveMode.RELEVANT and not quad.is_nonzugzwang:
                raise AuditError(f"position {key:#x} is a zugzwang: {quad}")
        self.memo.put(key, value)

    def _evaluate(self, root: int) -> None:
        """Post-order evaluation of ``root`` with an explicit stack."""
        stack = [root]
        pending: Dict[int, Tuple[List[Option], List[Option]]] = {}
        while stack:
            key = stack[-1]
            if key in self.memo:
                stack.pop()
                continue
            base = self._base(key)
            if base is not None:
                stack.pop()
                continue
            expansion = pending.get(key)
            if expansion is None:
                if self._routed(key) is not None:
                    stack.pop()
                    continue
                expansion = self._expand(key)
                pending[key] = expansion
                missing = [
                    child
                    for _, child in expansion[0] + expansion[1]
                    if self._base(child) is None and self.memo.get(child) is None
                ]
                if missing:
                    stack.extend(missing)
                    continue
            self._store(key, self._combine(expansion))
            del pending[key]
            stack.pop()

    def _evaluate_parallel(self, root: int) -> None:
        left_options, right_options = self._expand(root)
        children = sorted({child for _, child in left_options + right_options})
        logger.debug(f"🔍 Evaluating {len(children)} root children on {self.options.workers} workers")
        with ThreadPoolExecutor(max_workers=self.options.workers) as pool:
            list(pool.map(self._evaluate, children))
        self._store(root, self._combine((left_options, right_options)))

    def _check_base(self, p: Position) -> None:
        if p.base is not self.graph and p.base != self.graph:
            raise ValueError("position belongs to a different base graph")


# Module-level conveniences

def solve(graph: GameGraph, options: Optional[SolveOptions] = None) -> ScoreQuad:
    return InfluenceSolver(graph, options).solve()


def rel_scores(graph: GameGraph, options: Optional[SolveOptions] = None) -> RelScores:
    return InfluenceSolver(graph, options).rel_scores()


def incentive(graph: GameGraph, options: Optional[SolveOptions] = None) -> int:
    return InfluenceSolver(graph, options).incentive()


def best_move(p: Position, mover: Color, options: Optional[SolveOptions] = None) -> MoveChoice:
    return InfluenceSolver(p.base, options).best_move(p, mover)


def rel_scores_direct(graph: GameGraph) -> RelScores:
    """
    Left- and Right-score from the relative recursion on the relevant core:

        Ls(A) = max over Left moves x of |Rmv(x)| + Rs(A - Rmv(x))
        Rs(A) = min over Right moves y of Ls(A - Rmv(y)) - |Rmv(y)|

    Independent of the absolute-score search and used to cross-check it.
    """
    core, credit_l, credit_r = reduce_mask_of(graph, graph.full_mask)

    @lru_cache(maxsize=None)
    def rel(alive: int) -> Tuple[int, int]:
        if not alive:
            return 0, 0
        ls = max(
            mask.bit_count() + rel(alive & ~mask)[1]
            for mask in _removal_masks(graph, alive, Color.L)
        )
        rs = min(
            rel(alive & ~mask)[0] - mask.bit_count()
            for mask in _removal_masks(graph, alive, Color.R)
        )
        return ls, rs

    ls, rs = rel(core)
    shift = credit_l - credit_r
    return RelScores(ls + shift, rs + shift)


def _removal_masks(graph: GameGraph, alive: int, mover: Color) -> List[int]:
    masks = []
    for v in iter_bits(alive & graph.color_mask(mover)):
        closure, forced_l, forced_r = removal_masks_of(graph, alive, v)
        masks.append(closure | forced_l | forced_r)
    return masks
