#!/usr/bin/env python3
"""
Influence - Solver Options

Author: Influence Contributors
License: MIT
"""

from dataclasses import dataclass, replace
from typing import Any, Dict

from graph_core.moves import MoveMode

SolveMode = MoveMode


@dataclass(frozen=True)
class SolveOptions:
    """
    Switches of one solver instance. None of them can change a score.

    Attributes:
        mode (SolveMode): raw closures, or relevant reduction with Rmv moves
        pruning (bool): drop dominated moves (relevant mode only)
        parallel_root (bool): evaluate the root's children on a thread pool
        audit (bool): check constant-sum, parity and nonzugzwang on every memo entry
        route_segments (bool): hand pure segment sums to the segment solver
        check_removals (bool): compare both Rmv characterizations on every move
        workers (int): thread pool size for parallel_root
    """

    mode: SolveMode = SolveMode.RELEVANT
    pruning: bool = True
    parallel_root: bool = False
    audit: bool = False
    route_segments: bool = True
    check_removals: bool = False
    workers: int = 4

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", SolveMode(self.mode))
        if self.workers < 1:
            raise ValueError("workers must be at least 1")

    @classmethod
    def from_settings(cls, settings: Dict[str, Any], **overrides: Any) -> "SolveOptions":
        solver = settings.get("solver", {})
        options = cls(
            mode=SolveMode(solver.get("mode", SolveMode.RELEVANT.value)),
            pruning=bool(solver.get("pruning", True)),
            parallel_root=bool(solver.get("parallel_root", False)),
            audit=bool(solver.get("audit", False)),
            route_segments=bool(solver.get("route_segments", True)),
            workers=int(solver.get("workers", 4)),
        )
        return replace(options, **overrides) if overrides else options

    def raw(self) -> "SolveOptions":
        return replace(self, mode=SolveMode.RAW)

    def plain(self) -> "SolveOptions":
        """Same mode with every shortcut switched off; used as a reference."""
        return replace(self, pruning=False, parallel_root=False, route_segments=False)
