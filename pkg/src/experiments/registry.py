#!/usr/bin/env python3
"""
Influence - Suite Registry

Verification suites register themselves with the anchors they cover. Suite
modules are imported on first lookup so that importing the package stays
cheap and free of import cycles with the solver.

Author: Influence Contributors
License: MIT
"""

import importlib
import logging
import time
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

from graph_core.errors import UnknownSuiteError

from .report import VerifyReport
from .settings import load_settings, suite_params, suite_seed

logger = logging.getLogger(__name__)

SUITE_MODULES = (
    "experiments.suites_rules",
    "experiments.suites_segments",
    "experiments.suites_position",
)

# Every family of statements the harness must exercise. A registered suite
# declares which of these it covers; missing_anchors() lists the uncovered ones.
REQUIRED_ANCHORS = (
    "example-game-scores",
    "forced-after-move",
    "score-parity",
    "nonzugzwang",
    "closure-evolution",
    "move-commutation",
    "symmetric-removal-membership",
    "subposition-monotonicity",
    "removal-characterizations",
    "strong-components-in-closures",
    "relative-recursion",
    "sum-score-bounds",
    "game-plus-negative-is-zero",
    "negative-game-scores",
    "search-determinism",
    "mode-equivalence",
    "segment-score-table",
    "segment-score-sets",
    "segment-class-refinements",
    "segment-first-player-wins",
    "segment-sum-score-sets",
    "two-segment-identities",
    "special-segment-sums",
    "segment-focus-inequality",
    "segment-move-sizes",
    "segment-solver-equivalence",
    "segment-pruning-soundness",
    "segment-cancellation",
    "cycle-scores",
    "cycle-from-segment",
    "segment-sequences-ultimately-periodic",
    "segment-ls-one-mod-four",
    "segment-ls-zero-mod-four",
    "segment-rare-scores",
    "tree-counts",
    "tree-leaf-decomposition",
    "tree-score-bound",
    "tree-score-recurrence",
    "tree-ratio-trend",
    "quasi-path-share-bound",
)

SuiteFunction = Callable[..., VerifyReport]

# Short names accepted wherever a suite name is.
SUITE_ALIASES: Dict[str, str] = {
    "figure1": "example-game",
    "table1": "segment-table",
}


@dataclass(frozen=True)
class SuiteEntry:
    """
    Attributes:
        name (str): name used on the command line
        function (SuiteFunction): builds the report from ``seed`` and parameters
        anchors (Tuple[str, ...]): anchors the suite's claims may carry
        seeded (bool): whether the suite draws random instances
        description (str): one line for listings
        cap (Optional[str]): key of the desk-scale cap passed as ``cap``
    """

    name: str
    function: SuiteFunction
    anchors: Tuple[str, ...]
    seeded: bool
    description: str
    cap: Optional[str] = None


_SUITES: Dict[str, SuiteEntry] = {}
_loaded = False


def register_suite(
    name: str,
    anchors: Tuple[str, ...],
    seeded: bool = False,
    description: str = "",
    cap: Optional[str] = None,
) -> Callable[[SuiteFunction], SuiteFunction]:
    """Decorator registering a suite function under ``name``."""

    def decorator(function: SuiteFunction) -> SuiteFunction:
        if name in _SUITES and _SUITES[name].function is not function:
            raise ValueError(f"suite {name} registered twice")
        unknown = [a for a in anchors if a not in REQUIRED_ANCHORS]
        if unknown:
            raise ValueError(f"suite {name} declares unknown anchors {unknown}")
        doc = (function.__doc__ or "").strip().splitlines()
        _SUITES[name] = SuiteEntry(name, function, tuple(anchors), seeded,
                                   description or (doc[0] if doc else ""), cap)
        return function

    return decorator


def _load_suites() -> None:
    global _loaded
    if _loaded:
        return
    for module in SUITE_MODULES:
        importlib.import_module(module)
    _loaded = True
    logger.debug(f"🔍 {len(_SUITES)} verification suites registered")


def suite_names() -> List[str]:
    _load_suites()
    return sorted(_SUITES)


def get_suite(name: str) -> SuiteEntry:
    """Registered suite under ``name`` or one of its aliases."""
    _load_suites()
    entry = _SUITES.get(SUITE_ALIASES.get(name, name))
    if entry is None:
        raise UnknownSuiteError(f"unknown suite '{name}'; known suites: {', '.join(sorted(_SUITES))}")
    return entry


def missing_anchors() -> List[str]:
    """Required anchors that no registered suite covers."""
    _load_suites()
    covered = {a for entry in _SUITES.values() for a in entry.anchors}
    return [a for a in REQUIRED_ANCHORS if a not in covered]


def run_suite(
    name: str,
    params: Optional[Dict[str, Any]] = None,
    seed: Optional[int] = None,
    settings: Optional[Dict[str, Any]] = None,
) -> VerifyReport:
    """
    Run one registered suite.

    Parameters and seed default to the ``suites`` and ``seeds`` sections of
    the settings; explicit values override them.

    Args:
        name: registered suite name or alias
        params: suite parameters overriding the configured ones
        seed: seed overriding the configured one (seeded suites only)
        settings: loaded settings; read from disk when omitted

    Returns:
        VerifyReport: the suite's report with its elapsed time filled in

    Raises:
        UnknownSuiteError: if no suite is registered under ``name``
    """
    entry = get_suite(name)
    name = entry.name
    settings = settings if settings is not None else load_settings()
    effective = suite_params(settings, name)
    effective.update(params or {})
    if entry.seeded:
        effective["seed"] = seed if seed is not None else suite_seed(settings, name)
    if entry.cap is not None:
        effective.setdefault("cap", settings.get("caps", {}).get(entry.cap))

    logger.info(f"🔍 Running suite {name} with {effective}")
    started = time.perf_counter()
    report = entry.function(**effective)
    report.elapsed_ms = (time.perf_counter() - started) * 1000.0

    stray = [c.anchor for c in report.claims if c.anchor not in entry.anchors]
    if stray:
        raise ValueError(f"suite {name} produced claims under undeclared anchors {sorted(set(stray))}")
    logger.info(report.summary_line())
    return report
