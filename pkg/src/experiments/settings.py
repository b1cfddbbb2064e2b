#!/usr/bin/env python3
"""
Influence - Settings

JSON configuration for the solver, the verification suites and the CLI.
The file under ``config/`` is merged over the defaults below and created with
them when it does not exist yet. ``config/influence.env`` may override the
results directory and the log level.

Author: Influence Contributors
License: MIT
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parents[2]
CONFIG_FILE = PROJECT_ROOT / "config" / "influence_config.json"
ENV_FILE = PROJECT_ROOT / "config" / "influence.env"

# Desk-scale caps. Exhaustive general-graph search visits up to 2^n alive
# subsets, so 22 vertices is the largest size that stays interactive.
MAX_GENERAL_VERTICES = 22
# Segment sums are keyed symbolically; n = 80 is the longest quoted sequence.
MAX_SEGMENT_TOTAL = 80
# J(2, c) already has more than 60 vertices; only depth 0 and 1 are solved.
MAX_EXACT_TREE_DEPTH = 1
MAX_PROPERTY_VERTICES = 12
# Every colouring of every arc set is enumerated, 2^n colourings per arc set.
MAX_MODE_EQUIVALENCE_VERTICES = 7

DEFAULT_SETTINGS: Dict[str, Any] = {
    'solver': {
        'mode': 'relevant',
        'pruning': True,
        'parallel_root': False,
        'audit': False,
        'route_segments': True,
        'workers': 4,
    },
    'caps': {
        'max_general_vertices': MAX_GENERAL_VERTICES,
        'max_segment_total': MAX_SEGMENT_TOTAL,
        'max_exact_tree_depth': MAX_EXACT_TREE_DEPTH,
        'max_property_vertices': MAX_PROPERTY_VERTICES,
        'max_mode_equivalence_vertices': MAX_MODE_EQUIVALENCE_VERTICES,
    },
    'seeds': {
        'properties': 101,
        'milnor': 202,
        'mode-equivalence': 303,
        'segment-sums': 404,
        'segment-solver': 505,
        'quasi-paths': 606,
    },
    'suites': {
        'properties': {'instances': 100, 'max_n': 10, 'negation_max_n': 10},
        'milnor': {'pairs': 100, 'max_n': 8},
        'mode-equivalence': {'max_n': MAX_MODE_EQUIVALENCE_VERTICES, 'exhaustive_n': 4, 'arc_sets': 3},
        'segment-table': {'max_n': MAX_SEGMENT_TOTAL},
        'segment-theorems': {'max_n': MAX_SEGMENT_TOTAL},
        'segment-sums': {'instances': 100, 'max_total': MAX_GENERAL_VERTICES, 'max_k': 6},
        'segment-solver': {'max_total': MAX_GENERAL_VERTICES, 'max_parts': 3, 'exhaustive_total': MAX_GENERAL_VERTICES},
        'cycles': {'max_n': 40},
        'conjectures': {'max_n': MAX_SEGMENT_TOTAL},
        'trees': {'n_max': MAX_EXACT_TREE_DEPTH, 'c_max': 6},
        'quasi-paths': {'trials': 500, 'max_len': 20},
    },
    'results_dir': 'results',
    'log_level': 'INFO',
}


def load_settings(config_file: Optional[Union[str, Path]] = None) -> Dict[str, Any]:
    """
    Load settings, writing the defaults when the file is missing.

    Top-level keys of the file replace the defaults; nested sections are
    merged one level deep so that a file may override a single suite.

    Args:
        config_file: JSON file to read, ``config/influence_config.json`` by default

    Returns:
        Dict[str, Any]: the effective settings
    """
    path = Path(config_file) if config_file is not None else CONFIG_FILE
    settings = json.loads(json.dumps(DEFAULT_SETTINGS))

    if path.exists():
        try:
            with path.open("r", encoding="utf-8") as f:
                loaded = json.load(f)
            for key, value in loaded.items():
                if isinstance(value, dict) and isinstance(settings.get(key), dict):
                    settings[key] = {**settings[key], **value}
                else:
                    settings[key] = value
            logger.info(f"✅ Configuration loaded from {path}")
        except (OSError, json.JSONDecodeError) as e:
            logger.warning(f"⚠️ Error loading config: {e}, using defaults")
    else:
        logger.info(f"📄 Creating default configuration at {path}")
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with path.open("w", encoding="utf-8") as f:
                json.dump(DEFAULT_SETTINGS, f, indent=2)
        except OSError as e:
            logger.warning(f"⚠️ Could not write default configuration: {e}")

    if ENV_FILE.exists():
        load_dotenv(ENV_FILE)
    if os.getenv("INFLUENCE_RESULTS_DIR"):
        settings['results_dir'] = os.environ["INFLUENCE_RESULTS_DIR"]
    if os.getenv("INFLUENCE_LOG_LEVEL"):
        settings['log_level'] = os.environ["INFLUENCE_LOG_LEVEL"].upper()
    return settings


def suite_params(settings: Dict[str, Any], suite: str) -> Dict[str, Any]:
    return dict(settings.get('suites', {}).get(suite, {}))


def suite_seed(settings: Dict[str, Any], suite: str) -> Optional[int]:
    return settings.get('seeds', {}).get(suite)


def results_dir(settings: Dict[str, Any]) -> Path:
    directory = Path(settings.get('results_dir', 'results'))
    return directory if directory.is_absolute() else PROJECT_ROOT / directory
