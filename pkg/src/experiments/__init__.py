#!/usr/bin/env python3
"""
Influence - Experiments Package

Settings, machine-readable verification reports and the registry of
verification suites. Suite modules load lazily through the registry.

Author: Influence Contributors
License: MIT
"""

from .report import Claim, ClaimStatus, VerifyReport, graph_witness, stable_hash, write_rows
from .settings import DEFAULT_SETTINGS, load_settings, results_dir, suite_params, suite_seed
from .registry import REQUIRED_ANCHORS, SUITE_ALIASES, get_suite, missing_anchors, register_suite, run_suite, suite_names

__all__ = [
    'Claim', 'ClaimStatus', 'VerifyReport', 'graph_witness', 'stable_hash', 'write_rows',
    'DEFAULT_SETTINGS', 'load_settings', 'results_dir', 'suite_params', 'suite_seed',
    'REQUIRED_ANCHORS', 'SUITE_ALIASES', 'get_suite', 'missing_anchors', 'register_suite', 'run_suite', 'suite_names',
]
