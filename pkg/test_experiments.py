#!/usr/bin/env python3
"""
Influence Experiment Tests

Settings loading, verification reports and the suite registry, with every
suite run once at small parameters.

Author: Influence Contributors
License: MIT
"""

import sys
import os
import csv
import json

# Add src to path
current_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.join(current_dir, 'src'))

import pytest

from experiments.registry import REQUIRED_ANCHORS, get_suite, missing_anchors, run_suite, suite_names
from experiments.report import ClaimStatus, VerifyReport, stable_hash, write_rows
from experiments.settings import DEFAULT_SETTINGS, PROJECT_ROOT, load_settings, results_dir, suite_params
from experiments.suites_segments import enumerate_configs
from graph_core.errors import FamilyParameterError, UnknownSuiteError

SMALL_PARAMS = {
    'example-game': {},
    'properties': {'instances': 5, 'max_n': 6},
    'milnor': {'pairs': 5, 'max_n': 5},
    'mode-equivalence': {'max_n': 4, 'exhaustive_n': 2, 'arc_sets': 1},
    'segment-table': {'max_n': 20},
    'segment-theorems': {'max_n': 30},
    'segment-sums': {'instances': 5, 'max_total': 12, 'max_k': 3},
    'segment-solver': {'max_total': 10, 'exhaustive_total': 8, 'samples': 3},
    'cycles': {'max_n': 14},
    'conjectures': {'max_n': 30},
    'trees': {'n_max': 0, 'c_max': 3},
    'quasi-paths': {'trials': 5, 'max_len': 10},
}


@pytest.fixture
def defaults():
    return json.loads(json.dumps(DEFAULT_SETTINGS))


# Settings

def test_missing_config_is_created_with_defaults(tmp_path):
    path = tmp_path / "config" / "influence_config.json"
    settings = load_settings(path)
    assert settings == DEFAULT_SETTINGS
    assert path.exists()
    with path.open() as f:
        assert json.load(f) == DEFAULT_SETTINGS


def test_config_sections_merge_over_defaults(tmp_path):
    path = tmp_path / "influence_config.json"
    path.write_text(json.dumps({'suites': {'cycles': {'max_n': 10}}, 'log_level': 'DEBUG'}))
    settings = load_settings(path)
    assert suite_params(settings, 'cycles') == {'max_n': 10}
    assert suite_params(settings, 'segment-table') == {'max_n': 80}
    assert settings['log_level'] == 'DEBUG'
    assert settings['solver'] == DEFAULT_SETTINGS['solver']


def test_broken_config_falls_back_to_defaults(tmp_path):
    path = tmp_path / "influence_config.json"
    path.write_text("{not json")
    assert load_settings(path) == DEFAULT_SETTINGS


def test_environment_overrides(tmp_path, monkeypatch):
    monkeypatch.setenv("INFLUENCE_RESULTS_DIR", str(tmp_path / "out"))
    monkeypatch.setenv("INFLUENCE_LOG_LEVEL", "debug")
    settings = load_settings(tmp_path / "influence_config.json")
    assert settings['log_level'] == "DEBUG"
    assert results_dir(settings) == tmp_path / "out"


def test_relative_results_dir_is_under_project_root(defaults):
    assert results_dir(defaults) == PROJECT_ROOT / "results"


# Reports

def test_report_claims_and_status():
    report = VerifyReport(suite="demo", seed=1)
    assert report.check("holds", "anchor-a", True, value=3)
    assert not report.check("open", "anchor-b", False, report_only=True)
    assert report.passed
    assert report.check_all("batch", "anchor-a", 4, [{'n': 2}, {'n': 3}]) is False
    assert not report.passed
    batch = report.claim("batch")
    assert batch.status is ClaimStatus.FAIL
    assert batch.witness == {'checked': 4, 'failures': 2, 'first_failure': {'n': 2}}
    assert report.counts() == {'pass': 1, 'fail': 1, 'report-only': 1}
    assert report.anchors == ["anchor-a", "anchor-b"]
    with pytest.raises(KeyError):
        report.claim("missing")


def test_digest_ignores_timing():
    first = VerifyReport(suite="demo", seed=3, params={'n': 1})
    second = VerifyReport(suite="demo", seed=3, params={'n': 1})
    for report in (first, second):
        report.check("c", "a", True, x=[1, 2])
    first.elapsed_ms = 12.0
    second.started_at = "2000-01-01T00:00:00"
    assert first.digest() == second.digest()
    assert stable_hash({'b': 1, 'a': 2}) == stable_hash({'a': 2, 'b': 1})


def test_report_writes_json_and_csv(tmp_path):
    report = VerifyReport(suite="demo")
    report.check("c", "a", True)
    report.rows = [{'n': 1, 'ls': 2}, {'n': 2, 'rs': -2}]
    written = report.write(tmp_path)
    assert [p.name for p in written] == ["demo.json", "demo.csv"]
    data = json.loads((tmp_path / "demo.json").read_text())
    assert data['passed'] and data['digest'] == report.digest()
    with (tmp_path / "demo.csv").open() as f:
        rows = list(csv.reader(f))
    assert rows[0] == ['n', 'ls', 'rs']


def test_write_rows_creates_parents(tmp_path):
    path = write_rows(tmp_path / "deep" / "rows.csv", [{'a': 1}])
    assert path.read_text().splitlines() == ['a', '1']


# Registry

def test_every_anchor_is_covered():
    assert missing_anchors() == []
    assert len(set(REQUIRED_ANCHORS)) == len(REQUIRED_ANCHORS)


def test_suite_listing():
    assert suite_names() == sorted(SMALL_PARAMS)
    assert get_suite('properties').seeded
    assert not get_suite('segment-table').seeded
    assert get_suite('cycles').description


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        get_suite('no-such-suite')
    with pytest.raises(UnknownSuiteError):
        run_suite('no-such-suite', settings={})


@pytest.mark.parametrize("name", sorted(SMALL_PARAMS))
def test_suites_pass_at_small_parameters(name, defaults):
    report = run_suite(name, params=SMALL_PARAMS[name], seed=7, settings=defaults)
    assert report.suite == name
    assert report.claims
    assert report.passed, [c.to_dict() for c in report.hard_failures]
    assert set(report.anchors) <= set(get_suite(name).anchors)


def test_seeded_suites_are_reproducible(defaults):
    params = SMALL_PARAMS['properties']
    first = run_suite('properties', params=params, seed=5, settings=defaults)
    second = run_suite('properties', params=params, seed=5, settings=defaults)
    assert first.digest() == second.digest()
    assert first.seed == 5


def test_configured_seed_is_used(defaults):
    report = run_suite('quasi-paths', params=SMALL_PARAMS['quasi-paths'], settings=defaults)
    assert report.seed == DEFAULT_SETTINGS['seeds']['quasi-paths']


def test_example_game_claims(defaults):
    report = run_suite('example-game', settings=defaults)
    assert report.claim('incentive').witness == {'incentive': 8}
    assert report.claim('forced-credited-to-mover').holds


def test_suite_aliases(defaults):
    figure = run_suite('figure1', settings=defaults)
    assert figure.suite == 'example-game' and figure.passed
    table = run_suite('table1', params={'max_n': 38}, settings=defaults)
    assert table.suite == 'segment-table' and table.passed
    assert table.claim('published-values').witness['checked'] == 38
    assert get_suite('table1') is get_suite('segment-table')


def test_segment_table_facts_up_to_80(defaults):
    report = run_suite('segment-table', settings=defaults)
    assert report.params == {'max_n': 80}
    for claim_id in ('ls-period-four-from-38-to-76', 'rs-period-four-from-38-to-76', 'rs-77-minus-five'):
        claim = report.claim(claim_id)
        assert claim.status is ClaimStatus.PASS, claim.to_dict()
    assert report.claim('rs-77-minus-five').witness == {'rs': -5}
    assert report.elapsed_ms < 30_000


def test_segment_solver_is_exhaustive_by_default(defaults):
    assert suite_params(defaults, 'segment-solver')['exhaustive_total'] == 22
    report = run_suite('segment-solver', params={'max_total': 12}, seed=7, settings=defaults)
    assert report.passed
    claim = report.claim('general-equals-segment-exhaustive')
    assert claim.witness['checked'] == len(list(enumerate_configs(12, 3)))
    assert 'general-equals-segment-sampled' not in [c.claim_id for c in report.claims]
    assert report.claim('single-segment-bounds-sound').holds


def test_mode_equivalence_is_exhaustive_to_four(defaults):
    assert suite_params(defaults, 'mode-equivalence')['exhaustive_n'] >= 4
    report = run_suite('mode-equivalence', params={'max_n': 4}, seed=7, settings=defaults)
    assert report.passed
    assert all(row['exhaustive'] for row in report.rows)
    assert report.claim('raw-equals-relevant-n4').witness['checked'] == 2 ** 12 * 2 ** 4


def test_negation_checked_on_every_property_instance(defaults):
    assert suite_params(defaults, 'properties')['negation_max_n'] == 10
    report = run_suite('properties', params={'instances': 10, 'max_n': 10}, seed=7, settings=defaults)
    assert report.passed
    assert report.claim('plus-negative-is-zero').witness['checked'] == 10


def test_measured_tree_ratios_are_monotone(defaults):
    report = run_suite('trees', params={'n_max': 1, 'c_max': 2}, settings=defaults)
    assert report.passed
    for claim_id in ('measured-proportion-falls-with-fanout', 'measured-share-rises-with-depth',
                     'measured-share-gap-rises-with-depth'):
        claim = report.claim(claim_id)
        assert claim.status is ClaimStatus.PASS
        assert claim.witness['checked'] == len(report.rows)


def test_caps_are_enforced(defaults):
    with pytest.raises(FamilyParameterError):
        run_suite('cycles', params={'max_n': 100}, settings=defaults)
    with pytest.raises(FamilyParameterError):
        run_suite('properties', params={'max_n': 20}, settings=defaults)
    with pytest.raises(FamilyParameterError):
        run_suite('trees', params={'n_max': 3}, settings=defaults)


def main():
    """Run all tests"""
    print("🚀 Influence Experiment Tests")
    print("=" * 40)
    return pytest.main([__file__, "-q"]) == 0


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
