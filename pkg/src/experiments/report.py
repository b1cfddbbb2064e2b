#!/usr/bin/env python3
"""
Influence - Verification Reports

A report collects the claims checked by one suite. Hard claims fail the run;
report-only claims (open conjectures, observations) never do. The hashed
payload leaves out timing so that two runs with the same seed produce the
same digest.

Author: Influence Contributors
License: MIT
"""

import csv
import hashlib
import json
import logging
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from graph_core.graph import GameGraph
from graph_core.graph_doc import serialize_graph

logger = logging.getLogger(__name__)


class ClaimStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    REPORT_ONLY = "report-only"


@dataclass
class Claim:
    """
    Outcome of one checked statement.

    Attributes:
        claim_id (str): unique id within the suite
        anchor (str): the family of statements the claim belongs to
        status (ClaimStatus): pass, fail or report-only
        holds (bool): whether the statement was observed to hold
        witness (Dict[str, Any]): values supporting the outcome
    """

    claim_id: str
    anchor: str
    status: ClaimStatus
    holds: bool
    witness: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'claim_id': self.claim_id,
            'anchor': self.anchor,
            'status': self.status.value,
            'holds': self.holds,
            'witness': self.witness,
        }


def canonical_json(value: Any) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def stable_hash(value: Any) -> str:
    return hashlib.sha256(canonical_json(value).encode("utf-8")).hexdigest()


def graph_witness(graph: GameGraph, **values: Any) -> Dict[str, Any]:
    """Reproducible witness: the graph document plus any scores."""
    witness = {'graph': serialize_graph(graph)}
    witness.update(values)
    return witness


@dataclass
class VerifyReport:
    """
    Machine-readable outcome of one verification suite.

    Attributes:
        suite (str): registered suite name
        seed (Optional[int]): seed of every random choice in the suite
        params (Dict[str, Any]): effective parameters
        claims (List[Claim]): checked statements in check order
        rows (List[Dict[str, Any]]): tabular extract written as CSV
        elapsed_ms (float): wall time, outside the hashed payload
        started_at (str): ISO timestamp, outside the hashed payload
    """

    suite: str
    seed: Optional[int] = None
    params: Dict[str, Any] = field(default_factory=dict)
    claims: List[Claim] = field(default_factory=list)
    rows: List[Dict[str, Any]] = field(default_factory=list)
    elapsed_ms: float = 0.0
    started_at: str = field(default_factory=lambda: datetime.now().isoformat())

    def check(
        self,
        claim_id: str,
        anchor: str,
        holds: bool,
        report_only: bool = False,
        **witness: Any,
    ) -> bool:
        """Record a claim and return whether it holds."""
        if report_only:
            status = ClaimStatus.REPORT_ONLY
        else:
            status = ClaimStatus.PASS if holds else ClaimStatus.FAIL
        self.claims.append(Claim(claim_id, anchor, status, bool(holds), dict(witness)))
        if status is ClaimStatus.FAIL:
            logger.error(f"❌ {self.suite}: claim {claim_id} failed ({anchor})")
        elif report_only and not holds:
            logger.warning(f"⚠️ {self.suite}: {claim_id} not observed ({anchor})")
        return bool(holds)

    def check_all(
        self,
        claim_id: str,
        anchor: str,
        checked: int,
        failures: Sequence[Dict[str, Any]],
        report_only: bool = False,
    ) -> bool:
        """
        Record one claim for a batch of instances.

        The witness keeps the instance count, the failure count and the first
        failing instance's witness.
        """
        witness: Dict[str, Any] = {'checked': checked, 'failures': len(failures)}
        if failures:
            witness['first_failure'] = failures[0]
        return self.check(claim_id, anchor, not failures, report_only=report_only, **witness)

    def merge(self, other: "VerifyReport", prefix: str = "") -> None:
        for claim in other.claims:
            self.claims.append(Claim(prefix + claim.claim_id, claim.anchor, claim.status,
                                     claim.holds, claim.witness))
        self.rows.extend(other.rows)

    @property
    def hard_failures(self) -> List[Claim]:
        return [c for c in self.claims if c.status is ClaimStatus.FAIL]

    @property
    def passed(self) -> bool:
        return not self.hard_failures

    @property
    def anchors(self) -> List[str]:
        return sorted({c.anchor for c in self.claims})

    def claim(self, claim_id: str) -> Claim:
        for c in self.claims:
            if c.claim_id == claim_id:
                return c
        raise KeyError(claim_id)

    def payload(self) -> Dict[str, Any]:
        """Everything that must be reproducible from the seed."""
        return {
            'suite': self.suite,
            'seed': self.seed,
            'params': self.params,
            'claims': [c.to_dict() for c in self.claims],
            'rows': self.rows,
        }

    def digest(self) -> str:
        return stable_hash(self.payload())

    def to_dict(self) -> Dict[str, Any]:
        data = self.payload()
        data.update(
            digest=self.digest(),
            passed=self.passed,
            counts=self.counts(),
            elapsed_ms=round(self.elapsed_ms, 3),
            started_at=self.started_at,
        )
        return data

    def counts(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in ClaimStatus}
        for c in self.claims:
            counts[c.status.value] += 1
        return counts

    def summary_line(self) -> str:
        counts = self.counts()
        mark = "✅" if self.passed else "❌"
        return (
            f"{mark} {self.suite}: {counts['pass']} passed, {counts['fail']} failed, "
            f"{counts['report-only']} report-only ({self.elapsed_ms:.0f} ms)"
        )

    def write(self, results_dir: Union[str, Path]) -> List[Path]:
        """Write ``<suite>.json`` and, when rows exist, ``<suite>.csv``."""
        directory = Path(results_dir)
        directory.mkdir(parents=True, exist_ok=True)
        written = []

        json_path = directory / f"{self.suite}.json"
        with json_path.open("w", encoding="utf-8") as f:
            json.dump(self.to_dict(), f, indent=2, ensure_ascii=False)
        written.append(json_path)

        if self.rows:
            csv_path = directory / f"{self.suite}.csv"
            write_rows(csv_path, self.rows)
            written.append(csv_path)

        logger.info(f"💾 Report for {self.suite} written to {directory}")
        return written


def write_rows(path: Union[str, Path], rows: Sequence[Dict[str, Any]]) -> Path:
    """CSV with the union of the rows' keys as header, in first-seen order."""
    columns: List[str] = []
    for row in rows:
        columns.extend(k for k in row if k not in columns)
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with target.open("w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=columns)
        writer.writeheader()
        writer.writerows(rows)
    return target
