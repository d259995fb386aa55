"""Deterministic report serialization: canonical JSON bodies and CSV tables.

Result bodies contain no timestamps and order every collection, so repeated
runs on the same input are byte-identical; wall-clock timing goes in a
separate field that comparisons ignore.
"""

from __future__ import annotations

import json
from typing import Iterable

from . import __version__
from .engel import SinkReport
from .group import GroupTable
from .verify import CSV_COLUMNS, CheckResult, ScanRow


def canonical_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def report_envelope(command: str, spec_echo: str | None, results, timing_ms: float) -> dict:
    body = {
        "tool": {"name": "sinklab", "version": __version__},
        "command": command,
        "results": results,
    }
    if spec_echo is not None:
        body["spec"] = spec_echo
    body["timing_ms"] = round(timing_ms, 3)
    return body


def sink_payload(G: GroupTable, report: SinkReport) -> dict:
    return {
        "element": G.labels[report.g],
        "element_index": report.g,
        "size_full": report.size_full,
        "size_nontrivial": report.size_nontrivial,
        "sink": sorted(G.labels[z] for z in report.sink),
        "witnesses": {
            G.labels[z]: {"direction": G.labels[x], "n": n}
            for z, (x, n) in sorted(report.witnesses.items())
        },
    }


def check_payload(G: GroupTable | None, result: CheckResult) -> dict:
    payload = {
        "check": result.check,
        "group": result.group,
        "passed": result.passed,
        "stats": dict(sorted(result.stats.items())),
    }
    if result.counterexample is None:
        payload["counterexample"] = None
    else:
        ce = dict(sorted(result.counterexample.items()))
        if G is not None:
            labelled = {}
            for key, value in ce.items():
                if isinstance(value, int) and key not in ("k", "m", "n", "s") and 0 <= value < G.n:
                    labelled[key] = {"index": value, "label": G.labels[value]}
                else:
                    labelled[key] = value
            ce = labelled
        payload["counterexample"] = ce
    return payload


def scan_csv(rows: Iterable[ScanRow]) -> str:
    lines = [CSV_COLUMNS]
    lines.extend(",".join(row.csv_values()) for row in rows)
    return "\n".join(lines) + "\n"
