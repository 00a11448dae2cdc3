"""Versioned JSON report envelope and serialization helpers.

Result payloads are deterministic for a fixed expression and configuration:
keys are sorted and no timestamps are embedded.
"""

from __future__ import annotations

import json

from .amalgam import AmalgamationRing
from .ideals import Ideal
from .rings import FiniteRing

SCHEMA_VERSION = 1

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema_version", "command", "results"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"type": "string"},
        "config": {"type": "object"},
        "instance": {
            "type": "object",
            "required": ["expression", "order"],
            "properties": {
                "expression": {"type": "string"},
                "order": {"type": "integer", "minimum": 2},
            },
        },
        "results": {"type": "object"},
    },
}


def ring_summary(R: FiniteRing) -> dict:
    out = {"name": R.name, "kind": R.kind, "order": R.order}
    if isinstance(R, AmalgamationRing):
        out["component_orders"] = {
            "A": R.A.order,
            "B": R.B.order,
            "J": len(R.J),
        }
    return out


def ideal_elements(I: Ideal) -> list[str]:
    return [I.ring.format_element(x) for x in I.elements]


def make_report(command: str, expression: str, R: FiniteRing, results: dict, config: dict | None = None) -> dict:
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "instance": {"expression": expression, **ring_summary(R)},
        "results": results,
    }
    if config is not None:
        report["config"] = config
    return report


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
