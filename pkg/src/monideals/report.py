"""Deterministic run reports and their JSON encoding.

Reports with identical input and seed serialize to byte-identical JSON:
keys are sorted, collections are canonically ordered, and wall-clock
timing is deliberately kept out of the payload (the CLI prints it to
stderr instead).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import Monomial, MonomialIdeal, MonomialPrime, sorted_primes
from .decomp import Decomposition
from .properties import AssSnapshot, CornerSet, PropertyReport, Verdict
from .verify import CheckRecord, SweepResult
from .version import __version__

SCHEMA = "monideals-report/1"

STATUS_OK = "ok"
STATUS_REFUTED = "refuted"
STATUS_HYPOTHESIS = "hypothesis-not-met"
STATUS_INPUT_ERROR = "input-error"
STATUS_BUDGET = "budget-exceeded"


def monomial_json(m: Monomial) -> str:
    return str(m)


def ideal_json(I: MonomialIdeal) -> list[str]:
    return [str(g) for g in I.gens]


def prime_json(p: MonomialPrime) -> list[str]:
    return [p.ring.names[i - 1] for i in sorted(p.vars)]


def primes_json(primes) -> list[list[str]]:
    return [prime_json(p) for p in sorted_primes(primes)]


def decomposition_json(d: Decomposition) -> list[dict]:
    return [
        {c.ring.names[i - 1]: a for i, a in c.pure_powers} for c in d.components
    ]


def verdict_json(v: Verdict) -> dict:
    out = {
        "property": v.property,
        "status": v.status,
        "bound": v.bound,
    }
    if v.fail_power is not None:
        out["fail_power"] = v.fail_power
    if v.fail_prime is not None:
        out["fail_prime"] = prime_json(v.fail_prime)
    if v.fail_monomial is not None:
        out["fail_monomial"] = str(v.fail_monomial)
    if v.certificate is not None:
        out["certificate"] = v.certificate
    if v.note:
        out["note"] = v.note
    return out


def snapshot_json(s: AssSnapshot) -> dict:
    return {"power": s.power, "ass": [prime_json(p) for p in s.primes]}


def snapshots_json(snapshots) -> list[dict]:
    return [snapshot_json(s) for s in snapshots]


def corners_json(c: CornerSet) -> dict:
    return {"power": c.power, "corners": [str(z) for z in c.corners]}


def property_report_json(r: PropertyReport) -> dict:
    return {
        "ideal": ideal_json(r.ideal),
        "max_power": r.max_power,
        "verdicts": [verdict_json(v) for v in r.verdicts],
        "snapshots": snapshots_json(r.snapshots),
    }


def sweep_json(s: SweepResult) -> dict:
    return {
        "suite": s.suite,
        "instances": s.instances,
        "checked": s.checked,
        "skipped": s.skipped,
        "violations": list(s.violations),
        "clean": s.clean,
    }


def check_records_json(records: list[CheckRecord]) -> list[dict]:
    return [
        {"name": r.name, "pass": r.passed, "expected": r.expected, "actual": r.actual}
        for r in records
    ]


@dataclass
class RunReport:
    """One CLI invocation's deterministic output."""

    command: str
    target: str | None
    options: dict
    input_digest: str | None
    results: dict
    status: str
    exit_code: int

    def to_json(self) -> str:
        payload = {
            "schema": SCHEMA,
            "tool": {"name": "monideals", "version": __version__},
            "command": self.command,
            "target": self.target,
            "options": self.options,
            "input": {"digest": self.input_digest},
            "results": self.results,
            "status": self.status,
            "exit_code": self.exit_code,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
