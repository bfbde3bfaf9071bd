"""Check records and reports shared by the verification routines and the CLI."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

PASS, FAIL, FLAGGED = "pass", "fail", "flagged"


def jsonable(x):
    """Convert exact values into stable JSON-friendly forms."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_text"):
        return x.to_text()
    if hasattr(x, "to_lists"):
        return x.to_lists()
    return str(x)


@dataclass
class Check:
    name: str
    claim: str
    status: str
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def as_dict(self) -> dict:
        return {"name": self.name, "claim": self.claim, "status": self.status,
                "details": jsonable(self.details)}


@dataclass
class Report:
    command: str
    parameters: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    timing: float | None = None

    def add(self, name: str, claim: str, ok: bool, details=None, flag: bool = False) -> Check:
        """Record a check; ``flag`` marks a surfaced discrepancy that does not fail the run."""
        status = FLAGGED if flag and ok else (PASS if ok else FAIL)
        chk = Check(name, claim, status, dict(details or {}))
        self.checks.append(chk)
        return chk

    def extend(self, other: Report, prefix: str = "") -> Report:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.claim, c.status, c.details))
        return self

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def as_dict(self, with_timing: bool = True) -> dict:
        d = {"command": self.command,
             "parameters": jsonable(self.parameters),
             "passed": self.passed,
             "checks": [c.as_dict() for c in sorted(self.checks, key=lambda c: c.name)]}
        if with_timing:
            d["timing"] = self.timing
        return d

    def to_json(self, with_timing: bool = True) -> str:
        return json.dumps(self.as_dict(with_timing), indent=2, sort_keys=True, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"{self.command} {json.dumps(jsonable(self.parameters), sort_keys=True)}"]
        for c in sorted(self.checks, key=lambda c: c.name):
            lines.append(f"  [{c.status:7}] {c.name}: {c.claim}")
        lines.append("PASSED" if self.passed else "FAILED")
        if self.timing is not None:
            lines.append(f"time {self.timing:.2f}s")
        return "\n".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["name", "status", "claim"])
        for c in sorted(self.checks, key=lambda c: c.name):
            w.writerow([c.name, c.status, c.claim])
        return buf.getvalue()
