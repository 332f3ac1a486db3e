"""Itemized pass/fail reports shared by verification routines and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    id: str
    passed: bool
    detail: str = ""
    counterexample: Any = None

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"id": self.id, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class Report:
    command: str
    checks: list[Check] = field(default_factory=list)
    duration: float | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def add(self, id: str, passed: bool, detail: str = "", counterexample: Any = None) -> bool:
        self.checks.append(Check(id, bool(passed), detail, counterexample))
        return bool(passed)

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.id, c.passed, c.detail, c.counterexample))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self, timing: bool = False) -> dict:
        out: dict[str, Any] = {
            "command": self.command,
            "status": self.status,
            "total": len(self.checks),
            "failed": len(self.failures()),
            "checks": [c.to_dict() for c in self.checks],
        }
        if timing and self.duration is not None:
            out["duration_s"] = round(self.duration, 3)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)

    def to_text(self, verbose: bool = False) -> str:
        lines = [f"{self.command}: {self.status.upper()} "
                 f"({len(self.checks) - len(self.failures())}/{len(self.checks)} checks passed)"]
        for c in self.checks:
            if verbose or not c.passed:
                mark = "ok  " if c.passed else "FAIL"
                lines.append(f"  {mark} {c.id}" + (f": {c.detail}" if c.detail else ""))
        if self.duration is not None:
            lines.append(f"  time: {self.duration:.2f}s")
        return "\n".join(lines)
