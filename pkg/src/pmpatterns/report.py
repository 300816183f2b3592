"""Pass/fail reports shared by the verification suites and the CLI."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

__all__ = ["Check", "Report"]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    counterexample: dict | None = None


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "",
            counterexample: dict | None = None) -> bool:
        self.checks.append(Check(name, bool(passed), detail, counterexample))
        return bool(passed)

    def extend(self, other: Report) -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_json(self) -> dict:
        return {"title": self.title, "passed": self.passed,
                "checks": [asdict(c) for c in self.checks]}

    @classmethod
    def from_json(cls, data: dict | str) -> Report:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["title"], [Check(**c) for c in data["checks"]])

    def render(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            line = f"  [{'PASS' if c.passed else 'FAIL'}] {c.name}"
            if c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
            if c.counterexample and not c.passed:
                lines.append("    counterexample: " + json.dumps(c.counterexample, sort_keys=True))
        return "\n".join(lines)
