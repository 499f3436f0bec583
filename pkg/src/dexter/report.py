"""Pass/fail records shared by the verification entry points."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    claim: str
    passed: bool
    witness: Any = None

    def record(self) -> dict:
        return {
            "name": self.name,
            "paper_ref": self.claim,
            "status": "pass" if self.passed else "fail",
            "witness": self.witness,
        }


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, claim: str, passed: bool, witness: Any = None) -> Check:
        c = Check(name, claim, bool(passed), witness)
        self.checks.append(c)
        return c

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def records(self) -> list[dict]:
        return [c.record() for c in self.checks]

    def __bool__(self) -> bool:
        return self.passed
