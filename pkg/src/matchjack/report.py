"""Pass/fail records produced by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field

MAX_LISTED = 20


class GuardExceeded(RuntimeError):
    """A brute-force routine was asked for a size beyond its configured limit."""


@dataclass
class Report:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def check(self, ok: bool, what=None) -> bool:
        self.checked += 1
        if not ok:
            self.violations.append(what)
        return ok

    def merge(self, other: "Report") -> "Report":
        self.checked += other.checked
        self.violations.extend(other.violations)
        self.notes.update(other.notes)
        return self

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "checked": self.checked,
            "violations": [str(v) for v in self.violations[:MAX_LISTED]],
            "n_violations": len(self.violations),
            **({"notes": self.notes} if self.notes else {}),
        }

    def __str__(self):
        status = "PASS" if self.passed else f"FAIL ({len(self.violations)} violations)"
        return f"{self.name}: {status} [{self.checked} checks]"
