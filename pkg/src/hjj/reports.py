"""Check reports: a pass is an empty violation list.

The classification work needs the exact residuals behind every failure
(polynomial conditions such as a^3 - a^2 surface this way), so checks never
collapse to a bare boolean.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .scalars import format_scalar


@dataclass(frozen=True)
class Violation:
    """One failing instance of a checked identity."""

    where: tuple  # offending basis index tuple
    residual: tuple  # exact coordinate vector of the defect
    note: str = ""

    def describe(self) -> str:
        res = "(" + ", ".join(format_scalar(x) for x in self.residual) + ")"
        tag = f" {self.note}" if self.note else ""
        return f"at {self.where}: residual {res}{tag}"


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one named identity check over all basis tuples."""

    name: str
    violations: tuple = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.violations

    def describe(self) -> str:
        if self.passed:
            return f"{self.name}: pass"
        lines = [f"{self.name}: FAIL ({len(self.violations)} violation(s))"]
        lines.extend("  " + v.describe() for v in self.violations)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "violations": [
                {
                    "where": list(v.where),
                    "residual": [format_scalar(x) for x in v.residual],
                    "note": v.note,
                }
                for v in self.violations
            ],
        }
