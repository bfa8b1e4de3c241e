"""Structured results of axiom and identity checks."""

from typing import Any, Iterable, Optional

from pydantic import BaseModel, Field

from hptkit.constants import MAX_REPORTED_VIOLATIONS


class Violation(BaseModel):
    """A single nonzero entry of a map that should vanish."""

    degree: int
    row: str
    column: str
    # reduced fraction string
    value: str

    def __str__(self):
        return f"degree {self.degree}: [{self.row}, {self.column}] = {self.value}"


class TraceStep(BaseModel):
    """One stage of a symbolic computation, kept for inspection."""

    rule: str
    expression: str

    def __str__(self):
        return f"{self.rule}: {self.expression}"


class CheckResult(BaseModel):
    """Outcome of one labelled identity or axiom."""

    label: str
    description: str
    passed: bool
    violations: list[Violation] = Field(default_factory=list)
    details: dict[str, Any] = Field(default_factory=dict)
    trace: list[TraceStep] = Field(default_factory=list)
    # identity checks on maps out of the big module can be restricted to a window
    windowed: bool = False

    def restricted(self, window: frozenset[str]) -> "CheckResult":
        if not self.windowed:
            return self
        violations = [v for v in self.violations if v.column in window]
        return self.model_copy(update={"violations": violations, "passed": not violations})

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.label}: {self.description}"
        if self.violations:
            shown = self.violations[:MAX_REPORTED_VIOLATIONS]
            text += "".join(f"\n    {v}" for v in shown)
            if len(self.violations) > len(shown):
                text += f"\n    ... {len(self.violations) - len(shown)} more"
        return text


class Report(BaseModel):
    """A named collection of check results."""

    subject: str
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def check(self, label: str) -> Optional[CheckResult]:
        for check in self.checks:
            if check.label == label:
                return check
        return None

    def labels(self) -> list[str]:
        return [check.label for check in self.checks]

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check

    def merge(self, other: "Report", prefix: str = "") -> "Report":
        for check in other.checks:
            label = f"{prefix}{check.label}" if prefix else check.label
            self.checks.append(check.model_copy(update={"label": label}))
        return self

    def restricted(self, window: Iterable[str]) -> "Report":
        """Drop violations on columns outside ``window`` (only for windowed checks)."""
        window = frozenset(window)
        return Report(
            subject=self.subject, checks=[check.restricted(window) for check in self.checks]
        )

    def to_dict(self) -> dict:
        data = self.model_dump(mode="json")
        data["passed"] = self.passed
        return data

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.subject}: {status} ({len(self.checks) - len(self.failures())}/"
                 f"{len(self.checks)} checks)"]
        for check in self.checks:
            lines.append("  " + str(check).replace("\n", "\n  "))
        return "\n".join(lines)

    def __repr__(self):
        return f"Report(subject={self.subject!r}, passed={self.passed}, checks={len(self.checks)})"


def identity_check(
    label: str,
    description: str,
    difference,
    window: Optional[Iterable[str]] = None,
    windowed: bool = True,
    **details,
) -> CheckResult:
    """Turn ``difference`` (a graded map that must vanish) into a check result."""
    violations = [
        Violation(degree=degree, row=row, column=column, value=str(value))
        for degree, row, column, value in difference.nonzero_entries()
    ]
    result = CheckResult(
        label=label,
        description=description,
        passed=not violations,
        violations=violations,
        details=details,
        windowed=windowed,
    )
    if window is not None:
        result = result.restricted(frozenset(window))
    return result


def boolean_check(label: str, description: str, passed: bool, **details) -> CheckResult:
    return CheckResult(label=label, description=description, passed=passed, details=details)
