"""Exceptions raised by hptkit operations."""

import io
from dataclasses import dataclass, field
from typing import Optional


class HptkitError(Exception):
    """Base class of all errors raised by hptkit."""


@dataclass
class StructureError(HptkitError, ValueError):
    """Operands do not fit together (wrong degree, mismatched modules, unknown kind)."""

    msg: str
    degree: Optional[int] = None

    def __str__(self):
        if self.degree is None:
            return self.msg
        return f"{self.msg} (degree {self.degree})"


@dataclass
class InputError(HptkitError, ValueError):
    """A file or a piece of text could not be parsed."""

    msg: str
    path: Optional[str] = None
    line: Optional[int] = None
    column: Optional[int] = None

    def location(self) -> str:
        parts = [self.path or "<input>"]
        if self.line is not None:
            parts.append(str(self.line))
            if self.column is not None:
                parts.append(str(self.column))
        return ":".join(parts)

    def __str__(self):
        return f"{self.location()}: {self.msg}"


@dataclass
class ContractViolation(HptkitError):
    """An operation was handed a structure that fails its axioms."""

    msg: str
    report: Optional[object] = None

    def __str__(self):
        if self.report is None:
            return self.msg
        failed = ", ".join(check.label for check in self.report.failures())
        return f"{self.msg} (failed: {failed})"


@dataclass
class NonNilpotentError(HptkitError):
    """A Neumann-type series did not terminate within its cap."""

    msg: str
    iterations: int = 0

    def __str__(self):
        return f"{self.msg} (no vanishing term after {self.iterations} iterations)"


@dataclass
class InvertibilityError(NonNilpotentError):
    """Invertibility of ``N + h∂`` or ``N + ∂h`` could not be certified."""

    operator: str = ""

    def __str__(self):
        return (
            f"invertibility of {self.operator} unestablished: {self.msg} "
            f"(after {self.iterations} iterations)"
        )


@dataclass
class SingularMapError(HptkitError):
    """Exact elimination met a singular block."""

    msg: str
    degree: Optional[int] = None

    def __str__(self):
        if self.degree is None:
            return self.msg
        return f"{self.msg} (degree {self.degree})"


@dataclass
class InvariantViolation(HptkitError):
    """A property that holds by theory failed; this indicates a bug."""

    label: str
    msg: str
    report: Optional[object] = field(default=None, repr=False)

    def __str__(self):
        return f"[{self.label}] {self.msg}"


@dataclass
class InternalConsistencyError(InvariantViolation):
    """A computed inverse failed its exact post-check."""


def error_report(errors: list[Exception]) -> str:
    """Render a list of errors for the terminal, one block per error."""
    output = io.StringIO()
    for error in errors:
        output.write(f"{type(error).__name__}: {error}\n")
        report = getattr(error, "report", None)
        if report is not None:
            for check in report.failures():
                output.write(f"  - {check}\n")
    return output.getvalue()
