"""Verification reports shared by the FL, AFL, kernel and commutativity checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ..constants import JSON_SCHEMA_VERSION
from ..localfield import format_fraction


def jsonable(value: Any) -> Any:
    """Rationals become ``num/den`` strings; containers are converted recursively."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, Fraction)):
        return format_fraction(Fraction(value))
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


@dataclass
class VerificationCase:
    inputs: dict[str, Any]
    lhs: Any
    rhs: Any
    skipped: bool = False
    note: str = ""
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.skipped and self.lhs == self.rhs

    def as_dict(self) -> dict[str, Any]:
        out = {
            "inputs": {k: v if isinstance(v, (int, str)) else jsonable(v) for k, v in self.inputs.items()},
            "lhs": jsonable(self.lhs),
            "rhs": jsonable(self.rhs),
            "pass": self.passed,
        }
        if self.skipped:
            out["skipped"] = True
        if self.note:
            out["note"] = self.note
        if self.extra:
            out["extra"] = jsonable(self.extra)
        return out


@dataclass
class VerificationReport:
    """A list of (lhs, rhs) cases; a case passes iff lhs == rhs exactly."""

    kind: str
    parameters: dict[str, Any]
    cases: list[VerificationCase] = field(default_factory=list)

    def add(self, inputs: dict[str, Any], lhs: Any, rhs: Any, **kwargs: Any) -> VerificationCase:
        case = VerificationCase(inputs, lhs, rhs, **kwargs)
        self.cases.append(case)
        return case

    def skip(self, inputs: dict[str, Any], note: str) -> VerificationCase:
        case = VerificationCase(inputs, None, None, skipped=True, note=note)
        self.cases.append(case)
        return case

    @property
    def failed(self) -> list[VerificationCase]:
        return [case for case in self.cases if not case.skipped and not case.passed]

    @property
    def passed(self) -> bool:
        return not self.failed

    @property
    def summary(self) -> dict[str, int]:
        skipped = sum(1 for case in self.cases if case.skipped)
        failed = len(self.failed)
        return {
            "total": len(self.cases),
            "passed": len(self.cases) - skipped - failed,
            "failed": failed,
            "skipped": skipped,
        }

    def as_dict(self) -> dict[str, Any]:
        return {
            "schema": JSON_SCHEMA_VERSION,
            "kind": self.kind,
            "parameters": {k: v if isinstance(v, (int, str, bool)) else jsonable(v) for k, v in self.parameters.items()},
            "cases": [case.as_dict() for case in self.cases],
            "summary": self.summary,
            "pass": self.passed,
        }
