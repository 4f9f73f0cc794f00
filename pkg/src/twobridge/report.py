"""Check records shared by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class Counterexample:
    c: int
    g: int | None
    expected: object
    actual: object

    def to_json(self) -> dict:
        return {"c": self.c, "g": self.g, "expected": self.expected, "actual": self.actual}


@dataclass(frozen=True)
class CheckResult:
    name: str
    c_lo: int
    c_hi: int
    passed: bool
    counterexample: Counterexample | None = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "c_range": [self.c_lo, self.c_hi],
            "status": "pass" if self.passed else "fail",
            "first_counterexample": None
            if self.counterexample is None
            else self.counterexample.to_json(),
        }


@dataclass
class VerificationReport:
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": [check.to_json() for check in self.checks]}


def compare_all(
    name: str,
    c_lo: int,
    c_hi: int,
    instances: Iterable[tuple[int, int | None, object, object]],
) -> CheckResult:
    """Scan ``(c, g, expected, actual)`` instances, stopping at the first
    mismatch; equality over the whole range yields a passing check."""
    for c, g, expected, actual in instances:
        if expected != actual:
            return CheckResult(name, c_lo, c_hi, False, Counterexample(c, g, expected, actual))
    return CheckResult(name, c_lo, c_hi, True)
