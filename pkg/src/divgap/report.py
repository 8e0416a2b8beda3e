"""Per-index verification records returned by the checking suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckRecord:
    """Outcome of one indexed check; expected/actual carry the counterexample."""

    index: int
    passed: bool
    expected: object = None
    actual: object = None


@dataclass(frozen=True)
class VerificationReport:
    """A named batch of indexed checks plus free-form notes (flagged findings)."""

    name: str
    records: tuple[CheckRecord, ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> tuple[CheckRecord, ...]:
        return tuple(r for r in self.records if not r.passed)
