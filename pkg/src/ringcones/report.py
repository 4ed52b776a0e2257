from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
INFO = "info"
SKIP = "skip"


@dataclass
class Check:
    claim: str
    statement: str
    status: str
    witness: Any = None
    detail: str = ""

    def to_dict(self) -> dict:
        out = {"claim": self.claim, "statement": self.statement, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class VerificationReport:
    """Ordered list of named checks.

    ``info`` checks record findings that are reported but never asserted;
    they do not affect :attr:`passed`.  ``wall_time`` is kept out of
    :meth:`to_dict` so exported reports stay byte-stable.
    """

    suite: str
    checks: list[Check] = field(default_factory=list)
    wall_time: float = 0.0

    def add(self, claim: str, statement: str, failure: Any = None, detail: str = "") -> bool:
        """Record a pass when ``failure`` is None, else a fail carrying it as witness."""
        status = PASS if failure is None else FAIL
        self.checks.append(Check(claim, statement, status, failure, detail))
        return failure is None

    def info(self, claim: str, statement: str, finding: Any = None, detail: str = "") -> None:
        self.checks.append(Check(claim, statement, INFO, finding, detail))

    def skip(self, claim: str, statement: str, detail: str = "") -> None:
        self.checks.append(Check(claim, statement, SKIP, None, detail))

    def extend(self, other: VerificationReport) -> None:
        self.checks.extend(other.checks)
        self.wall_time += other.wall_time

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def get(self, claim: str) -> Check:
        for c in self.checks:
            if c.claim == claim:
                return c
        raise KeyError(claim)

    @property
    def passed(self) -> bool:
        return not self.failures()

    def counts(self) -> dict[str, int]:
        counts = {PASS: 0, FAIL: 0, INFO: 0, SKIP: 0}
        for c in self.checks:
            counts[c.status] += 1
        return counts

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "summary": self.counts(),
            "checks": [c.to_dict() for c in self.checks],
        }

    def render(self, timing: bool = True) -> str:
        head = f"== {self.suite}: {'PASS' if self.passed else 'FAIL'}"
        c = self.counts()
        head += f" ({c[PASS]} pass, {c[FAIL]} fail, {c[INFO]} info, {c[SKIP]} skip"
        head += f", {self.wall_time:.2f}s)" if timing else ")"
        lines = [head]
        for check in self.checks:
            line = f"  [{check.status.upper():4}] {check.claim}: {check.statement}"
            if check.detail:
                line += f" -- {check.detail}"
            lines.append(line)
            if check.witness is not None and check.status in (FAIL, INFO):
                lines.append(f"         witness: {json.dumps(check.witness, sort_keys=True)}")
        return "\n".join(lines)
