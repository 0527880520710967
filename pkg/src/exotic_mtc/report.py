"""Line-oriented verification reports."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS, FAIL, UNDETERMINED = "PASS", "FAIL", "UNDETERMINED"


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    status: str
    witness: str = ""

    def line(self) -> str:
        out = f"{self.suite} {self.name} {self.status}"
        return f"{out} {self.witness}" if self.witness else out


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def add(self, suite: str, name: str, ok: bool | None, witness: str = "") -> bool:
        status = UNDETERMINED if ok is None else (PASS if ok else FAIL)
        self.checks.append(Check(suite, name, status, witness))
        return bool(ok)

    def extend(self, other: Report) -> Report:
        self.checks.extend(other.checks)
        return self

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, UNDETERMINED: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]

    def text(self) -> str:
        c = self.counts()
        summary = f"SUMMARY pass={c[PASS]} fail={c[FAIL]} undetermined={c[UNDETERMINED]}"
        return "\n".join(self.lines() + [summary])

    def to_json(self) -> str:
        return json.dumps(
            {
                "checks": [c.__dict__ for c in self.checks],
                "summary": self.counts(),
                "ok": self.ok,
            },
            indent=2,
        )
