"""Scenario reports: named checks with anchors, witnesses and a pass/fail verdict."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Any, Callable

from ..errors import ResenvError

SCHEMA_VERSION = 1


@dataclass
class Check:
    claim: str
    anchor: str
    passed: bool
    witness: dict[str, Any] = dc_field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"id": self.claim, "anchor": self.anchor, "passed": self.passed, "witness": self.witness}


@dataclass
class ScenarioReport:
    scenario: str
    parameters: dict[str, Any]
    checks: list[Check] = dc_field(default_factory=list)
    wall_time: float | None = None

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    @property
    def exit_status(self) -> int:
        return 0 if self.passed else 1

    def check(self, claim: str, anchor: str, fn: Callable[[], tuple[bool, dict]]) -> Check:
        """Run ``fn`` and record its verdict; library errors become failed checks."""
        try:
            ok, witness = fn()
        except ResenvError as exc:
            ok, witness = False, {"error": f"{type(exc).__name__}: {exc}"}
        rec = Check(claim, anchor, bool(ok), witness)
        self.checks.append(rec)
        return rec

    def failed(self) -> list[str]:
        return [c.claim for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "scenario": self.scenario,
            "parameters": self.parameters,
            "checks": [c.to_dict() for c in self.checks],
            "passed": self.passed,
            "exit_status": self.exit_status,
        }
        if self.wall_time is not None:
            out["wall_time_s"] = round(self.wall_time, 3)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        lines = [f"scenario {self.scenario} ({params})"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"  {mark} {c.claim}: {c.anchor}")
            if not c.passed:
                for k, v in sorted(c.witness.items()):
                    lines.append(f"       {k}: {v}")
        verdict = "all checks passed" if self.passed else f"failed: {', '.join(self.failed()) or 'no checks'}"
        lines.append(verdict)
        if self.wall_time is not None:
            lines.append(f"wall time {self.wall_time:.3f}s")
        return "\n".join(lines) + "\n"
