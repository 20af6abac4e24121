"""
SKEWRANK - Verification Reports

A Report is the outcome of one scenario: named claims, each pass, fail or
certified (implied by a transfer result from conditions checked on A).
"""

import json
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

PASS = "pass"
FAIL = "fail"
CERTIFIED = "certified"
STATUSES = (PASS, FAIL, CERTIFIED)


@dataclass
class Claim:
    """One checked statement"""
    name: str
    status: str
    witness: Any = None
    certificate: Optional[str] = None
    detail: Optional[str] = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown claim status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> Dict:
        data = {"name": self.name, "status": self.status, "witness": self.witness}
        if self.certificate:
            data["certificate"] = self.certificate
        if self.detail:
            data["detail"] = self.detail
        return data

    @classmethod
    def from_dict(cls, data: Dict) -> "Claim":
        return cls(name=data["name"], status=data["status"], witness=data.get("witness"),
                   certificate=data.get("certificate"), detail=data.get("detail"))


@dataclass
class Report:
    """Outcome of a scenario"""
    scenario: str
    claims: List[Claim] = field(default_factory=list)
    timing_ms: int = 0
    data: Dict[str, Any] = field(default_factory=dict)
    _started: float = field(default_factory=time.perf_counter, repr=False)

    def check(self, name: str, condition: bool, witness: Any = None,
              detail: Optional[str] = None) -> bool:
        self.claims.append(Claim(name, PASS if condition else FAIL, witness, detail=detail))
        return condition

    def certify(self, name: str, certificate: str, witness: Any = None):
        self.claims.append(Claim(name, CERTIFIED, witness, certificate=certificate))

    def extend(self, other: "Report", prefix: str = ""):
        for claim in other.claims:
            self.claims.append(Claim(f"{prefix}{claim.name}", claim.status, claim.witness,
                                     claim.certificate, claim.detail))
        for key, value in other.data.items():
            self.data[f"{prefix}{key}"] = value

    def finish(self) -> "Report":
        self.timing_ms = int((time.perf_counter() - self._started) * 1000)
        return self

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.claims)

    @property
    def failures(self) -> List[Claim]:
        return [c for c in self.claims if not c.ok]

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_dict(self) -> Dict:
        data = {
            "scenario": self.scenario,
            "claims": [c.to_dict() for c in sorted(self.claims, key=lambda c: c.name)],
            "timing_ms": self.timing_ms,
        }
        if self.data:
            data["data"] = self.data
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: Dict) -> "Report":
        return cls(scenario=data["scenario"],
                   claims=[Claim.from_dict(c) for c in data.get("claims", [])],
                   timing_ms=int(data.get("timing_ms", 0)),
                   data=dict(data.get("data", {})))

    def to_text(self) -> str:
        lines = ["=" * 60, f"  {self.scenario}", "=" * 60]
        for key, value in sorted(self.data.items()):
            lines.append(f"  {key}: {value}")
        for claim in sorted(self.claims, key=lambda c: c.name):
            mark = {PASS: "✅", CERTIFIED: "☑️", FAIL: "❌"}[claim.status]
            line = f"{mark} {claim.name} [{claim.status}]"
            if claim.certificate:
                line += f" <- {claim.certificate}"
            lines.append(line)
            if claim.status == FAIL and claim.witness is not None:
                lines.append(f"     witness: {claim.witness}")
        verdict = "OK" if self.ok else f"{len(self.failures)} claim(s) failed"
        lines.append("-" * 60)
        lines.append(f"  {verdict} ({self.timing_ms} ms)")
        return "\n".join(lines)
