"""Per-index verification reports shared by the sweeps and the CLI."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any

PASS = "PASS"
FAIL = "FAIL"


@dataclass(frozen=True)
class ReportRow:
    n: int
    passed: bool
    witness: dict[str, Any] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return PASS if self.passed else FAIL


@dataclass
class VerificationReport:
    """Verdicts for one named identity or inequality over a range of n.

    ``excluded`` holds rows that are printed for reference but do not take
    part in the overall verdict (e.g. an index the checked inequality does not claim).
    """

    identity_name: str
    parameters: dict[str, Any]
    rows: list[ReportRow] = field(default_factory=list)
    excluded: list[ReportRow] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def overall(self) -> str:
        return PASS if all(r.passed for r in self.rows) else FAIL

    @property
    def passed(self) -> bool:
        return self.overall == PASS

    def failures(self) -> list[ReportRow]:
        return [r for r in self.rows if not r.passed]

    def to_dict(self, include_timing: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "identity": self.identity_name,
            "parameters": self.parameters,
            "rows": [{"n": r.n, "verdict": r.verdict, "witness": r.witness} for r in self.rows],
            "excluded": [{"n": r.n, "witness": r.witness} for r in self.excluded],
            "overall": self.overall,
        }
        if include_timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"# identity\t{self.identity_name}"]
        for key, value in self.parameters.items():
            lines.append(f"# {key}\t{value}")
        for r in self.rows:
            lines.append(f"{r.n}\t{r.verdict}\t{_fmt_witness(r.witness)}".rstrip("\t"))
        for r in self.excluded:
            lines.append(f"# excluded {r.n}\t{_fmt_witness(r.witness)}".rstrip("\t"))
        lines.append(f"# overall\t{self.overall}")
        return "\n".join(lines) + "\n"


def _fmt_witness(witness: dict[str, Any]) -> str:
    return " ".join(f"{k}={v}" for k, v in witness.items())


@contextmanager
def timed(report: VerificationReport):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.elapsed_ms = (time.perf_counter() - start) * 1000.0
