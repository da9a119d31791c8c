"""Outcome of a single lemma-lab check.

A report records which check ran with which parameters, how many cases it
examined, and every failing case with the data needed to reproduce it.
"""

import time
from enum import Enum
from typing import Any, Dict, List, Optional


class CheckReport:
    """Result of one check run over one parameter set."""

    class Verdict(Enum):
        """Enumeration of possible check outcomes."""

        PASS = "pass"
        FAIL = "fail"

        def __str__(self) -> str:
            """Convert verdict to string representation."""
            return self.value

        @classmethod
        def values(cls) -> List[str]:
            """Get list of all verdict values as strings."""
            return [verdict.value for verdict in cls]

    def __init__(
        self,
        name: str,
        params: Optional[Dict[str, Any]] = None,
        seed: Optional[int] = None,
        asserted: bool = True,
    ) -> None:
        """Initialize an empty passing report.

        Args:
            name: Stable id of the check
            params: Parameters the check ran with
            seed: Seed of the random generator, None for deterministic checks
            asserted: False for advisory probes that never fail a run
        """
        self.name = name
        self.params: Dict[str, Any] = dict(params or {})
        self.seed = seed
        self.asserted = asserted
        self.cases = 0
        self.failures: List[Dict[str, Any]] = []
        self.findings: List[Dict[str, Any]] = []
        self.millis: Optional[float] = None
        self._started = time.perf_counter()

    @property
    def verdict(self) -> "CheckReport.Verdict":
        return CheckReport.Verdict.FAIL if self.failures else CheckReport.Verdict.PASS

    @property
    def passed(self) -> bool:
        return not self.failures

    def case(self, ok: bool, **witness: Any) -> bool:
        """Count one case; a failing case keeps ``witness`` as counterexample."""
        self.cases += 1
        if not ok:
            self.failures.append({key: _plain(value) for key, value in witness.items()})
        return ok

    def finding(self, **row: Any) -> None:
        self.findings.append({key: _plain(value) for key, value in row.items()})

    def finish(self) -> "CheckReport":
        self.millis = round((time.perf_counter() - self._started) * 1000.0, 3)
        return self

    def toDict(self, timings: bool = False) -> Dict[str, Any]:
        d: Dict[str, Any] = {
            "name": self.name,
            "params": {key: _plain(value) for key, value in self.params.items()},
            "verdict": str(self.verdict),
            "asserted": self.asserted,
            "cases": self.cases,
            "failures": self.failures,
            "seed": self.seed,
        }
        if self.findings:
            d["findings"] = self.findings
        if timings:
            d["millis"] = self.millis
        return d

    def __str__(self) -> str:
        params = " ".join(f"{key}={_plain(value)}" for key, value in self.params.items())
        tag = str(self.verdict).upper() if self.asserted else "NOTE"
        return f"{tag:<4} {self.name} {params} cases={self.cases}".replace("  ", " ")


def _plain(value: Any) -> Any:
    """JSON-friendly rendering: big integers as strings, objects via str."""
    if isinstance(value, bool) or value is None or isinstance(value, (float, str)):
        return value
    if isinstance(value, int):
        return value if abs(value) < 2**53 else str(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return str(value)
