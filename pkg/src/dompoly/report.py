from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class VerificationOutcome:
    """Result of checking one claim at one parameter setting.

    A failing outcome keeps its counter-witness (graph6 strings, polynomials,
    or the offending parameters) in ``evidence``.
    """

    claim_id: str
    parameters: list[int]
    passed: bool
    evidence: dict[str, Any] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "parameters": list(self.parameters),
            "verdict": self.verdict,
            "evidence": self.evidence,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def summary(self) -> str:
        params = " ".join(map(str, self.parameters))
        return f"{self.verdict.upper()} {self.claim_id} {params}".rstrip()
