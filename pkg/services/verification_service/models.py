"""
Verification report models.
"""

import json
from typing import Any, Dict

from pydantic import BaseModel, ConfigDict, Field, model_validator


class CheckReport(BaseModel):
    """Outcome of one named check at one dimension"""
    model_config = ConfigDict(frozen=True)

    check_name: str
    residual: float
    threshold: float = Field(gt=0)
    passed: bool
    context: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _consistent(self) -> "CheckReport":
        if self.passed != (self.residual <= self.threshold):
            raise ValueError(
                f"passed={self.passed} contradicts residual {self.residual!r} "
                f"against threshold {self.threshold!r}"
            )
        return self

    @classmethod
    def evaluate(cls, check_name: str, residual: float, threshold: float,
                 **context: Any) -> "CheckReport":
        """Build a report with ``passed`` derived from the residual"""
        residual = float(residual)
        return cls(check_name=check_name, residual=residual, threshold=threshold,
                   passed=residual <= threshold, context=context)

    @property
    def n(self) -> int:
        return int(self.context.get("n", 0))

    @property
    def variant(self) -> str:
        return str(self.context.get("variant", ""))

    def sort_key(self):
        return (self.check_name, self.n, self.variant)

    def to_json_line(self) -> str:
        """Single JSON object with sorted keys"""
        return json.dumps(self.model_dump(), sort_keys=True)
