"""
Verification Report Module
Outcome of checking one identity over a range of inputs.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from .exactnum import format_rational

PASS = "pass"
FAIL = "fail"


def render_exact(value: Any) -> Any:
    """Render ints, Fractions and nested containers exactly, for reports and JSON."""
    if value is None or isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else format_rational(value)
    if isinstance(value, dict):
        return {str(k): render_exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [render_exact(v) for v in value]
    return str(value)


@dataclass
class VerificationReport:
    """
    Result of a verification run.

    ``failures`` holds (inputs, expected, actual) triples already rendered exactly;
    the report passes exactly when it is empty.
    """

    identity_id: str
    range_description: str
    checked: int = 0
    failures: List[Tuple[Any, Any, Any]] = field(default_factory=list)

    @property
    def status(self) -> str:
        return PASS if not self.failures else FAIL

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, inputs: Any, expected: Any, actual: Any) -> bool:
        """Count one case and record it as a failure when the values differ."""
        self.checked += 1
        if expected != actual:
            self.failures.append((render_exact(inputs), render_exact(expected), render_exact(actual)))
            return False
        return True

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.checked += other.checked
        self.failures.extend(other.failures)
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity_id": self.identity_id,
            "range": self.range_description,
            "checked": self.checked,
            "failures": [
                {"inputs": inputs, "expected": expected, "actual": actual}
                for inputs, expected, actual in self.failures
            ],
            "status": self.status,
        }
