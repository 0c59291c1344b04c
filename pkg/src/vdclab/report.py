"""The BoundReport record shared by every verification routine."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

#: Slack used for every ``bound - measured >= 0`` decision.
MARGIN_SLACK = 1e-9


@dataclass(frozen=True)
class BoundReport:
    """A named bound, the quantity it should dominate, and the verdict.

    When ``measured`` is given, ``margin = bound - measured`` and ``passed``
    holds iff ``margin >= -MARGIN_SLACK``. ``extra`` carries secondary numbers
    (alternative bounds, precondition data) that belong in the report.
    """

    name: str
    bound: float
    measured: Optional[float] = None
    margin: Optional[float] = None
    passed: bool = True
    notes: str = ""
    extra: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def compare(cls, name: str, bound: float, measured: float, notes: str = "",
                **extra: Any) -> "BoundReport":
        margin = float(bound) - float(measured)
        return cls(name=name, bound=float(bound), measured=float(measured),
                   margin=margin, passed=margin >= -MARGIN_SLACK, notes=notes,
                   extra=dict(extra))

    def as_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "bound": self.bound,
            "measured": self.measured,
            "margin": self.margin,
            "passed": self.passed,
        }
        out.update(self.extra)
        if self.notes:
            out["notes"] = self.notes
        return out
