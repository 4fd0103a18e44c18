"""
report.py
=========
Check results. A failed relation is data, not an exception: every checker
returns a ``CheckReport`` listing its violations.
"""

from dataclasses import dataclass, field
from typing import Any, List, Optional, Set, Tuple


@dataclass(frozen=True)
class Violation:
    """One relation that does not hold."""
    check_name: str
    location: Tuple[int, ...]
    lhs: Any
    rhs: Any
    message: str = ""


@dataclass
class CheckReport:
    """Outcome of running one check over a frieze or matrix."""
    check_name: str
    checked: int = 0
    violations: List[Violation] = field(default_factory=list)
    subject: Optional[str] = None  # e.g. "8-gon, D = 1,4 5,8"

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def add(self, location: Tuple[int, ...], lhs: Any, rhs: Any, message: str = "") -> None:
        self.violations.append(Violation(self.check_name, tuple(location), lhs, rhs, message))

    def locations(self) -> Set[Tuple[int, ...]]:
        return {violation.location for violation in self.violations}
