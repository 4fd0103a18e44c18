"""
report_generator.py
==================
Generate reports from check results in various formats.
"""

import csv
import json
from io import StringIO
from typing import Any, Dict, List, Optional, Sequence, Union

from frieze.report import CheckReport
from scalar import format_scalar


def _text(value: Any) -> str:
    if value is None:
        return ""
    try:
        return format_scalar(value)
    except Exception:
        return str(value)


class ReportGenerator:
    """Generate check reports in multiple formats."""

    def __init__(
        self,
        reports: Union[CheckReport, Sequence[CheckReport]],
        extra: Optional[Dict[str, Any]] = None,
    ):
        """
        Initialize report generator.

        Args:
            reports: One CheckReport or several
            extra: Additional key/value results (e.g. determinants) for the JSON output
        """
        if isinstance(reports, CheckReport):
            reports = [reports]
        self.reports: List[CheckReport] = list(reports)
        self.extra = dict(extra or {})

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    def to_dict(self) -> Dict[str, Any]:
        checks = []
        for report in self.reports:
            checks.append({
                'check_name': report.check_name,
                'subject': report.subject,
                'status': report.status,
                'checked': report.checked,
                'violations': [
                    {
                        'location': list(v.location),
                        'lhs': _text(v.lhs),
                        'rhs': _text(v.rhs),
                        'message': v.message,
                    }
                    for v in report.violations
                ],
            })
        result: Dict[str, Any] = {'passed': self.passed, 'checks': checks}
        for key, value in self.extra.items():
            result[key] = value if isinstance(value, (bool, int, str, list, dict)) else _text(value)
        return result

    def generate_json(self) -> str:
        """Generate JSON report."""
        return json.dumps(self.to_dict(), indent=2)

    def generate_csv(self) -> str:
        """Generate CSV report with one row per violation."""
        output = StringIO()
        writer = csv.writer(output, lineterminator="\n")

        writer.writerow(['Check Name', 'Status', 'Location', 'LHS', 'RHS', 'Message'])
        for report in self.reports:
            for v in report.violations:
                writer.writerow([
                    report.check_name,
                    report.status,
                    " ".join(str(x) for x in v.location),
                    _text(v.lhs),
                    _text(v.rhs),
                    v.message,
                ])

        return output.getvalue()

    def generate_text(self) -> str:
        """Human-readable summary, one block per check."""
        lines: List[str] = []
        for report in self.reports:
            icon = "✅" if report.passed else "❌"
            subject = f" ({report.subject})" if report.subject else ""
            lines.append(
                f"{icon} {report.check_name}{subject}: {report.status}, "
                f"{report.checked} checked, {len(report.violations)} violated"
            )
            for v in report.violations:
                location = ",".join(str(x) for x in v.location)
                lines.append(f"   ({location}): {_text(v.lhs)} != {_text(v.rhs)}")
        for key, value in self.extra.items():
            lines.append(f"{key}: {_text(value)}")
        return "\n".join(lines)
