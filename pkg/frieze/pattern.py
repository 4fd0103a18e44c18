"""
pattern.py
==========
Weak frieze patterns: the infinite array obtained from a weak frieze on the
n-gon by glide reflections, rendered over a finite window of rows.

Row i holds the entries c(i,j) for i <= j <= n+i with c(i,i) = c(i,n+i) = 0.
Every entry reduces to the fundamental domain {c(i,j) = f(i,j) : 1 <= i < j <= n}
through the translation c(i,j) = c(i+n,j+n) and the glide c(i,j) = c(j,n+i).
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from frieze.report import CheckReport
from frieze.weak_frieze import WeakFrieze
from scalar import Scalar, format_scalar
from utils.error_handler import PreconditionError

logger = logging.getLogger(__name__)

LOCAL_RULE_CHECK = "local_rule"


def pattern_entry(f: WeakFrieze, i: int, j: int) -> Scalar:
    """
    The entry c(i,j) of the pattern of ``f`` for any integer row i and i <= j <= n+i.
    """
    n = f.n
    if not i <= j <= n + i:
        raise PreconditionError(f"c({i},{j}) lies outside row {i} (columns {i}..{n + i})")
    shift = ((i - 1) // n) * n
    i, j = i - shift, j - shift
    if j == i or j == n + i:
        return f.field.zero
    if j <= n:
        return f.value(i, j)
    # n < j < n+i: one glide lands in the fundamental domain.
    return f.value(j - n, i)


@dataclass(frozen=True)
class PatternWindow:
    """Rows first_row..last_row of a weak frieze pattern."""
    n: int
    first_row: int
    last_row: int
    rows: Dict[int, Tuple[Scalar, ...]]

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i][j - i]

    def contains(self, i: int, j: int) -> bool:
        return self.first_row <= i <= self.last_row and i <= j <= self.n + i

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self.rows[i]


def render_pattern(f: WeakFrieze, first_row: int, last_row: int) -> PatternWindow:
    """
    Render rows ``first_row``..``last_row`` of the pattern of ``f``.

    Raises:
        PreconditionError: If first_row > last_row
    """
    if first_row > last_row:
        raise PreconditionError(f"empty row range {first_row}..{last_row}")
    rows = {
        i: tuple(pattern_entry(f, i, j) for j in range(i, f.n + i + 1))
        for i in range(first_row, last_row + 1)
    }
    return PatternWindow(f.n, first_row, last_row, rows)


def format_pattern(window: PatternWindow) -> str:
    """
    Text rendering: each row shifted one column further right than the
    previous, so that c(i,j) sits below-right of c(i,j-1) as in the array.
    """
    texts = {i: [format_scalar(v) for v in row] for i, row in window.rows.items()}
    width = max(len(text) for row in texts.values() for text in row)
    lines: List[str] = []
    for i in range(window.first_row, window.last_row + 1):
        indent = " " * ((i - window.first_row) * (width + 1))
        lines.append((indent + " ".join(text.rjust(width) for text in texts[i])).rstrip())
    return "\n".join(lines)


def check_local_rule(window: PatternWindow, f: WeakFrieze) -> CheckReport:
    """
    Check the 2x2 rule on every complete adjacent block of the window:

        c(i,j) c(i+1,j+1) - c(i,j+1) c(i+1,j) = c(i+1,n+i) c(j,j+1)

    Returns:
        CheckReport with one violation per failing block, located at (i, j)
    """
    n = f.n
    report = CheckReport(LOCAL_RULE_CHECK, subject=f"rows {window.first_row}..{window.last_row}")
    for i in range(window.first_row, window.last_row):
        for j in range(i + 1, n + i):
            lhs = (
                window.entry(i, j) * window.entry(i + 1, j + 1)
                - window.entry(i, j + 1) * window.entry(i + 1, j)
            )
            rhs = window.entry(i + 1, n + i) * pattern_entry(f, j, j + 1)
            report.checked += 1
            if lhs != rhs:
                report.add((i, j), lhs, rhs, f"2x2 block at ({i},{j}) deviates")
    logger.debug(f"local rule: {report.checked} blocks, {len(report.violations)} deviations")
    return report
