"""
ptolemy.py
==========
Ptolemy relation checks.

For four vertices w < x < y < z the crossing diagonals {w,y} and {x,z}
satisfy the Ptolemy relation when

    f(w,y) f(x,z) = f(w,x) f(y,z) + f(w,z) f(x,y).

A weak frieze only has to satisfy the relations where one of the two
crossing diagonals lies in its dissection; a frieze satisfies all of them.
"""

import logging
from itertools import combinations
from typing import Iterable, Tuple

from frieze.report import CheckReport
from frieze.weak_frieze import WeakFrieze
from geometry import Diagonal, crossing, internal_diagonals

logger = logging.getLogger(__name__)

WEAK_FRIEZE_CHECK = "weak_frieze"
FRIEZE_CHECK = "frieze"


def ptolemy_sides(f: WeakFrieze, d: Diagonal, e: Diagonal):
    """Both sides of the Ptolemy relation for a crossing pair, with its vertex quadruple."""
    w, x, y, z = sorted((d.a, d.b, e.a, e.b))
    lhs = f.value(w, y) * f.value(x, z)
    rhs = f.value(w, x) * f.value(y, z) + f.value(w, z) * f.value(x, y)
    return (w, x, y, z), lhs, rhs


def _check_pairs(f: WeakFrieze, pairs: Iterable[Tuple[Diagonal, Diagonal]], name: str) -> CheckReport:
    report = CheckReport(name, subject=f"{f.n}-gon, D = {f.dissection}")
    seen = set()
    for d, e in pairs:
        location, lhs, rhs = ptolemy_sides(f, d, e)
        if location in seen:
            continue
        seen.add(location)
        report.checked += 1
        if lhs != rhs:
            report.add(location, lhs, rhs, f"Ptolemy relation for {d} and {e} fails")
    logger.debug(f"{name}: {report.checked} relations checked, {len(report.violations)} violated")
    return report


def check_weak_frieze(f: WeakFrieze) -> CheckReport:
    """
    Verify every Ptolemy relation in which one diagonal belongs to the dissection.

    Returns:
        CheckReport whose violation locations are the sorted vertex quadruples
        (w, x, y, z) of the failing crossings; empty when f is a weak frieze
    """
    n = f.n
    pairs = (
        (d, e)
        for d in f.dissection.sorted()
        for e in internal_diagonals(n)
        if crossing(d, e, n)
    )
    return _check_pairs(f, pairs, WEAK_FRIEZE_CHECK)


def check_frieze(f: WeakFrieze) -> CheckReport:
    """Verify the Ptolemy relation for every crossing pair of diagonals."""
    n = f.n
    pairs = (
        (Diagonal(w, y), Diagonal(x, z))
        for w, x, y, z in combinations(range(1, n + 1), 4)
    )
    return _check_pairs(f, pairs, FRIEZE_CHECK)
