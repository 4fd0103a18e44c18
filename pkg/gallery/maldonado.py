"""
maldonado.py
============
Frieze matrices with coefficients in the sense of the generalized diamond
rule

    c(i,j) c(i+1,j+1) - c(i+1,j) c(i,j+1) = c(i,i+1) c(j,j+1),

required for 1 <= i and i+1 <= j <= n-1 (the last column is excluded; the
identity at the overlap is then a consequence, checked separately).
"""

import logging
from dataclasses import dataclass
from typing import Union

from frieze import CheckReport, WeakFrieze
from matrix import FriezeMatrix, frieze_matrix
from scalar import Scalar
from utils.error_handler import DiamondRuleViolated, PreconditionError

logger = logging.getLogger(__name__)

DIAMOND_CHECK = "diamond_rule"
OVERLAP_CHECK = "overlap_identity"


@dataclass(frozen=True)
class MaldonadoMatrix:
    """A frieze matrix whose entries vanish exactly on the diagonal."""
    matrix: FriezeMatrix

    def __post_init__(self):
        n = self.matrix.n
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if self.matrix[i, j] == 0:
                    raise PreconditionError(
                        f"c({i},{j}) = 0; off-diagonal entries must be nonzero"
                    )

    @property
    def n(self) -> int:
        return self.matrix.n

    def c(self, i: int, j: int) -> Scalar:
        return self.matrix[i, j]


def maldonado_matrix(source: Union[FriezeMatrix, WeakFrieze]) -> MaldonadoMatrix:
    """
    Validate a frieze matrix (or the matrix of a weak frieze) as a Maldonado matrix.

    Raises:
        PreconditionError: If an off-diagonal entry is zero
    """
    if isinstance(source, WeakFrieze):
        source = frieze_matrix(source)
    return MaldonadoMatrix(source)


def maldonado_check(C: MaldonadoMatrix) -> CheckReport:
    """Check the generalized diamond rule; violations are located at (i, j)."""
    n, c = C.n, C.c
    report = CheckReport(DIAMOND_CHECK, subject=f"{n}x{n} matrix")
    for i in range(1, n):
        for j in range(i + 1, n):
            lhs = c(i, j) * c(i + 1, j + 1) - c(i + 1, j) * c(i, j + 1)
            rhs = c(i, i + 1) * c(j, j + 1)
            report.checked += 1
            if lhs != rhs:
                report.add((i, j), lhs, rhs, f"diamond rule fails at ({i},{j})")
    logger.debug(f"diamond rule: {report.checked} relations, {len(report.violations)} violated")
    return report


def maldonado_det_formula(C: MaldonadoMatrix) -> Scalar:
    """
    -(-2)^(n-2) * c(1,n) * prod c(i,i+1), valid once the diamond rule holds.

    Raises:
        DiamondRuleViolated: If maldonado_check fails
    """
    report = maldonado_check(C)
    if not report.passed:
        first = report.violations[0].location
        raise DiamondRuleViolated(
            f"diamond rule fails at {len(report.violations)} position(s), first at {first}"
        )
    n = C.n
    result = C.matrix.field.from_int(-((-2) ** (n - 2))) * C.c(1, n)
    for i in range(1, n):
        result = result * C.c(i, i + 1)
    return result


def overlap_identity_check(C: MaldonadoMatrix) -> CheckReport:
    """
    Check c(i,n) c(1,i+1) - c(i+1,n) c(1,i) = c(i,i+1) c(1,n) for 1 <= i <= n-1,
    the 2x2 blocks where the rows of the pattern overlap. Relies on the
    nonzero off-diagonal entries that every MaldonadoMatrix has.
    """
    n, c = C.n, C.c
    report = CheckReport(OVERLAP_CHECK, subject=f"{n}x{n} matrix")
    for i in range(1, n):
        lhs = c(i, n) * c(1, i + 1) - c(i + 1, n) * c(1, i)
        rhs = c(i, i + 1) * c(1, n)
        report.checked += 1
        if lhs != rhs:
            report.add((i,), lhs, rhs, f"overlap identity fails at i={i}")
    return report
