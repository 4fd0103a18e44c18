"""
random_gen.py
=============
Seeded random inputs: rationals, dissections, weak friezes and assignments
of the indeterminates of a symbolic frieze.

Every generator is a deterministic function of its arguments and seed
(numpy ``default_rng``); negative seeds are taken modulo 2**64. Dissections
are drawn by recursively cutting cells along a random diagonal, which is not
uniform over dissections.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from config import get_settings
from frieze import WeakFrieze, glue
from geometry import Diagonal, Dissection, split_polygon, validate_dissection
from utils.error_handler import PreconditionError

logger = logging.getLogger(__name__)

ANY = "any"
TRIANGULATION = "triangulation"
MODES = (ANY, TRIANGULATION)

# numpy seeds must be non-negative; any 64-bit seed is folded into that range.
SEED_MODULUS = 2 ** 64


def random_rational(rng: np.random.Generator, low: Optional[int] = None, high: Optional[int] = None, signed: bool = True) -> Fraction:
    """
    Nonzero rational with numerator and denominator uniform in [low, high].

    Args:
        rng: numpy Generator
        low, high: Range (defaults from FRIEZE_RANDOM_LOW / FRIEZE_RANDOM_HIGH)
        signed: Choose the sign at random; otherwise positive
    """
    if low is None or high is None:
        settings = get_settings()
        low = settings.random_low if low is None else low
        high = settings.random_high if high is None else high
    numerator = int(rng.integers(low, high + 1))
    denominator = int(rng.integers(low, high + 1))
    value = Fraction(numerator, denominator)
    if signed and rng.random() < 0.5:
        value = -value
    return value


def random_dissection(n: int, seed: int, mode: str = ANY) -> Dissection:
    """
    Draw a dissection of the n-gon.

    Cells with at least four vertices are cut along a random one of their
    internal diagonals: always in triangulation mode, with probability 1/2
    otherwise.

    Args:
        n: Polygon size (at least 3)
        seed: Seed of the generator
        mode: "any" or "triangulation"
    """
    if n < 3:
        raise PreconditionError(f"a polygon needs at least 3 vertices, got n={n}")
    if mode not in MODES:
        raise PreconditionError(f"mode must be one of {MODES}, got {mode!r}")
    rng = np.random.default_rng(seed % SEED_MODULUS)
    chosen: List[Diagonal] = []
    stack: List[Tuple[int, ...]] = [tuple(range(1, n + 1))]
    while stack:
        cell = stack.pop()
        m = len(cell)
        if m < 4 or (mode == ANY and rng.random() < 0.5):
            continue
        candidates = [(i, j) for i in range(m) for j in range(i + 2, m) if not (i == 0 and j == m - 1)]
        i, j = candidates[int(rng.integers(len(candidates)))]
        chosen.append(Diagonal(cell[i], cell[j]))
        stack.append(cell[i:j + 1])
        stack.append(cell[j:] + cell[:i + 1])
    return validate_dissection(n, chosen)


def draw_weak_frieze(n: int, D: Dissection, seed: int) -> Tuple[WeakFrieze, int]:
    """
    Glue pieces with random nonzero rational values over the cells of D.

    Each diagonal inside a cell (edges and gluing diagonals included) gets an
    independent random value; values are redrawn from the next seed whenever
    a glued value comes out zero.

    Returns:
        (weak frieze with dissection D, number of attempts used)

    Raises:
        PreconditionError: If every attempt up to FRIEZE_MAX_RESEEDS yields a zero
    """
    settings = get_settings()
    cells = split_polygon(n, D)
    for attempt in range(settings.max_reseeds):
        rng = np.random.default_rng([seed % SEED_MODULUS, attempt])
        values: Dict[Diagonal, Fraction] = {}
        for cell in cells:
            for d in cell.diagonals():
                if d not in values:
                    values[d] = random_rational(rng, settings.random_low, settings.random_high)
        pieces = []
        for cell in cells:
            local = {
                Diagonal(p, q): values[Diagonal(cell.global_label(p), cell.global_label(q))]
                for p in range(1, cell.size + 1)
                for q in range(p + 1, cell.size + 1)
            }
            pieces.append((cell, WeakFrieze(cell.size, Dissection(cell.size, frozenset()), local)))
        f = glue(n, D, pieces)
        zeros = [d for d, v in f.items() if v == 0]
        if not zeros:
            return f, attempt + 1
        logger.info(f"seed {seed} attempt {attempt}: glued value 0 on {zeros[0]}, reseeding")
    raise PreconditionError(
        f"no weak frieze without zero values after {settings.max_reseeds} attempts (seed {seed})"
    )


def random_weak_frieze(n: int, D: Dissection, seed: int) -> WeakFrieze:
    """Random weak frieze with respect to D; see ``draw_weak_frieze``."""
    return draw_weak_frieze(n, D, seed)[0]


def random_assignment(universe: Iterable[str], seed: int, positive: bool = True) -> Dict[str, Fraction]:
    """
    Random nonzero rational values for indeterminates, in sorted name order.

    Positive values keep every subtraction-free expression nonzero.
    """
    rng = np.random.default_rng(seed % SEED_MODULUS)
    settings = get_settings()
    return {
        name: random_rational(rng, settings.random_low, settings.random_high, signed=not positive)
        for name in sorted(universe)
    }
