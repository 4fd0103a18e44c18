"""
Library checks against the brute-force reference implementations in tests/oracle.py.
"""

from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frieze import check_frieze, check_weak_frieze, glue, pieces_of
from gallery import constant_frieze, random_dissection, random_weak_frieze
from geometry import Diagonal, validate_dissection
from matrix import det_bareiss, det_leibniz
from tests.oracle import exhaustive_ptolemy, glue_permuted
from utils.error_handler import TooLarge


def test_exhaustive_agrees_on_octagon(octagon):
    oracle = exhaustive_ptolemy(octagon)
    full = check_frieze(octagon)
    assert oracle.locations() == full.locations()
    assert oracle.checked == full.checked == 70


def test_exhaustive_small_cases():
    assert len(exhaustive_ptolemy(constant_frieze(5, 1)).violations) == 5
    triangle = exhaustive_ptolemy(constant_frieze(3, 1))
    assert triangle.passed
    assert triangle.checked == 0


def test_exhaustive_limit(monkeypatch):
    with pytest.raises(TooLarge):
        exhaustive_ptolemy(constant_frieze(13, 1))
    monkeypatch.setenv("FRIEZE_EXHAUSTIVE_MAX", "6")
    with pytest.raises(TooLarge):
        exhaustive_ptolemy(constant_frieze(7, 1))


def test_weak_check_matches_exhaustive_on_perturbed_friezes():
    rng = np.random.default_rng(2024)
    for seed in range(20):
        n = 5 + seed % 5
        D = random_dissection(n, seed)
        f = random_weak_frieze(n, D, seed)
        i, j = sorted(int(v) for v in rng.choice(np.arange(1, n + 1), size=2, replace=False))
        f = f.with_value(Diagonal(i, j), f.value(i, j) + 1)
        oracle = exhaustive_ptolemy(f)
        assert oracle.locations() == check_frieze(f).locations()
        # Weak violations are exactly the failures whose crossing pair meets D.
        expected = {
            quad for quad in oracle.locations()
            if Diagonal(quad[0], quad[2]) in D or Diagonal(quad[1], quad[3]) in D
        }
        assert check_weak_frieze(f).locations() == expected


def test_glue_permuted_on_octagon(octagon, octagon_dissection):
    pieces = pieces_of(octagon, octagon_dissection)
    for order in ([Diagonal(1, 4), Diagonal(5, 8)], [Diagonal(5, 8), Diagonal(1, 4)]):
        assert glue_permuted(8, octagon_dissection, pieces, order) == octagon
    assert glue(8, octagon_dissection, pieces) == octagon


def test_glue_permuted_on_random_gluings():
    compared = 0
    for seed in range(60):
        if compared == 20:
            break
        n = 6 + seed % 7
        D = random_dissection(n, seed, "triangulation" if seed % 2 else "any")
        if len(D) < 2:
            continue
        f = random_weak_frieze(n, D, seed)
        rng = np.random.default_rng(seed)
        diagonals = D.sorted()
        order = [diagonals[int(k)] for k in rng.permutation(len(diagonals))]
        gluing = validate_dissection(n, order[: min(4, max(2, len(order) // 2 + 1))])
        pieces = pieces_of(f, gluing)
        glued = glue(n, gluing, pieces)
        assert glued == f
        for order in permutations(gluing.sorted()):
            assert glue_permuted(n, gluing, pieces, list(order)) == glued
        compared += 1
    assert compared == 20


def test_glue_permuted_every_order_on_decagons():
    for seed in range(20):
        T = random_dissection(10, seed, "triangulation")
        f = random_weak_frieze(10, T, seed)
        rng = np.random.default_rng(seed)
        diagonals = T.sorted()
        chosen = sorted(int(k) for k in rng.choice(len(diagonals), size=3, replace=False))
        gluing = validate_dissection(10, [diagonals[k] for k in chosen])
        pieces = pieces_of(f, gluing)
        glued = glue(10, gluing, pieces)
        assert glued == f
        orders = list(permutations(gluing.sorted()))
        assert len(orders) == 6
        for order in orders:
            assert glue_permuted(10, gluing, pieces, list(order)) == glued


square_size = st.integers(min_value=1, max_value=6)
entry = st.fractions(min_value=-10, max_value=10, max_denominator=7)


@settings(max_examples=60, deadline=None)
@given(square_size.flatmap(lambda n: st.lists(st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_leibniz(rows):
    rows = [[Fraction(v) for v in row] for row in rows]
    assert det_bareiss(rows) == det_leibniz(rows)


@settings(max_examples=40, deadline=None)
@given(square_size, st.data())
def test_bareiss_matches_leibniz_on_frieze_shaped_matrices(n, data):
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = Fraction(data.draw(entry))
    assert det_bareiss(rows) == det_leibniz(rows)
