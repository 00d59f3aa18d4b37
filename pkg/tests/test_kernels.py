"""Fraction-free elimination kernels, checked against rational Gaussian
elimination and across the compiled/pure backends."""

from __future__ import annotations

import random
from fractions import Fraction

from ncgram import kernels
from ncgram._kernels_py import det_bareiss, rank_echelon


def det_by_fractions(rows: list[list[int]]) -> Fraction:
    """Plain Gaussian elimination over ℚ — the independent oracle."""
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            factor = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= factor * a[k][j]
    return det


def rank_by_fractions(rows: list[list[int]]) -> int:
    a = [[Fraction(x) for x in row] for row in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    for col in range(n):
        pivot = next((i for i in range(rank, m) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for i in range(rank + 1, m):
            factor = a[i][col] / a[rank][col]
            for j in range(col, n):
                a[i][j] -= factor * a[rank][j]
        rank += 1
    return rank


def random_matrix(rng, n, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def test_known_small_determinants():
    assert det_bareiss([[5]]) == 5
    assert det_bareiss([[1, 2], [3, 4]]) == -2
    assert det_bareiss([[2, 0, 1], [1, 3, 2], [1, 1, 3]]) == 12
    assert det_bareiss([[1, 0], [0, 1]]) == 1


def test_singular_matrix_gives_zero():
    assert det_bareiss([[1, 2], [2, 4]]) == 0
    assert det_bareiss([[0, 0], [0, 0]]) == 0
    # zero leading column forces a pivot search
    assert det_bareiss([[0, 1], [1, 0]]) == -1


def test_determinant_matches_rational_elimination():
    rng = random.Random(7)
    for n in range(1, 8):
        for _ in range(12):
            m = random_matrix(rng, n)
            expected = det_by_fractions([row[:] for row in m])
            assert expected.denominator == 1
            assert det_bareiss([row[:] for row in m]) == expected


def test_intermediate_values_stay_integral_on_large_entries():
    rng = random.Random(11)
    m = random_matrix(rng, 6, lo=-10**6, hi=10**6)
    expected = det_by_fractions([row[:] for row in m])
    assert det_bareiss([row[:] for row in m]) == expected


def test_rank_echelon_matches_rational_elimination():
    rng = random.Random(13)
    for n in range(1, 7):
        for _ in range(10):
            m = random_matrix(rng, n, lo=-3, hi=3)
            assert rank_echelon([row[:] for row in m]) == rank_by_fractions(m)


def test_rank_of_structured_matrices():
    assert rank_echelon([[0, 0], [0, 0]]) == 0
    assert rank_echelon([[1, 2], [2, 4]]) == 1
    outer = [[i * j for j in range(1, 5)] for i in range(1, 5)]
    assert rank_echelon(outer) == 1
    # rank-2: sum of two independent outer products
    two = [[i * j + (i == j) for j in range(4)] for i in range(4)]
    assert rank_by_fractions(two) == rank_echelon([row[:] for row in two])


def test_backend_dispatch_agrees_with_pure_python():
    rng = random.Random(17)
    for n in (3, 5, 7):
        m = random_matrix(rng, n)
        assert kernels.det_exact([row[:] for row in m]) == det_bareiss([row[:] for row in m])
        assert kernels.rank_exact([row[:] for row in m]) == rank_echelon([row[:] for row in m])


def test_compiled_backend_parity_if_present():
    try:
        from ncgram import _kernels
    except ImportError:
        return  # pure-Python install; dispatch test above still covers it
    rng = random.Random(19)
    for n in (2, 4, 6):
        m = random_matrix(rng, n)
        assert _kernels.det_bareiss([row[:] for row in m]) == det_bareiss(
            [row[:] for row in m]
        )
        assert _kernels.rank_echelon([row[:] for row in m]) == rank_echelon(
            [row[:] for row in m]
        )


def test_reported_backend_is_consistent():
    assert kernels.BACKEND in {"python", "cython"}
    assert kernels.INTEGER_BACKEND.startswith(kernels.BACKEND)
