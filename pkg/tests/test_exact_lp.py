from fractions import Fraction

import pytest

from quasilinkage.exact_lp import Unbounded, maximize


def test_textbook_problem():
    # max 3x + 5y  s.t.  x <= 4, 2y <= 12, 3x + 2y <= 18
    sol = maximize([3, 5], [[1, 0], [0, 2], [3, 2]], [4, 12, 18])
    assert sol.value == 36
    assert sol.x == [2, 6]
    assert all(isinstance(v, Fraction) for v in sol.x)


def test_strong_duality_and_complementary_slackness():
    a = [[1, 0], [0, 2], [3, 2]]
    b = [4, 12, 18]
    c = [3, 5]
    sol = maximize(c, a, b)
    assert all(y >= 0 for y in sol.duals)
    assert sum(y * bi for y, bi in zip(sol.duals, b)) == sol.value
    for j in range(2):
        assert sum(sol.duals[i] * a[i][j] for i in range(3)) >= c[j]
    for i, row in enumerate(a):
        slack = b[i] - sum(r * x for r, x in zip(row, sol.x))
        assert slack == 0 or sol.duals[i] == 0


def test_rational_optimum():
    sol = maximize([1, 1], [[3, 1], [1, 3]], [1, 1])
    assert sol.value == Fraction(1, 2)
    assert sol.x == [Fraction(1, 4), Fraction(1, 4)]


def test_degenerate_problem_terminates():
    # several constraints tight at the origin; Bland's rule avoids cycling
    a = [[Fraction(1, 2), Fraction(-11, 2), Fraction(-5, 2), 9], [Fraction(1, 2), Fraction(-3, 2), Fraction(-1, 2), 1], [1, 0, 0, 0]]
    sol = maximize([10, -57, -9, -24], a, [0, 0, 1])
    assert sol.value == 1


def test_unbounded():
    with pytest.raises(Unbounded):
        maximize([1, 0], [[0, 1]], [1])


def test_negative_rhs_rejected():
    with pytest.raises(ValueError):
        maximize([1], [[1]], [-1])
