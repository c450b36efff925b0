import itertools
import math
import random

from hypothesis import given, settings, strategies as st

from quasilinkage.snf import invariant_factors, smith_diagonal


def det(m):
    """Integer determinant by cofactor expansion (small matrices only)."""
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * det([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(len(m)))


def determinantal_factors(m):
    """Invariant factors from gcds of k x k minors: d_k = D_k / D_(k-1)."""
    rows, cols = len(m), len(m[0]) if m else 0
    out, prev = [], 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for ri in itertools.combinations(range(rows), k):
            for ci in itertools.combinations(range(cols), k):
                g = math.gcd(g, det([[m[i][j] for j in ci] for i in ri]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def test_known_diagonal():
    m = [[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]]
    assert smith_diagonal(m) == [1, 10, 30]


def test_torsion_of_projective_plane_boundary():
    # d_2 of the minimal CW structure of RP^2 is multiplication by 2
    assert smith_diagonal([[2]]) == [2]
    assert invariant_factors([{0: 2}]) == [2]


def test_zero_and_empty():
    assert smith_diagonal([[0, 0], [0, 0]]) == []
    assert smith_diagonal([]) == []
    assert invariant_factors([]) == []
    assert invariant_factors([{}, {}]) == []


def test_divisibility_chain():
    m = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    d = smith_diagonal(m)
    assert d == [2, 6, 12]
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=300, deadline=None)
@given(matrices)
def test_dense_matches_minors(m):
    assert smith_diagonal(m) == determinantal_factors(m)


@settings(max_examples=300, deadline=None)
@given(matrices)
def test_sparse_matches_dense(m):
    rows = [{j: v for j, v in enumerate(row) if v} for row in m]
    assert invariant_factors(rows) == smith_diagonal(m)


def test_sparse_on_larger_random_matrices():
    rng = random.Random(3)
    for _ in range(30):
        r, c = rng.randint(5, 25), rng.randint(5, 25)
        m = [[rng.choice([0, 0, 0, 1, -1, 2]) for _ in range(c)] for _ in range(r)]
        rows = [{j: v for j, v in enumerate(row) if v} for row in m]
        assert invariant_factors(rows) == smith_diagonal(m)
