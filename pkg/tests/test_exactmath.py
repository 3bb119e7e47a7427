import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from discarr.exactmath import (
    DimensionError,
    Matrix,
    cayley_orthogonal,
    det,
    minor,
    nullspace,
    rank,
    rat,
    rat_str,
)


def perm_det(m: Matrix) -> Fraction:
    """Brute-force oracle: signed sum over all permutations."""
    n = m.rows
    total = Fraction(0)
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = Fraction(1)
        for i in range(n):
            term *= m[i, perm[i]]
        total += sign * term
    return total


small_rats = st.fractions(
    min_value=-10, max_value=10, max_denominator=6
)


def square_matrices(max_n=4):
    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.lists(small_rats, min_size=n * n, max_size=n * n).map(
            lambda xs: Matrix(n, n, xs)
        )
    )


def test_rat_parsing_and_formatting():
    assert rat("3/4") == Fraction(3, 4)
    assert rat("-6/4") == Fraction(-3, 2)
    assert rat(5) == Fraction(5)
    assert rat_str(Fraction(-3, 2)) == "-3/2"
    assert rat_str(Fraction(7)) == "7"


def test_det_triangular():
    assert det(Matrix.from_rows([[1, 0], [2, 3]])) == 3


def test_det_identity():
    assert det(Matrix.identity(4)) == 1


def test_det_three_by_three_hand_value():
    m = Matrix.from_rows([[1, 0, 0], [2, 3, -2], [3, 2, 3]])
    assert det(m) == 13
    assert perm_det(m) == 13


def test_det_non_square_rejected():
    with pytest.raises(DimensionError):
        det(Matrix.from_rows([[1, 2, 3], [4, 5, 6]]))


@settings(max_examples=150, deadline=None)
@given(square_matrices())
def test_det_matches_permutation_expansion(m):
    assert det(m) == perm_det(m)


@settings(max_examples=60, deadline=None)
@given(square_matrices(max_n=4), st.integers(min_value=0, max_value=3))
def test_det_repeated_row_is_zero(m, i):
    i = i % m.rows
    j = (i + 1) % m.rows
    if m.rows == 1:
        return
    rows = m.row_lists()
    rows[j] = rows[i]
    assert det(Matrix.from_rows(rows)) == 0


def test_rank_identity_and_duplicates():
    assert rank(Matrix.identity(5)) == 5
    assert rank(Matrix.from_rows([[1, 2, 3], [1, 2, 3]])) == 1
    assert rank(Matrix(0, 3, [])) == 0
    assert rank(Matrix(2, 0, [])) == 0


@settings(max_examples=100, deadline=None)
@given(
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=5),
    st.data(),
)
def test_rank_equals_rank_of_transpose(nr, nc, data):
    xs = data.draw(st.lists(small_rats, min_size=nr * nc, max_size=nr * nc))
    m = Matrix(nr, nc, xs)
    assert rank(m) == rank(m.transpose())


def test_minor_single_entry():
    m = Matrix.from_rows([[1, 2], [3, 4]])
    assert minor(m, [2], [1]) == 3


def test_minor_of_rational_rotation():
    rot = Matrix.from_rows([["3/5", "4/5"], ["-4/5", "3/5"]])
    assert minor(rot, [1], [1]) == Fraction(3, 5)
    assert minor(rot, [2], [2]) == Fraction(3, 5)


def test_minor_errors():
    m = Matrix.identity(3)
    with pytest.raises(DimensionError):
        minor(m, [1, 2], [1])
    with pytest.raises(ValueError):
        minor(m, [2, 1], [1, 2])
    with pytest.raises(IndexError):
        minor(m, [1, 4], [1, 2])


def test_nullspace_identity_is_trivial():
    ns = nullspace(Matrix.identity(3))
    assert ns.shape == (3, 0)


def test_nullspace_single_row():
    ns = nullspace(Matrix.from_rows([[1, 1]]))
    assert ns.shape == (2, 1)
    v = ns.col(0)
    assert v[0] == -v[1] != 0


def test_cayley_of_zero_is_identity():
    z = Matrix(3, 3, [0] * 9)
    assert cayley_orthogonal(z) == Matrix.identity(3)


def test_cayley_two_by_two_rotation():
    s = Matrix.from_rows([[0, 1], [-1, 0]])
    o = cayley_orthogonal(s)
    # direct 2x2 inversion: (I+S)^-1 = [[1,-1],[1,1]]/2, so O = [[0,-1],[1,0]]
    assert o == Matrix.from_rows([[0, -1], [1, 0]])
    assert o.transpose() @ o == Matrix.identity(2)
    assert det(o) == 1


def test_cayley_rejects_non_skew():
    with pytest.raises(ValueError):
        cayley_orthogonal(Matrix.from_rows([[0, 1], [1, 0]]))


def random_skew(n, rng):
    entries = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = Fraction(rng.randint(-8, 8), rng.randint(1, 4))
            entries[i][j] = x
            entries[j][i] = -x
    return Matrix.from_rows(entries)


def test_cayley_random_is_special_orthogonal():
    rng = random.Random(5)
    for _ in range(10):
        o = cayley_orthogonal(random_skew(5, rng))
        assert o.transpose() @ o == Matrix.identity(5)
        assert det(o) == 1


def test_orthogonal_principal_minors_match_complementary():
    from itertools import combinations

    rng = random.Random(11)
    for _ in range(6):
        n = rng.randint(2, 5)
        o = cayley_orthogonal(random_skew(n, rng))
        for r in range(1, n):
            for rows in combinations(range(1, n + 1), r):
                comp = tuple(i for i in range(1, n + 1) if i not in rows)
                a = minor(o, list(rows), list(rows))
                b = minor(o, list(comp), list(comp))
                assert a == b
                assert (a != 0) == (b != 0)
