import random
from fractions import Fraction

import pytest

from discarr.arrangement import normals_generic
from discarr.discriminantal import (
    build_disc,
    canonical_normals,
    disc_row,
    subsets_lex,
)
from discarr.exactmath import Matrix, nullspace, rank
from discarr.fixtures import EXAMPLE_5_1_NORMALS
from discarr.matroid import dilworth_independent


def test_subsets_dictionary_order():
    assert subsets_lex(4, 3) == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]


def test_disc_row_printed_values(ex51):
    a = ex51.coeffs
    assert disc_row(a, (1, 2, 3)) == [-5, -2, 3, 0, 0, 0]
    assert disc_row(a, (1, 2, 4)) == [2, -1, 0, 3, 0, 0]
    assert disc_row(a, (4, 5, 6)) == [0, 0, 0, -5, 2, -3]


def test_build_disc_matches_all_printed_rows(disc51):
    got = tuple(
        (s, tuple(int(x) for x in row))
        for s, row in zip(disc51.subsets, disc51.normals)
    )
    assert got == EXAMPLE_5_1_NORMALS


def test_build_disc_counts_and_support(disc51):
    assert len(disc51.subsets) == 20
    for s, row in zip(disc51.subsets, disc51.normals):
        support = {i + 1 for i, x in enumerate(row) if x != 0}
        assert support == set(s)


def test_build_disc_single_subset():
    a = Matrix.from_rows([[1, 0], [0, 1], [1, 1]])
    disc = build_disc(a)
    assert disc.subsets == ((1, 2, 3),)


def test_build_disc_rejects_wide_matrices():
    with pytest.raises(ValueError):
        build_disc(Matrix.from_rows([[1, 0], [0, 1]]))


def test_disc_rows_annihilate_columns(disc51, ex51):
    prod = disc51.normals_matrix() @ ex51.coeffs
    assert all(x == 0 for x in prod.entries)


def test_disc_orthogonality_on_random_matrices():
    rng = random.Random(9)
    for _ in range(8):
        n = rng.randint(3, 6)
        m = rng.randint(1, n - 1)
        a = Matrix(
            n, m, [Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(n * m)]
        )
        if not all(any(a.row(i)) for i in range(n)):
            continue
        disc = build_disc(a)
        prod = disc.normals_matrix() @ a
        assert all(x == 0 for x in prod.entries)


def test_disc_rank_is_n_minus_m(disc51):
    assert rank(disc51.normals_matrix()) == 4


def test_nullspace_of_dilworth_basis_rows_is_column_span(disc51, ex51):
    basis = ((1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 5, 6))
    assert dilworth_independent(basis, 2)
    rows = [list(disc51.normals[disc51.index_of(s)]) for s in basis]
    sub = Matrix.from_rows(rows)
    assert rank(sub) == 4
    ns = nullspace(sub)
    assert ns.shape == (6, 2)
    # the nullspace and the coefficient column span coincide
    stacked = Matrix.from_rows(
        [[ns[i, j] for i in range(6)] for j in range(2)]
        + [list(ex51.coeffs.col(j)) for j in range(2)]
    )
    assert rank(stacked) == 2


def test_row_scaling_acts_through_the_minors(ex51):
    # scaling coefficient row 1 by 3 multiplies exactly the minors that use
    # row 1: in a disc row for a subset containing 1, every entry except
    # position 1 picks up the factor
    rows = ex51.coeffs.row_lists()
    rows[0] = [3 * x for x in rows[0]]
    scaled = build_disc(Matrix.from_rows(rows))
    base = build_disc(ex51.coeffs)
    for s, got, ref in zip(base.subsets, scaled.normals, base.normals):
        for j in range(6):
            factor = 3 if (1 in s and j != 0) else 1
            assert got[j] == factor * ref[j]


def test_canonical_normals_are_primitive(disc51):
    import math

    for row in canonical_normals(disc51):
        nz = [x for x in row if x]
        g = 0
        for x in nz:
            g = math.gcd(g, abs(x))
        assert g == 1
        assert nz[0] > 0


def test_generic_precondition_of_fixture(ex51):
    assert normals_generic(ex51.coeffs)
