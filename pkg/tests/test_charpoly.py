import random

import pytest

from discarr.charpoly import (
    CharPoly,
    char_poly_via_flats,
    count_cones,
    count_cones_deletion_restriction,
    kernel_backend,
    whitney_char_poly,
)


def test_charpoly_str_formatting():
    assert str(CharPoly((0, -1, 1))) == "x^2-x"
    assert str(CharPoly((-1, 3, -3, 1))) == "x^3-3x^2+3x-1"
    assert str(CharPoly((0, 0, 300, -426, 145, -20, 1))) == "x^6-20x^5+145x^4-426x^3+300x^2"
    assert str(CharPoly((0,))) == "0"
    assert str(CharPoly((5,))) == "5"


def test_single_hyperplane_in_plane():
    chi = whitney_char_poly([[1, 0]], ambient=2)
    assert chi == CharPoly((0, -1, 1))
    assert count_cones(chi, 2) == 2


def test_three_generic_planes_in_space():
    normals = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    chi = char_poly_via_flats(normals, ambient=3)
    assert chi == CharPoly((-1, 3, -3, 1))
    assert whitney_char_poly(normals) == chi


def test_example_counts(disc51, disc52):
    chi51 = whitney_char_poly(disc51)
    assert count_cones(chi51, 6) == 884
    assert char_poly_via_flats(disc51) == chi51
    chi52 = whitney_char_poly(disc52)
    assert count_cones(chi52, 6) == 888
    assert char_poly_via_flats(disc52) == chi52


def test_very_generic_reference_polynomial(disc61):
    chi = whitney_char_poly(disc61)
    assert str(chi) == "x^6-20x^5+145x^4-426x^3+300x^2"
    assert count_cones(chi, 6) == 892


def test_strict_count_ordering(disc51, disc52, disc61):
    ordered = [count_cones(whitney_char_poly(d), 6) for d in (disc51, disc52, disc61)]
    assert ordered == [884, 888, 892]
    assert ordered[2] > ordered[1] > ordered[0]


def test_deletion_restriction_examples(disc52):
    assert count_cones_deletion_restriction([[1, 0]], ambient=2) == 2
    assert count_cones_deletion_restriction(disc52) == 888


def test_chi_at_one_vanishes(disc51, disc52):
    for disc in (disc51, disc52):
        assert whitney_char_poly(disc)(1) == 0


def test_alternating_signs_down_to_corank(disc51):
    chi = whitney_char_poly(disc51)
    n = chi.degree
    r = 4
    for d in range(n, n - r - 1, -1):
        assert chi.coeffs[d] != 0
        assert (chi.coeffs[d] > 0) == ((n - d) % 2 == 0)
    for d in range(0, n - r):
        assert chi.coeffs[d] == 0


def random_central(rng, max_rows=8, max_dim=4):
    dim = rng.randint(1, max_dim)
    nrows = rng.randint(1, max_rows)
    rows = []
    while len(rows) < nrows:
        row = [rng.randint(-10, 10) for _ in range(dim)]
        if any(row):
            rows.append(row)
    return rows, dim


def test_three_algorithms_agree_on_random_instances():
    rng = random.Random(12)
    for _ in range(20):
        rows, dim = random_central(rng)
        chi = whitney_char_poly(rows, ambient=dim)
        assert char_poly_via_flats(rows, ambient=dim) == chi
        assert count_cones_deletion_restriction(rows, ambient=dim) == count_cones(chi, dim)


def test_pure_kernel_agrees_with_auto():
    rng = random.Random(33)
    for _ in range(6):
        rows, dim = random_central(rng, max_rows=7, max_dim=3)
        assert whitney_char_poly(rows, ambient=dim, impl="pure") == whitney_char_poly(
            rows, ambient=dim
        )


@pytest.mark.skipif(kernel_backend() != "compiled", reason="extension not built")
def test_compiled_kernel_agrees_on_fixture(disc52):
    assert whitney_char_poly(disc52, impl="compiled") == whitney_char_poly(
        disc52, impl="pure"
    )


def test_huge_entries_fall_back_to_pure_path():
    # entries way beyond the compiled kernel's safe bound must still work
    big = 10**40
    rows = [[big, 1], [1, big]]
    chi = whitney_char_poly(rows, ambient=2)
    assert chi == CharPoly((1, -2, 1))
    assert count_cones(chi, 2) == 4


def test_zero_normal_rejected():
    with pytest.raises(ValueError, match="zero"):
        whitney_char_poly([[0, 0]], ambient=2)
    with pytest.raises(ValueError, match="zero"):
        char_poly_via_flats([[1, 0], [0, 0]], ambient=2)


def test_count_cones_degree_check():
    with pytest.raises(ValueError):
        count_cones(CharPoly((0, -1, 1)), 3)


def test_parallel_normals_count_the_simple_arrangement():
    # duplicated directions collapse to one hyperplane in all three routes
    rows = [[1, 0], [2, 0], [0, 1]]
    chi = whitney_char_poly(rows, ambient=2)
    assert count_cones(chi, 2) == 4
    assert char_poly_via_flats(rows, ambient=2) == chi
    assert count_cones_deletion_restriction(rows, ambient=2) == 4
