import random
from itertools import combinations

import pytest

from discarr.arrangement import NotGenericError, normals_generic
from discarr.discriminantal import build_disc
from discarr.exactmath import Matrix
from discarr.matroid import (
    DiscRankOracle,
    dilworth_independent,
    dilworth_rank,
    find_sdr,
    independent_collections,
    is_very_generic,
    uniform_circuits,
)


def test_uniform_circuits_small():
    assert uniform_circuits(3, 2) == [(1, 2, 3)]
    assert uniform_circuits(4, 2) == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    assert len(uniform_circuits(6, 2)) == 20


def test_uniform_circuits_rejects_bad_parameters():
    with pytest.raises(ValueError):
        uniform_circuits(2, 2)


def test_dilworth_dependent_triple():
    # union of the three triples has 4 elements, below 2 + 3
    assert not dilworth_independent([(1, 2, 3), (1, 2, 4), (2, 3, 4)], 2)


def test_dilworth_independent_disjoint_triples():
    assert dilworth_independent([(1, 2, 3), (4, 5, 6), (7, 8, 9)], 2)


def test_dilworth_single_member():
    assert dilworth_independent([(1, 2, 3)], 2)


def test_dilworth_rejects_wrong_cardinality():
    with pytest.raises(ValueError):
        dilworth_independent([(1, 2)], 2)


def test_dilworth_rank_examples():
    assert dilworth_rank([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)], 2) == 2
    assert dilworth_rank([], 2) == 0
    assert dilworth_rank(uniform_circuits(6, 2), 2) == 4


def independent_families(n, k, max_size):
    return [()] + list(independent_collections(n, k, max_size=max_size))


def test_matroid_axioms_exhaustive_n5():
    fams = independent_families(5, 2, 3)
    as_sets = {frozenset(f) for f in fams}
    # downward closure
    for f in fams:
        for i in range(len(f)):
            assert frozenset(f[:i] + f[i + 1 :]) in as_sets
    # exchange
    for f in fams:
        for g in fams:
            if len(f) >= len(g):
                continue
            extras = [e for e in g if e not in f]
            assert any(
                dilworth_independent(list(f) + [e], 2) for e in extras
            ), (f, g)


def test_matroid_axioms_sampled_n7():
    rng = random.Random(17)
    circuits = uniform_circuits(7, 2)
    for _ in range(300):
        size = rng.randint(1, 5)
        fam = rng.sample(circuits, size)
        if not dilworth_independent(fam, 2):
            continue
        # every subfamily stays independent
        drop = rng.randrange(size)
        sub = fam[:drop] + fam[drop + 1 :]
        if sub:
            assert dilworth_independent(sub, 2)
    for _ in range(200):
        f = rng.sample(circuits, rng.randint(1, 4))
        g = rng.sample(circuits, rng.randint(1, 5))
        if not (dilworth_independent(f, 2) and dilworth_independent(g, 2)):
            continue
        if len(f) >= len(g):
            continue
        extras = [e for e in g if e not in f]
        assert any(dilworth_independent(list(f) + [e], 2) for e in extras)


def test_find_sdr_basic():
    rep = find_sdr([{1, 2}, {2, 3}], {1, 2, 3})
    assert rep is not None
    assert len(set(rep)) == 2
    assert rep[0] in {1, 2} and rep[1] in {2, 3}


def test_find_sdr_hall_violation():
    assert find_sdr([{1}, {1}], {1, 2}) is None


def test_find_sdr_respects_ground():
    assert find_sdr([{1, 2}], {2}) == [2]
    assert find_sdr([{1, 2}], {3}) is None


def test_very_generic_false_with_witness(ex51):
    cert = is_very_generic(ex51.coeffs)
    assert not cert.verdict
    assert cert.witness is not None
    assert dilworth_independent(cert.witness, 2)
    oracle = DiscRankOracle(build_disc(ex51.coeffs))
    assert oracle.rank_of(cert.witness) < len(cert.witness)


def test_very_generic_witness_is_first_in_dfs_order(ex51):
    cert = is_very_generic(ex51.coeffs)
    oracle = DiscRankOracle(build_disc(ex51.coeffs))
    for coll in independent_collections(6, 2, max_size=4):
        if coll == cert.witness:
            break
        assert oracle.rank_of(coll) == len(coll)


def test_very_generic_true_instances(prop61):
    assert is_very_generic(prop61.coeffs).verdict
    frozen = Matrix.from_rows([[1, -5], [3, -8], [-7, 8], [-6, 2], [9, -8], [7, -3]])
    assert is_very_generic(frozen).verdict


def test_very_generic_requires_generic_rows():
    with pytest.raises(NotGenericError):
        is_very_generic(Matrix.from_rows([[1, 0], [2, 0], [0, 1]]))


def test_very_generic_scaling_invariance(ex51, prop61):
    from fractions import Fraction

    rng = random.Random(23)
    for mat, expected in ((ex51.coeffs, False), (prop61.coeffs, True)):
        rows = mat.row_lists()
        scaled = []
        for row in rows:
            factor = Fraction(rng.choice([-5, -2, 3, 7]), rng.choice([1, 3]))
            scaled.append([x * factor for x in row])
        assert is_very_generic(Matrix.from_rows(scaled)).verdict is expected


def test_random_integer_matrices_usually_very_generic():
    rng = random.Random(41)
    hits = 0
    trials = 0
    while trials < 5:
        rows = [[rng.randint(-1000, 1000), rng.randint(-1000, 1000)] for _ in range(6)]
        mat = Matrix.from_rows(rows)
        if not all(any(r) for r in rows) or not normals_generic(mat):
            continue
        trials += 1
        if is_very_generic(mat).verdict:
            hits += 1
    assert hits == 5


def test_represented_matroid_matches_row_rank(prop61):
    # for a certified very generic matrix, Dilworth independence of any
    # collection of size <= 4 coincides with linear independence of its rows
    oracle = DiscRankOracle(build_disc(prop61.coeffs))
    circuits = uniform_circuits(6, 2)
    for size in (1, 2, 3, 4):
        for coll in combinations(circuits, size):
            indep = dilworth_independent(coll, 2)
            full = oracle.rank_of(coll) == size
            assert indep == full, coll


def test_dilworth_rank_equals_row_rank_exhaustive_n5():
    rng = random.Random(4)
    mat = None
    while mat is None:
        rows = [[rng.randint(-20, 20), rng.randint(-20, 20)] for _ in range(5)]
        cand = Matrix.from_rows(rows)
        if all(any(r) for r in rows) and normals_generic(cand):
            if is_very_generic(cand).verdict:
                mat = cand
    oracle = DiscRankOracle(build_disc(mat))
    circuits = uniform_circuits(5, 2)
    for size in range(len(circuits) + 1):
        for coll in combinations(circuits, size):
            assert dilworth_rank(coll, 2) == oracle.rank_of(coll)


def test_dilworth_rank_equals_row_rank_sampled_n6(prop61):
    oracle = DiscRankOracle(build_disc(prop61.coeffs))
    circuits = uniform_circuits(6, 2)
    rng = random.Random(8)
    for _ in range(400):
        coll = rng.sample(circuits, rng.randint(0, 12))
        assert dilworth_rank(coll, 2) == oracle.rank_of(coll)
