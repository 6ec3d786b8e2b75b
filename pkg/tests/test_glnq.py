from collections import Counter
from fractions import Fraction

import pytest

from oracles import unipotent_count
from rrgl.ffpoly import FqPoly
from rrgl.glnq import (
    AbstractClassData,
    census,
    census_matches_formula,
    census_probability,
    centralizer_order,
    class_size,
    enumerate_classes,
    exact_probability_max_part_lt,
    gl_order,
    gl_order_via_product,
    limit_probability,
    probability_by_classes,
    probability_by_cycle_index,
    semisimple_census,
    semisimple_limit_candidates,
)
from rrgl.partitions import Partition

P = Partition


def A(*blocks):
    return AbstractClassData(tuple(blocks))


@pytest.mark.parametrize("n, q, order", [(2, 2, 6), (2, 3, 48), (3, 2, 168), (0, 7, 1), (1, 5, 4)])
def test_gl_order_examples(n, q, order):
    assert gl_order(n, q) == order


def test_gl_order_product_form():
    for q in (2, 3, 5):
        for n in range(9):
            assert gl_order_via_product(n, q) == gl_order(n, q)


def test_centralizer_examples():
    assert centralizer_order(A((1, 0, P((1, 1)))), 2) == 6
    assert centralizer_order(A((1, 0, P((2,)))), 2) == 2
    assert centralizer_order(A((2, 0, P((1,)))), 2) == 3
    assert class_size(A((1, 0, P((2,)))), 2, 2) == 3
    assert class_size(A((2, 0, P((1,)))), 2, 2) == 2


@pytest.mark.parametrize("q", [2, 3])
def test_centralizer_forms_agree(q):
    for n in range(1, 6):
        for c in enumerate_classes(n, q):
            assert centralizer_order(c, q, "kung") == centralizer_order(c, q, "simplified")


def test_enumerate_classes_examples():
    assert sorted(class_size(c, 2, 2) for c in enumerate_classes(2, 2)) == [1, 2, 3]
    gl13 = enumerate_classes(1, 3)
    assert len(gl13) == 2 and all(class_size(c, 1, 3) == 1 for c in gl13)
    assert sum(class_size(c, 2, 3) for c in enumerate_classes(2, 3)) == 48


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_class_equation(n, q):
    classes = enumerate_classes(n, q)
    assert sum(gl_order(n, q) // centralizer_order(c, q) for c in classes) == gl_order(n, q)
    assert all(c.n == n for c in classes)


def test_class_count_gl2():
    # GL(2,q) has q^2 - 1 classes
    for q in (2, 3, 4, 5):
        assert len(enumerate_classes(2, q)) == q * q - 1


def test_enumerate_guard():
    with pytest.raises(ValueError):
        enumerate_classes(7, 2)


@pytest.mark.parametrize("n, q", [(2, 2), (3, 2)])
def test_unipotent_count_is_q_to_n_n_minus_1(n, q):
    unipotent_classes = [c for c in enumerate_classes(n, q) if [(m, t) for m, t, _ in c.entries] == [(1, 0)]]
    from_formula = sum(class_size(c, n, q) for c in unipotent_classes)
    assert from_formula == q ** (n * (n - 1)) == unipotent_count(n, q)


def test_census_gl22():
    tally = census(2, 2)
    z1, quad = FqPoly(2, (1, 1)), FqPoly(2, (1, 1, 1))
    got = {tuple((phi, lam) for phi, lam in cd.entries): cnt for cd, cnt in tally.items()}
    assert got == {((z1, P((1, 1))),): 1, ((z1, P((2,))),): 3, ((quad, P((1,))),): 2}


def test_census_gl12():
    tally = census(1, 2)
    assert list(tally.values()) == [1]
    assert list(tally)[0].as_dict() == {FqPoly(2, (1, 1)): P((1,))}


def test_census_guard():
    with pytest.raises(ValueError):
        census(5, 3)


@pytest.mark.parametrize("n, q", [(2, 2), (2, 3), (3, 2)])
def test_census_matches_kung(n, q):
    tally = census(n, q)
    assert sum(tally.values()) == gl_order(n, q)
    assert census_matches_formula(n, q, tally)


@pytest.mark.slow
def test_census_gl25():
    assert census_matches_formula(2, 5)


def test_census_parallel_shards_merge():
    assert census(2, 3, threads=2) == census(2, 3, threads=1)


def test_degree_one_tags_are_interchangeable():
    tally = census(2, 3)
    dist = [Counter(cd[FqPoly(3, (c, 1))] for cd, cnt in tally.items() for _ in range(cnt)) for c in (1, 2)]
    assert dist[0] == dist[1]


@pytest.mark.parametrize(
    "n, q, k, m, value",
    [(1, 2, 2, 1, 1), (1, 5, 2, 1, 1), (2, 2, 2, 1, Fraction(1, 2)), (2, 3, 2, 1, Fraction(5, 6))],
)
def test_probability_examples(n, q, k, m, value):
    assert exact_probability_max_part_lt(n, q, k, m) == value


def test_probability_spot_values_by_census():
    assert census_probability(census(2, 2), FqPoly(2, (1, 1)), 2) == Fraction(1, 2)
    assert census_probability(census(2, 3), FqPoly(3, (2, 1)), 2) == Fraction(5, 6)


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("m", [1, 2])
def test_probability_dual_path(q, k, m):
    for n in range(0, 5):
        assert probability_by_classes(n, q, k, m) == probability_by_cycle_index(n, q, k, m)


def test_probability_census_gl32_degree_two():
    phi = FqPoly(2, (1, 1, 1))
    tally = census(3, 2)
    for k in (1, 2):
        assert census_probability(tally, phi, k) == probability_by_cycle_index(3, 2, k, 2)


def test_limit_interval_q2():
    iv = limit_probability(2, 2, 1, Fraction(1, 10**6))
    assert iv.width <= Fraction(1, 10**6)
    assert Fraction(627, 1000) < iv.lo < iv.hi < Fraction(628, 1000)


def test_limit_large_q_tends_to_one():
    q = 1000
    iv = limit_probability(q, 2, 1, Fraction(1, 10**12))
    assert 1 - Fraction(2, q * q) <= iv.lo <= iv.hi <= 1


def test_limit_degree_two_larger():
    tol = Fraction(1, 10**9)
    assert limit_probability(2, 2, 2, tol).lo > limit_probability(2, 2, 1, tol).hi


def test_limit_convergence_q3():
    iv = limit_probability(3, 2, 1, Fraction(1, 10**8))
    assert iv.width <= Fraction(1, 10**8)
    p2, p8 = probability_by_cycle_index(2, 3, 2, 1), probability_by_cycle_index(8, 3, 2, 1)
    assert iv.distance_bounds(p8)[1] < Fraction(5, 1000)
    assert iv.distance_bounds(p8)[1] < iv.distance_bounds(p2)[0]


def test_semisimple_examples():
    for q in (2, 3, 5):
        res = semisimple_census(1, q)
        assert res.proportion == 1 and res.agree
    for n, q in ((2, 2), (2, 3)):
        res = semisimple_census(n, q)
        assert res.total == q ** (n * n)
        assert res.agree


def test_semisimple_mat22_by_hand():
    # Mat(2,2): 16 matrices; the 6 non-semisimple are 3 nilpotent nonzero and 3 nontrivial unipotent
    assert semisimple_census(2, 2).by_partitions == 10


def test_semisimple_candidates_are_reported_not_asserted():
    c = semisimple_limit_candidates(2)
    assert set(c) == {"shifted", "unshifted"}
    assert 0 < c["shifted"] < c["unshifted"] < 1
