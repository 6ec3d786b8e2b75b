import random
from fractions import Fraction

import pytest

from oracles import det_cofactor
from rrgl.hall_littlewood import (
    HLPolynomial,
    closed_form_specialization,
    hl_evaluate_cosets,
    hl_poly_cosets,
    hl_poly_full_sum,
    monomial_symmetric,
    principal_specialization,
    schur_via_alternants,
    theorem4_check,
)
from rrgl.partitions import Partition, enumerate_partitions
from rrgl.qseries import partition_sum_term

P = Partition
SMALL = [(lam, n) for lam in enumerate_partitions(4) for n in range(max(len(lam), 1), 5)]


def terms(poly):
    return poly.as_dict()


def test_cosets_examples():
    assert terms(hl_poly_cosets(P((1,)), 2)) == {(1, 0): (1,), (0, 1): (1,)}
    assert terms(hl_poly_cosets(P((1, 1)), 2)) == {(1, 1): (1,)}
    assert terms(hl_poly_cosets(P((2,)), 2)) == {(2, 0): (1,), (1, 1): (1, -1), (0, 2): (1,)}


def test_full_sum_examples():
    assert terms(hl_poly_full_sum(P((1,)), 2)) == {(1, 0): (1,), (0, 1): (1,)}
    assert hl_poly_full_sum(P((2,)), 2) == hl_poly_cosets(P((2,)), 2)
    assert hl_poly_full_sum(P((2, 1)), 3) == hl_poly_cosets(P((2, 1)), 3)


def test_full_sum_guard():
    with pytest.raises(ValueError):
        hl_poly_full_sum(P((1,)), 7)


@pytest.mark.parametrize("lam, n", SMALL, ids=str)
def test_definitions_agree(lam, n):
    assert hl_poly_cosets(lam, n) == hl_poly_full_sum(lam, n)


@pytest.mark.parametrize("lam, n", SMALL, ids=str)
def test_symmetric_and_homogeneous(lam, n):
    poly = hl_poly_cosets(lam, n)
    assert poly.is_symmetric()
    assert poly.degrees() <= {lam.size}


def _points(rng, n, count):
    out = []
    while len(out) < count:
        pt = [Fraction(rng.randint(-15, 15), rng.randint(1, 5)) for _ in range(n)]
        if len(set(pt)) == n:
            out.append(pt)
    return out


def _bialternant_oracle(lam, pt):
    n = len(pt)
    vec = lam.parts + (0,) * (n - len(lam))
    num = [[x ** (vec[j] + n - 1 - j) for j in range(n)] for x in pt]
    den = [[x ** (n - 1 - j) for j in range(n)] for x in pt]
    return det_cofactor(num) / det_cofactor(den)


@pytest.mark.parametrize("lam, n", SMALL, ids=str)
def test_t_zero_is_schur(lam, n):
    poly = hl_poly_cosets(lam, n)
    rng = random.Random(hash((lam.parts, n)) & 0xFFFF)
    for pt in _points(rng, n, 20):
        assert poly.evaluate(pt, 0) == schur_via_alternants(lam, pt) == _bialternant_oracle(lam, pt)


@pytest.mark.parametrize("lam, n", SMALL, ids=str)
def test_t_one_is_monomial(lam, n):
    assert hl_poly_cosets(lam, n).at_t(1) == monomial_symmetric(lam, n)


def test_schur_examples():
    assert schur_via_alternants(P((1,)), [1, 2]) == 3
    assert schur_via_alternants(P((2,)), [1, 2]) == 7
    assert schur_via_alternants(P((1, 1)), [1, 2]) == 2
    with pytest.raises(ValueError):
        schur_via_alternants(P((1,)), [1, 1])


def test_pointwise_evaluation_matches_symbolic():
    rng = random.Random(3)
    for lam, n in SMALL:
        poly = hl_poly_cosets(lam, n)
        for pt in _points(rng, n, 3):
            t = Fraction(rng.randint(-3, 3), 4)
            assert hl_evaluate_cosets(lam, pt, t) == poly.evaluate(pt, t)


def test_closed_form_examples():
    assert closed_form_specialization(P(), 2) == 1
    assert closed_form_specialization(P((1,)), 3) == Fraction(1, 2)
    assert closed_form_specialization(P((2, 1)), 2) == Fraction(1, 8)


def test_closed_forms_agree():
    for q in (2, 3, 5):
        for lam in enumerate_partitions(10):
            assert closed_form_specialization(lam, q, "n_lambda") == closed_form_specialization(
                lam, q, "conjugate_squares"
            )


def test_closed_form_is_gordon_summand_at_one_over_q():
    for q in (2, 3, 5):
        for lam in enumerate_partitions(10):
            assert closed_form_specialization(lam, q) == partition_sum_term(lam, Fraction(1, q))


def test_principal_specialization_examples():
    assert principal_specialization(P((1,)), 2, 4) == Fraction(15, 16)
    lam = P((2,))
    assert abs(principal_specialization(lam, 2, 6) - closed_form_specialization(lam, 2)) <= Fraction(1, 16)


@pytest.mark.parametrize("q", [2, 3])
def test_principal_specialization_converges(q):
    for lam in enumerate_partitions(3):
        if not lam.size:
            continue
        target = closed_form_specialization(lam, q)
        errs = [abs(target - principal_specialization(lam, q, N)) for N in range(len(lam), len(lam) + 6)]
        assert all(a > b for a, b in zip(errs, errs[1:]))


@pytest.mark.parametrize("q", [2, 3, 5])
@pytest.mark.parametrize("k", [2, 3])
def test_specialization_identity_consistent(q, k):
    res = theorem4_check(q, k, Fraction(1, 10**6))
    assert res.consistent
    assert res.lhs.width <= Fraction(1, 10**6) and res.rhs.width <= Fraction(1, 10**6)


def test_specialization_identity_large_q():
    res = theorem4_check(1000, 2, Fraction(1, 10**6))
    assert res.consistent
    assert abs(res.lhs.lo - 1) < Fraction(1, 100) and abs(res.rhs.lo - 1) < Fraction(1, 100)


def test_json_roundtrip():
    poly = hl_poly_cosets(P((2, 1)), 3)
    data = poly.to_json()
    assert {"exponents": [2, 1, 0], "t_coeffs": [1]} in data
    assert HLPolynomial.from_json(data, 3) == poly
