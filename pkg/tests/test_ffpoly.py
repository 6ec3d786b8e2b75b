from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from oracles import irreducibles_by_products
from rrgl.ffpoly import (
    FqPoly,
    ModulusMismatch,
    count_irreducibles,
    enumerate_monic_irreducibles,
    factor_by_trial_division,
    fixed_t_factors,
    poly_gcd,
    verify_fixed_t_product,
    verify_telescoped_product,
)
from rrgl.qseries import TruncatedSeries


def F(q, *cs):
    return FqPoly(q, cs)


def u(T):
    return TruncatedSeries.monomial(1, T)


def test_frobenius_square():
    assert F(2, 1, 1) * F(2, 1, 1) == F(2, 1, 0, 1)


def test_gcd_over_f2():
    assert poly_gcd(F(2, 1, 0, 1), F(2, 1, 1)) == F(2, 1, 1)


def test_divmod_over_f3():
    quo, rem = divmod(F(3, 1, 0, 1), F(3, 2, 1))
    assert quo == F(3, 1, 1)
    assert rem == F(3, 2)


def test_derivative_and_monic():
    assert F(2, 1, 0, 1).derivative().is_zero()
    assert F(3, 1, 2, 1).derivative() == F(3, 2, 2)
    assert F(5, 2, 0, 3).monic() == F(5, 4, 0, 1)


def test_errors():
    with pytest.raises(ModulusMismatch):
        F(2, 1) + F(3, 1)
    with pytest.raises(ZeroDivisionError):
        divmod(F(3, 1, 1), FqPoly(3))


def test_trailing_zeros_stripped():
    assert F(3, 1, 0, 3).coeffs == (1,)
    assert FqPoly(5).degree == -1


poly_strategy = st.tuples(st.sampled_from([2, 3, 5]), st.lists(st.integers(0, 10), max_size=6))


@given(poly_strategy, st.lists(st.integers(0, 10), min_size=1, max_size=5))
def test_division_identity(fq, gs):
    q, fs = fq
    f, g = FqPoly(q, tuple(fs)), FqPoly(q, tuple(gs))
    if g.is_zero():
        return
    quo, rem = divmod(f, g)
    assert quo * g + rem == f
    assert rem.degree < g.degree


@given(poly_strategy, poly_strategy)
def test_degree_of_product(a, b):
    f = FqPoly(a[0], tuple(a[1]))
    g = FqPoly(a[0], tuple(b[1]))
    if f.is_zero() or g.is_zero():
        assert (f * g).is_zero()
    else:
        assert (f * g).degree == f.degree + g.degree


@given(poly_strategy, poly_strategy)
def test_gcd_divides_both(a, b):
    f, g = FqPoly(a[0], tuple(a[1])), FqPoly(a[0], tuple(b[1]))
    d = poly_gcd(f, g)
    if d.is_zero():
        assert f.is_zero() and g.is_zero()
    else:
        assert (f % d).is_zero() and (g % d).is_zero()


def test_enumerate_examples():
    assert enumerate_monic_irreducibles(2, 1)[1] == [F(2, 0, 1), F(2, 1, 1)]
    assert enumerate_monic_irreducibles(2, 2)[2] == [F(2, 1, 1, 1)]
    assert enumerate_monic_irreducibles(3, 1)[1] == [F(3, 0, 1), F(3, 1, 1), F(3, 2, 1)]


@pytest.mark.parametrize("q, d_max", [(2, 6), (3, 4), (5, 3)])
def test_enumerate_matches_product_oracle(q, d_max):
    table = enumerate_monic_irreducibles(q, d_max)
    for d in range(1, d_max + 1):
        assert sorted(f.coeffs for f in table[d]) == sorted(irreducibles_by_products(q, d))


def test_enumerate_guards():
    with pytest.raises(ValueError, match="count_irreducibles"):
        enumerate_monic_irreducibles(2, 21)
    with pytest.raises(ValueError):
        enumerate_monic_irreducibles(4, 2)


@pytest.mark.parametrize("q, d, n", [(2, 2, 1), (2, 4, 3), (3, 2, 3), (2, 1, 2), (5, 3, 40)])
def test_count_examples(q, d, n):
    assert count_irreducibles(q, d) == n


@pytest.mark.parametrize("q", [2, 3])
def test_count_matches_enumeration(q):
    d_max = 6 if q == 2 else 6
    table = enumerate_monic_irreducibles(q, d_max)
    for d in range(1, d_max + 1):
        assert count_irreducibles(q, d) == len(table[d])


@pytest.mark.parametrize("q", [2, 3, 5])
def test_every_field_element_has_a_minimal_polynomial(q):
    for D in range(1, 9):
        assert sum(d * count_irreducibles(q, d) for d in range(1, D + 1) if D % d == 0) == q**D


def test_factor_by_trial_division():
    irr = enumerate_monic_irreducibles(2, 3)
    flat = [f for d in sorted(irr) for f in irr[d]]
    f = F(2, 1, 1) ** 2 * F(2, 1, 1, 1)
    assert factor_by_trial_division(f, flat) == [(F(2, 1, 1), 2), (F(2, 1, 1, 1), 1)]


def test_fixed_t_examples():
    assert verify_fixed_t_product(2, 1, 10) == 1 - u(10)
    assert verify_fixed_t_product(3, 2, 10) == 1 - u(10) * Fraction(1, 3)


def test_fixed_t_u_squared_decomposition():
    factors = fixed_t_factors(2, 1, 2)
    assert factors[1][2] == Fraction(1, 4)
    assert factors[2][2] == Fraction(-1, 4)
    assert verify_fixed_t_product(2, 1, 2)[2] == 0


@pytest.mark.parametrize("q", [2, 3, 5])
@pytest.mark.parametrize("t", [1, 2, 3])
def test_fixed_t_identity(q, t):
    assert verify_fixed_t_product(q, t, 25) == 1 - u(25) * Fraction(1, q ** (t - 1))


def test_telescoped_examples():
    T = 5
    one = verify_telescoped_product(2, 1, T)
    assert one == (1 - u(T)) * TruncatedSeries([Fraction(1, 2**j) for j in range(T + 1)], T)
    assert verify_telescoped_product(2, 4, 8) == (1 - u(8)) / (1 - u(8) * Fraction(1, 16))
    assert verify_telescoped_product(7, 3, 6)[0] == 1


@pytest.mark.parametrize("q", [2, 3, 5])
def test_telescoped_residual_bound(q):
    T = 15
    for t_max in range(1, 7):
        got = verify_telescoped_product(q, t_max, T)
        assert got == (1 - u(T)) / (1 - u(T) * Fraction(1, q**t_max))
        assert max(abs(c) for c in (got - (1 - u(T))).coeffs) <= Fraction(1, q**t_max)


def test_json_roundtrip():
    f = F(3, 2, 0, 1)
    assert f.to_json() == {"q": 3, "coeffs": [2, 0, 1]}
    assert FqPoly.from_json(f.to_json()) == f
