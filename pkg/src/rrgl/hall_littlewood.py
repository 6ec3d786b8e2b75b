"""Hall-Littlewood polynomials P_lambda(x_1..x_n; t) with symbolic t.

Two constructions are provided: the sum over distinct rearrangements of the
padded exponent vector (cosets of the stabilizer), and the full symmetrization
over S_n divided by the normalizer. Both clear the denominators with the
Vandermonde product and then divide it back out exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import isqrt
from typing import Sequence

import sympy
from sympy.combinatorics import Permutation

from .partitions import Partition, n_stat, statistics
from .qseries import _decreasing_tuples, gordon_excluded, pochhammer_value
from .bounds import Interval, geometric_tail

FULL_SUM_MAX_VARS = 6

# Polynomials in x_1..x_n and t: {(e_1, ..., e_n, e_t): int}
Poly = dict


def _add_into(acc: Poly, p: Poly, sign: int = 1):
    for e, c in p.items():
        v = acc.get(e, 0) + sign * c
        if v:
            acc[e] = v
        else:
            acc.pop(e, None)


def _mul(p: Poly, r: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in r.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def _var(n: int, a: int) -> tuple[int, ...]:
    e = [0] * (n + 1)
    e[a] = 1
    return tuple(e)


def _linear(n: int, a: int, b: int, t_coeff: bool) -> Poly:
    """x_a - x_b, or x_a - t x_b when t_coeff."""
    eb = list(_var(n, b))
    if t_coeff:
        eb[n] = 1
    return {_var(n, a): 1, tuple(eb): -1}


def _divide_linear(p: Poly, n: int, a: int, b: int) -> Poly:
    """Exact quotient p / (x_a - x_b); raises if the remainder is nonzero."""
    rem = dict(p)
    quo: Poly = {}
    top = max((e[a] for e in rem), default=0)
    for deg in range(top, 0, -1):
        for e in [e for e in rem if e[a] == deg]:
            c = rem.pop(e)
            m = list(e)
            m[a] -= 1
            m = tuple(m)
            quo[m] = quo.get(m, 0) + c
            shifted = list(m)
            shifted[b] += 1
            shifted = tuple(shifted)
            v = rem.get(shifted, 0) + c
            if v:
                rem[shifted] = v
            else:
                rem.pop(shifted, None)
    if rem:
        raise ArithmeticError(f"x_{a + 1} - x_{b + 1} does not divide the numerator")
    return {e: c for e, c in quo.items() if c}


def _divide_vandermonde(p: Poly, n: int) -> Poly:
    for a in range(n):
        for b in range(a + 1, n):
            p = _divide_linear(p, n, a, b)
    return p


def _permute(p: Poly, w: Sequence[int]) -> Poly:
    """Apply x_i -> x_{w(i)}."""
    n = len(w)
    out: Poly = {}
    for e, c in p.items():
        new = [0] * (n + 1)
        for i in range(n):
            new[w[i]] = e[i]
        new[n] = e[n]
        out[tuple(new)] = c
    return out


def _padded(lam: Partition, n_vars: int) -> tuple[int, ...]:
    if len(lam) > n_vars:
        raise ValueError(f"partition {lam} has more than {n_vars} parts")
    return lam.parts + (0,) * (n_vars - len(lam))


def _distinct_rearrangements(vec: tuple[int, ...]):
    return sorted(set(permutations(vec)))


@dataclass(frozen=True)
class HLPolynomial:
    """Symmetric polynomial in x_1..x_n whose coefficients are integer polynomials in t."""

    n_vars: int
    terms: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    @classmethod
    def from_poly(cls, p: Poly, n_vars: int) -> "HLPolynomial":
        grouped: dict[tuple[int, ...], dict[int, int]] = {}
        for e, c in p.items():
            grouped.setdefault(e[:n_vars], {})[e[n_vars]] = c
        terms = []
        for x_exp in sorted(grouped, reverse=True):
            tc = grouped[x_exp]
            coeffs = [tc.get(j, 0) for j in range(max(tc) + 1)]
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
            if coeffs:
                terms.append((x_exp, tuple(coeffs)))
        return cls(n_vars, tuple(terms))

    def as_dict(self) -> dict[tuple[int, ...], tuple[int, ...]]:
        return dict(self.terms)

    def at_t(self, t) -> dict[tuple[int, ...], Fraction]:
        """Coefficients in x after substituting a number for t."""
        out = {}
        for e, tc in self.terms:
            v = sum(Fraction(c) * Fraction(t) ** j for j, c in enumerate(tc))
            if v:
                out[e] = v
        return out

    def evaluate(self, point: Sequence, t) -> Fraction:
        if len(point) != self.n_vars:
            raise ValueError("point has the wrong number of coordinates")
        total = Fraction(0)
        pt = [Fraction(x) for x in point]
        for e, c in self.at_t(t).items():
            term = c
            for x, k in zip(pt, e):
                term *= x**k
            total += term
        return total

    def permuted(self, w: Sequence[int]) -> "HLPolynomial":
        out = {}
        for e, tc in self.terms:
            new = [0] * self.n_vars
            for i in range(self.n_vars):
                new[w[i]] = e[i]
            out[tuple(new)] = tc
        return HLPolynomial(self.n_vars, tuple(sorted(out.items(), reverse=True)))

    def is_symmetric(self) -> bool:
        n = self.n_vars
        d = self.as_dict()
        for a in range(n - 1):
            w = list(range(n))
            w[a], w[a + 1] = w[a + 1], w[a]
            if self.permuted(w).as_dict() != d:
                return False
        return True

    def degrees(self) -> set[int]:
        return {sum(e) for e, _ in self.terms}

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "t_coeffs": list(tc)} for e, tc in self.terms]

    @classmethod
    def from_json(cls, data: list[dict], n_vars: int) -> "HLPolynomial":
        return cls(n_vars, tuple((tuple(d["exponents"]), tuple(d["t_coeffs"])) for d in data))


def hl_poly_cosets(lam: Partition, n_vars: int) -> HLPolynomial:
    """sum over distinct rearrangements mu of the padded lambda of
    x^mu prod_{mu_a > mu_b} (x_a - t x_b) / (x_a - x_b).
    """
    n = n_vars
    lam_vec = _padded(lam, n)
    numerator: Poly = {}
    for mu in _distinct_rearrangements(lam_vec):
        term: Poly = {tuple(mu) + (0,): 1}
        # times the Vandermonde prod_{a<b} (x_a - x_b) so every term is polynomial
        for a in range(n):
            for b in range(a + 1, n):
                if mu[a] > mu[b]:
                    factor = _linear(n, a, b, True)
                elif mu[a] < mu[b]:
                    factor = {e: -c for e, c in _linear(n, b, a, True).items()}
                else:
                    factor = _linear(n, a, b, False)
                term = _mul(term, factor)
        _add_into(numerator, term)
    return HLPolynomial.from_poly(_divide_vandermonde(numerator, n), n)


def _t_bracket_product(lam: Partition, n_vars: int) -> list[int]:
    # prod_{i>=0} prod_{r=1}^{m_i} (1 - t^r)/(1 - t), zero parts included
    mult = statistics(lam).m
    mult = dict(mult)
    mult[0] = n_vars - len(lam)
    poly = [1]
    for m in mult.values():
        for r in range(1, m + 1):
            bracket = [1] * r
            out = [0] * (len(poly) + r - 1)
            for i, a in enumerate(poly):
                for j, b in enumerate(bracket):
                    out[i + j] += a * b
            poly = out
    return poly


def _divide_t(tc: list[int], divisor: list[int]) -> list[int]:
    # exact division of integer polynomials in t; divisor is monic
    rem = list(tc)
    dl = len(divisor) - 1
    if len(rem) <= dl:
        if any(rem):
            raise ArithmeticError("t-normalizer does not divide")
        return []
    quo = [0] * (len(rem) - dl)
    for shift in range(len(rem) - 1 - dl, -1, -1):
        c = rem[shift + dl]
        quo[shift] = c
        if c:
            for j, b in enumerate(divisor):
                rem[shift + j] -= c * b
    if any(rem):
        raise ArithmeticError("t-normalizer does not divide")
    return quo


def hl_poly_full_sum(lam: Partition, n_vars: int) -> HLPolynomial:
    """(1/v_lambda(t)) sum_{w in S_n} w(x^lambda prod_{i<j} (x_i - t x_j)/(x_i - x_j)).

    v_lambda(t) includes the factor for the n - l(lambda) zero parts.
    """
    n = n_vars
    if n > FULL_SUM_MAX_VARS:
        raise ValueError(f"full symmetrization is limited to n_vars <= {FULL_SUM_MAX_VARS}")
    lam_vec = _padded(lam, n)
    g: Poly = {tuple(lam_vec) + (0,): 1}
    for a in range(n):
        for b in range(a + 1, n):
            g = _mul(g, _linear(n, a, b, True))
    # w(prod_{i<j}(x_i - x_j)) = sign(w) * Vandermonde
    numerator: Poly = {}
    for w in permutations(range(n)):
        sign = Permutation(list(w)).signature()
        _add_into(numerator, _permute(g, w), sign)
    quotient = _divide_vandermonde(numerator, n)
    norm = _t_bracket_product(lam, n)
    grouped: dict[tuple[int, ...], dict[int, int]] = {}
    for e, c in quotient.items():
        grouped.setdefault(e[:n], {})[e[n]] = c
    out: Poly = {}
    for x_exp, tcs in grouped.items():
        tc = [tcs.get(j, 0) for j in range(max(tcs) + 1)]
        for j, c in enumerate(_divide_t(tc, norm)):
            if c:
                out[x_exp + (j,)] = c
    return HLPolynomial.from_poly(out, n)


def monomial_symmetric(lam: Partition, n_vars: int) -> dict[tuple[int, ...], Fraction]:
    """m_lambda as {exponent vector: 1}."""
    return {mu: Fraction(1) for mu in _distinct_rearrangements(_padded(lam, n_vars))}


def schur_via_alternants(lam: Partition, point: Sequence) -> Fraction:
    """det(x_i^(lambda_j + n - j)) / det(x_i^(n - j)) at a point with distinct coordinates."""
    pt = [Fraction(x) for x in point]
    n = len(pt)
    if len(set(pt)) != n:
        raise ValueError("bialternant needs pairwise distinct coordinates")
    lam_vec = _padded(lam, n)
    num = sympy.Matrix(n, n, lambda i, j: sympy.Rational(pt[i].numerator, pt[i].denominator) ** (lam_vec[j] + n - 1 - j))
    den = sympy.Matrix(n, n, lambda i, j: sympy.Rational(pt[i].numerator, pt[i].denominator) ** (n - 1 - j))
    val = sympy.Rational(num.det(method="bareiss")) / sympy.Rational(den.det(method="bareiss"))
    return Fraction(int(val.p), int(val.q))


def hl_evaluate_cosets(lam: Partition, point: Sequence, t) -> Fraction:
    """Value of P_lambda at a point with distinct coordinates, summing the coset
    terms numerically (no symbolic expansion).
    """
    pt = [Fraction(x) for x in point]
    t = Fraction(t)
    n = len(pt)
    if len(set(pt)) != n:
        raise ValueError("pointwise coset evaluation needs distinct coordinates")
    total = Fraction(0)
    for mu in _distinct_rearrangements(_padded(lam, n)):
        term = Fraction(1)
        for a in range(n):
            term *= pt[a] ** mu[a]
        for a in range(n):
            for b in range(n):
                if mu[a] > mu[b]:
                    term *= (pt[a] - t * pt[b]) / (pt[a] - pt[b])
        total += term
    return total


def principal_specialization(lam: Partition, q: int, n_vars: int) -> Fraction:
    """P_lambda(1/q, 1/q^2, ..., 1/q^N; 1/q) / q^n(lambda)."""
    if n_vars < len(lam):
        raise ValueError("need at least as many variables as parts")
    point = [Fraction(1, q**i) for i in range(1, n_vars + 1)]
    return hl_evaluate_cosets(lam, point, Fraction(1, q)) / q ** n_stat(lam)


def closed_form_specialization(lam: Partition, q: int, form: str = "both") -> Fraction:
    """1 / (q^(|lambda| + 2 n(lambda)) prod_i (1/q)_{m_i}), also written with sum lambda'^2.

    form is "n_lambda", "conjugate_squares" or "both" (computes both and checks).
    """
    st = statistics(lam)
    poch = Fraction(1)
    for mult in st.m.values():
        poch *= pochhammer_value(Fraction(1, q), mult)
    via_n = 1 / (q ** (lam.size + 2 * st.n_lambda) * poch)
    via_conj = 1 / (q**st.sum_conj_sq * poch)
    if form == "n_lambda":
        return via_n
    if form == "conjugate_squares":
        return via_conj
    if via_n != via_conj:
        raise AssertionError(f"closed forms disagree for {lam}: {via_n} vs {via_conj}")
    return via_n


@dataclass(frozen=True)
class SpecializationIdentityResult:
    q: int
    k: int
    lhs: Interval
    rhs: Interval
    tol: Fraction
    terms_used: int

    @property
    def consistent(self) -> bool:
        return self.lhs.overlaps(self.rhs) and self.lhs.width <= self.tol and self.rhs.width <= self.tol


def _euler_lower_bound(q: int, R: int = 20) -> Fraction:
    # (1/q; 1/q)_infinity >= (1/q; 1/q)_R * (1 - q^-R/(q-1))
    return pochhammer_value(Fraction(1, q), R) * (1 - geometric_tail(q, R))


def _sqrt_q_inverse_upper(q: int) -> Fraction:
    # rational r with r >= q^(-1/2)
    scale = 10**6
    return Fraction(scale, isqrt(q * scale * scale))


def lhs_tail_bound(q: int, k: int, B: int) -> Fraction:
    """Upper bound on the sum of specialization terms with sum lambda'^2 > B (B even).

    Each such term is <= q^-s / eta^(k-1) with s = sum lambda'^2 > B, eta a lower
    bound for (1/q; 1/q)_inf, and q^-s <= q^(-B/2) r^|lambda| with r >= q^(-1/2);
    sum over lambda_1 < k of r^|lambda| = prod_{j<k} 1/(1 - r^j).
    """
    if B % 2:
        raise ValueError("B must be even")
    eta = _euler_lower_bound(q)
    r = _sqrt_q_inverse_upper(q)
    gen = Fraction(1)
    for j in range(1, k):
        gen /= 1 - r**j
    return Fraction(1, q ** (B // 2)) * gen / eta ** (k - 1)


def restricted_specialization_sum(q: int, k: int, B: int) -> tuple[Fraction, int]:
    """Sum of closed-form terms over lambda_1 < k with sum lambda'^2 <= B."""
    total, count = Fraction(0), 0
    for conj in _decreasing_tuples(k - 1, isqrt(B)):
        if sum(c * c for c in conj) > B:
            continue
        lam = Partition(tuple(c for c in conj if c)).conjugate()
        total += closed_form_specialization(lam, q)
        count += 1
    return total, count


def rhs_interval(q: int, k: int, tol: Fraction) -> Interval:
    """Bracket prod over r != 0, +-k (mod 2k+1) of 1/(1 - q^-r)."""
    R = 1
    while True:
        partial = Fraction(1)
        for r in range(1, R + 1):
            if not gordon_excluded(r, k, k):
                partial /= 1 - Fraction(1, q**r)
        hi = partial / (1 - geometric_tail(q, R))
        if hi - partial <= tol:
            return Interval(partial, hi)
        R += 1


def theorem4_check(q: int, k: int, tol=Fraction(1, 10**6)) -> SpecializationIdentityResult:
    """Bracket both sides of the Hall-Littlewood / Rogers-Ramanujan identity."""
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    B = 2
    while lhs_tail_bound(q, k, B) > tol:
        B += 2
    partial, count = restricted_specialization_sum(q, k, B)
    lhs = Interval(partial, partial + lhs_tail_bound(q, k, B))
    return SpecializationIdentityResult(q, k, lhs, rhs_interval(q, k, tol), tol, count)
