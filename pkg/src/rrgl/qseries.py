"""Truncated power series with exact rational coefficients, and both sides
of Gordon's generalization of the Rogers-Ramanujan identities.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import isqrt
from typing import Iterable

from .partitions import Partition, enumerate_partitions, statistics


class NonUnitSeriesError(ZeroDivisionError):
    pass


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class TruncatedSeries:
    """sum_{j <= trunc} c_j x^j; coefficients above ``trunc`` are unknown.

    Binary operations truncate to the smaller of the two orders. Plain ints
    and Fractions act as exact constants.
    """

    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs: Iterable = (), trunc: int = 0):
        if trunc < 0:
            raise ValueError("truncation order must be non-negative")
        cs = [_frac(c) for c in coeffs][: trunc + 1]
        cs.extend([Fraction(0)] * (trunc + 1 - len(cs)))
        self.coeffs: list[Fraction] = cs
        self.trunc = trunc

    @classmethod
    def one(cls, trunc: int) -> "TruncatedSeries":
        return cls([1], trunc)

    @classmethod
    def monomial(cls, degree: int, trunc: int, coeff=1) -> "TruncatedSeries":
        s = cls((), trunc)
        if degree <= trunc:
            s.coeffs[degree] = _frac(coeff)
        return s

    def __getitem__(self, j: int) -> Fraction:
        if j < 0:
            return Fraction(0)
        if j > self.trunc:
            raise IndexError(f"coefficient {j} is beyond truncation order {self.trunc}")
        return self.coeffs[j]

    def __len__(self):
        return self.trunc + 1

    def truncate(self, trunc: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, min(trunc, self.trunc))

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([other], self.trunc)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = min(self.trunc, other.trunc)
        return TruncatedSeries([self.coeffs[j] + other.coeffs[j] for j in range(t + 1)], t)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.trunc)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self.coeffs], self.trunc)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        t = min(self.trunc, other.trunc)
        a, b = self.coeffs, other.coeffs
        # skip zero coefficients; the series here are sparse more often than not
        nz_b = [(j, c) for j, c in enumerate(b[: t + 1]) if c]
        out = [Fraction(0)] * (t + 1)
        for i in range(t + 1):
            ai = a[i]
            if not ai:
                continue
            for j, bj in nz_b:
                if i + j > t:
                    break
                out[i + j] += ai * bj
        return TruncatedSeries(out, t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / _frac(other))
        if isinstance(other, TruncatedSeries):
            return self * other.reciprocal()
        return NotImplemented

    def reciprocal(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise NonUnitSeriesError("non-unit series: constant term is zero")
        a = self.coeffs
        nz = [(j, a[j]) for j in range(1, self.trunc + 1) if a[j]]
        inv0 = 1 / c0
        out = [inv0]
        for n in range(1, self.trunc + 1):
            acc = Fraction(0)
            for j, aj in nz:
                if j > n:
                    break
                acc += aj * out[n - j]
            out.append(-acc * inv0)
        return TruncatedSeries(out, self.trunc)

    def __pow__(self, e: int):
        if e < 0:
            return self.reciprocal() ** (-e)
        result = TruncatedSeries.one(self.trunc)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = min(self.trunc, other.trunc)
        return self.coeffs[: t + 1] == other.coeffs[: t + 1]

    __hash__ = None

    def __repr__(self):
        terms = [f"{c}*x^{j}" for j, c in enumerate(self.coeffs) if c]
        return f"TruncatedSeries({' + '.join(terms) or '0'} + O(x^{self.trunc + 1}))"

    def evaluate(self, x) -> Fraction:
        """Value of the truncated polynomial at ``x`` (exact)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self) -> dict:
        return {"trunc": self.trunc, "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "TruncatedSeries":
        return cls([Fraction(c) for c in data["coeffs"]], int(data["trunc"]))


def pochhammer(n: int, trunc: int) -> TruncatedSeries:
    """(x)_n = (1 - x)(1 - x^2)...(1 - x^n) truncated at ``trunc``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    s = TruncatedSeries.one(trunc)
    for j in range(1, n + 1):
        s = s * (1 - TruncatedSeries.monomial(j, trunc))
    return s


class _ReciprocalCache:
    """Per-(n, trunc) cache of 1/(x)_n. Concurrent duplicate fills are harmless."""

    def __init__(self):
        self._table: dict[tuple[int, int], TruncatedSeries] = {}
        self._lock = threading.Lock()

    def get(self, n: int, trunc: int) -> TruncatedSeries:
        key = (n, trunc)
        hit = self._table.get(key)
        if hit is not None:
            return hit
        value = pochhammer(n, trunc).reciprocal()
        with self._lock:
            return self._table.setdefault(key, value)


_inv_poch = _ReciprocalCache()


def inverse_pochhammer(n: int, trunc: int) -> TruncatedSeries:
    return _inv_poch.get(n, trunc)


def _check_gordon_params(k: int, i: int):
    if k < 2:
        raise ValueError(f"need k >= 2, got k={k}")
    if not 1 <= i <= k:
        raise ValueError(f"need 1 <= i <= k, got i={i}, k={k}")


def _decreasing_tuples(length: int, top: int):
    # all (N_1 >= N_2 >= ... >= N_length >= 0) with N_1 <= top
    if length == 0:
        yield ()
        return
    for first in range(top, -1, -1):
        for rest in _decreasing_tuples(length - 1, first):
            yield (first,) + rest


def gordon_sum_side(k: int, i: int, trunc: int) -> TruncatedSeries:
    """Sum side of Gordon's identity.

    sum over n_1..n_{k-1} >= 0 of
        x^(N_1^2 + ... + N_{k-1}^2 + N_i + ... + N_{k-1}) / ((x)_{n_1} ... (x)_{n_{k-1}})
    with N_j = n_j + n_{j+1} + ... + n_{k-1}.

    Enumerated over the tails N_1 >= ... >= N_{k-1}; since N_1^2 <= trunc for
    any contributing tuple, N_1 <= isqrt(trunc).
    """
    _check_gordon_params(k, i)
    total = TruncatedSeries((), trunc)
    for tails in _decreasing_tuples(k - 1, isqrt(trunc)):
        exponent = sum(N * N for N in tails) + sum(tails[i - 1:])
        if exponent > trunc:
            continue
        ns = [tails[j] - (tails[j + 1] if j + 1 < len(tails) else 0) for j in range(len(tails))]
        term = TruncatedSeries.monomial(exponent, trunc)
        for n in ns:
            if n:
                term = term * inverse_pochhammer(n, trunc)
        total = total + term
    return total


def gordon_excluded(r: int, k: int, i: int) -> bool:
    """True when r = 0 or +-i (mod 2k+1)."""
    res = r % (2 * k + 1)
    return res in (0, i % (2 * k + 1), (-i) % (2 * k + 1))


def gordon_product_side(k: int, i: int, trunc: int) -> TruncatedSeries:
    """prod over r >= 1 with r != 0, +-i (mod 2k+1) of 1/(1 - x^r)."""
    _check_gordon_params(k, i)
    s = TruncatedSeries.one(trunc)
    for r in range(1, trunc + 1):
        if not gordon_excluded(r, k, i):
            s = s / (1 - TruncatedSeries.monomial(r, trunc))
    return s


def partition_sum_side(k: int, trunc: int) -> TruncatedSeries:
    """sum over partitions with largest part < k of x^(sum_i lambda'_i^2) / prod_i (x)_{m_i}.

    Taking n_j = m_j(lambda) turns this into the i = k Gordon sum.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got k={k}")
    total = TruncatedSeries((), trunc)
    # sum of squared conjugate parts is at least |lambda|
    for lam in enumerate_partitions(trunc, k):
        st = statistics(lam)
        if st.sum_conj_sq > trunc:
            continue
        term = TruncatedSeries.monomial(st.sum_conj_sq, trunc)
        for mult in st.m.values():
            term = term * inverse_pochhammer(mult, trunc)
        total = total + term
    return total


def pochhammer_value(x: Fraction, n: int) -> Fraction:
    """(x)_n evaluated at a number."""
    out = Fraction(1)
    for j in range(1, n + 1):
        out *= 1 - x**j
    return out


def partition_sum_term(lam: Partition, x) -> Fraction:
    """The summand x^(sum lambda'^2) / prod_i (x)_{m_i} at a numeric x."""
    x = _frac(x)
    st = statistics(lam)
    denom = Fraction(1)
    for mult in st.m.values():
        denom *= pochhammer_value(x, mult)
    return x**st.sum_conj_sq / denom


def euler_product_expansion(t, trunc: int) -> TruncatedSeries:
    """Coefficients in v of prod_{r >= 1} (1 - v t^r), exactly.

    c_j = (-1)^j t^(j(j+1)/2) / ((1 - t)(1 - t^2)...(1 - t^j)).
    """
    t = _frac(t)
    if abs(t) >= 1:
        raise ValueError("euler_product_expansion needs |t| < 1")
    coeffs = []
    denom = Fraction(1)
    for j in range(trunc + 1):
        if j:
            denom *= 1 - t**j
        coeffs.append((-1) ** j * t ** (j * (j + 1) // 2) / denom)
    return TruncatedSeries(coeffs, trunc)


def substitute_power(s: TruncatedSeries, m: int, trunc: int) -> TruncatedSeries:
    """s(v) with v = u^m, as a series in u truncated at ``trunc``.

    Requires s to be known through degree trunc // m.
    """
    if m < 1:
        raise ValueError("m must be positive")
    need = trunc // m
    if need > s.trunc:
        raise ValueError(f"series known only through degree {s.trunc}, need {need}")
    out = [Fraction(0)] * (trunc + 1)
    for j in range(need + 1):
        out[j * m] = s.coeffs[j]
    return TruncatedSeries(out, trunc)


def partial_sums(s: TruncatedSeries) -> TruncatedSeries:
    """Multiply by 1/(1 - x): coefficient n becomes c_0 + ... + c_n."""
    out, acc = [], Fraction(0)
    for c in s.coeffs:
        acc += c
        out.append(acc)
    return TruncatedSeries(out, s.trunc)

