"""Conjugacy classes of GL(n, q): orders, centralizers, the cycle index,
finite-n probabilities for the largest part of lambda_phi, their n -> infinity
limits, and the exhaustive census used to check all of it.

q is any integer >= 2 in the formula routines; census routines need q prime.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Optional, Union

from .bounds import Interval, geometric_tail
from .ffpoly import count_irreducibles
from .fqlinalg import ClassData, all_matrices, is_invertible, radical_vanishes, rcf_class_data
from .partitions import Partition, enumerate_partitions, kung_d, partitions_of, statistics
from .qseries import TruncatedSeries, euler_product_expansion, partial_sums, pochhammer_value, substitute_power

CENSUS_LIMIT = 10**8
ENUMERATE_MAX_N = 6
THREADS_ENV = "RRGL_THREADS"


@dataclass(frozen=True)
class AbstractClassData:
    """Class data with irreducibles named only by (degree, tag).

    Degree-1 tags run over 0..q-2 (z is excluded); degree-d tags over
    0..N_d(q)-1.
    """

    entries: tuple[tuple[int, int, Partition], ...]

    def degree_blocks(self) -> list[tuple[int, Partition]]:
        return [(m, lam) for m, _, lam in self.entries]

    @property
    def n(self) -> int:
        return sum(m * lam.size for m, _, lam in self.entries)

    def partition_at(self, degree: int, tag: int) -> Partition:
        for m, t, lam in self.entries:
            if (m, t) == (degree, tag):
                return lam
        return Partition()


def gl_order(n: int, q: int) -> int:
    """|GL(n, q)| = prod_{i=0}^{n-1} (q^n - q^i)."""
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def block_centralizer_kung(m: int, lam: Partition, q: int) -> int:
    """prod_i prod_{k=1}^{m_i} (Q^{d_i} - Q^{d_i - k}) with Q = q^m."""
    Q = q**m
    out = 1
    for i, mult in lam.multiplicities().items():
        d = kung_d(lam, i)
        for k in range(1, mult + 1):
            out *= Q**d - Q ** (d - k)
    return out


def block_centralizer_simplified(m: int, lam: Partition, q: int) -> Fraction:
    """Q^{sum_i lambda'_i^2} prod_i (1/Q)_{m_i} with Q = q^m."""
    Q = q**m
    st = statistics(lam)
    out = Fraction(Q**st.sum_conj_sq)
    for mult in st.m.values():
        out *= pochhammer_value(Fraction(1, Q), mult)
    return out


ClassLike = Union[AbstractClassData, ClassData]


def centralizer_order(c: ClassLike, q: int, method: str = "simplified") -> int:
    """Order of the centralizer of any element in the class.

    ``method`` is "simplified" (sum of squared conjugate parts and q-Pochhammers)
    or "kung" (the d_i product); both are exact and must agree.
    """
    if method == "kung":
        out = 1
        for m, lam in c.degree_blocks():
            out *= block_centralizer_kung(m, lam, q)
        return out
    if method != "simplified":
        raise ValueError(f"unknown method {method!r}")
    val = Fraction(1)
    for m, lam in c.degree_blocks():
        val *= block_centralizer_simplified(m, lam, q)
    if val.denominator != 1:
        raise AssertionError(f"centralizer order {val} is not an integer")
    return val.numerator


def class_size(c: ClassLike, n: int, q: int) -> int:
    order, cent = gl_order(n, q), centralizer_order(c, q)
    if order % cent:
        raise AssertionError(f"centralizer order {cent} does not divide |GL({n},{q})|")
    return order // cent


def irreducible_slots(n: int, q: int) -> list[tuple[int, int]]:
    """(degree, tag) pairs for the non-z monic irreducibles of degree <= n."""
    slots = []
    for d in range(1, n + 1):
        count = count_irreducibles(q, d) - (1 if d == 1 else 0)
        slots.extend((d, tag) for tag in range(count))
    return slots


def enumerate_classes(n: int, q: int) -> list[AbstractClassData]:
    """Every conjugacy class of GL(n, q) as abstract class data, once each."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > ENUMERATE_MAX_N:
        raise ValueError(f"class enumeration is limited to n <= {ENUMERATE_MAX_N}")
    slots = irreducible_slots(n, q)
    out = []

    def rec(idx: int, remaining: int, acc: list):
        if remaining == 0:
            out.append(AbstractClassData(tuple(acc)))
            return
        if idx == len(slots):
            return
        d, tag = slots[idx]
        rec(idx + 1, remaining, acc)
        for size in range(1, remaining // d + 1):
            for lam in partitions_of(size):
                acc.append((d, tag, lam))
                rec(idx + 1, remaining - d * size, acc)
                acc.pop()

    rec(0, n, [])
    return out


def _check_distinguished(q: int, m: int):
    available = count_irreducibles(q, m) - (1 if m == 1 else 0)
    if available < 1:
        raise ValueError(f"no irreducible of degree {m} other than z over F_{q}")


def probability_by_classes(n: int, q: int, k: int, m: int = 1) -> Fraction:
    """Share of GL(n, q) whose partition at a fixed degree-m irreducible has largest part < k."""
    if n == 0:
        return Fraction(1)
    _check_distinguished(q, m)
    hit = sum(class_size(c, n, q) for c in enumerate_classes(n, q) if c.partition_at(m, 0).largest < k)
    return Fraction(hit, gl_order(n, q))


def restricted_block_series(q: int, k: int, m: int, trunc: int) -> TruncatedSeries:
    """sum over lambda with lambda_1 < k of u^{|lambda| m} / (Q^{sum lambda'^2} prod_i (1/Q)_{m_i}), Q = q^m."""
    cs = [Fraction(0)] * (trunc + 1)
    for lam in enumerate_partitions(trunc // m, k):
        cs[lam.size * m] += 1 / block_centralizer_simplified(m, lam, q)
    return TruncatedSeries(cs, trunc)


def probability_by_cycle_index(n: int, q: int, k: int, m: int = 1) -> Fraction:
    """[u^n] of (1/(1-u)) prod_r (1 - u^m/q^{mr}) S(u), with the r-product expanded in closed form."""
    if n == 0:
        return Fraction(1)
    _check_distinguished(q, m)
    euler = substitute_power(euler_product_expansion(Fraction(1, q**m), n // m), m, n)
    return partial_sums(euler * restricted_block_series(q, k, m, n))[n]


def exact_probability_max_part_lt(n: int, q: int, k: int, m: int = 1, method: str = "both") -> Fraction:
    """Exact chance that lambda_phi of a uniform element of GL(n, q) has largest part < k.

    With method="both" the class-enumeration and cycle-index routes are both
    run and must agree.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if method == "classes":
        return probability_by_classes(n, q, k, m)
    if method == "cycle_index":
        return probability_by_cycle_index(n, q, k, m)
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    a = probability_by_classes(n, q, k, m)
    b = probability_by_cycle_index(n, q, k, m)
    if a != b:
        raise AssertionError(f"class sum {a} != cycle index {b} for n={n} q={q} k={k} m={m}")
    return a


def limit_admissible(r: int, k: int) -> bool:
    """r = 0 or +-k (mod 2k+1)."""
    return r % (2 * k + 1) in (0, k, k + 1)


def limit_probability(q: int, k: int, m: int = 1, tol=Fraction(1, 10**8)) -> Interval:
    """Bracket prod over r = 0, +-k (mod 2k+1) of (1 - q^{-mr}) to within ``tol``.

    The partial product through R is an upper bound; since
    prod_{r>R} (1 - Q^{-r}) >= 1 - Q^{-R}/(Q-1), multiplying by that gives a
    lower bound.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    Q = q**m
    R = 1
    while geometric_tail(Q, R) > tol:
        R += 1
    partial = Fraction(1)
    for r in range(1, R + 1):
        if limit_admissible(r, k):
            partial *= 1 - Fraction(1, Q**r)
    return Interval(partial * (1 - geometric_tail(Q, R)), partial)


def _census_shard(args) -> Counter:
    n, q, first_row, invertible_only = args
    tally = Counter()
    for A in all_matrices(q, n, first_row):
        if invertible_only and not is_invertible(A):
            continue
        tally[rcf_class_data(A)] += 1
    return tally


def default_threads() -> int:
    return int(os.environ.get(THREADS_ENV, "1"))


def _run_sharded(n: int, q: int, invertible_only: bool, threads: Optional[int]) -> Counter:
    if q ** (n * n) > CENSUS_LIMIT:
        raise ValueError(f"census over {q}^{n * n} matrices exceeds the limit {CENSUS_LIMIT}")
    shards = [(n, q, row, invertible_only) for row in product(range(q), repeat=n)]
    threads = threads or default_threads()
    total = Counter()
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_census_shard, shards):
                total.update(part)
    else:
        for shard in shards:
            total.update(_census_shard(shard))
    return total


def census(n: int, q: int, threads: Optional[int] = None) -> dict[ClassData, int]:
    """Tally of rational-canonical-form class data over every element of GL(n, q)."""
    tally = _run_sharded(n, q, True, threads)
    return dict(sorted(tally.items(), key=lambda kv: [(p.sort_key(), lam.parts) for p, lam in kv[0].entries]))


@dataclass(frozen=True)
class SemisimpleCensus:
    n: int
    q: int
    total: int
    by_partitions: int
    by_radical: int

    @property
    def proportion(self) -> Fraction:
        return Fraction(self.by_partitions, self.total)

    @property
    def agree(self) -> bool:
        return self.by_partitions == self.by_radical


def _semisimple_shard(args) -> tuple[int, int, int]:
    n, q, first_row = args
    total = by_parts = by_rad = 0
    for A in all_matrices(q, n, first_row):
        total += 1
        cd = rcf_class_data(A)
        by_parts += all(lam.largest <= 1 for _, lam in cd.entries)
        by_rad += radical_vanishes(A)
    return total, by_parts, by_rad


def semisimple_census(n: int, q: int, threads: Optional[int] = None) -> SemisimpleCensus:
    """Count semisimple matrices in all of Mat(n, q), two ways."""
    if q ** (n * n) > CENSUS_LIMIT:
        raise ValueError(f"census over {q}^{n * n} matrices exceeds the limit {CENSUS_LIMIT}")
    shards = [(n, q, row) for row in product(range(q), repeat=n)]
    threads = threads or default_threads()
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_semisimple_shard, shards))
    else:
        parts = [_semisimple_shard(s) for s in shards]
    total, a, b = (sum(x) for x in zip(*parts))
    return SemisimpleCensus(n, q, total, a, b)


def semisimple_limit_candidates(q: int, R: int = 60) -> dict[str, Fraction]:
    """Partial products through r <= R of the semisimple-limit display, under two readings.

    "shifted": prod over r = 0, +-2 (mod 5) of (1 - q^{-(r-1)}), as displayed.
    "unshifted": the same product with exponent r.
    These are reference numbers only; neither is treated as ground truth.
    """
    shifted = unshifted = Fraction(1)
    for r in range(1, R + 1):
        if limit_admissible(r, 2):
            shifted *= 1 - Fraction(1, q ** (r - 1))
            unshifted *= 1 - Fraction(1, q**r)
    return {"shifted": shifted, "unshifted": unshifted}


def gl_order_via_product(n: int, q: int) -> Fraction:
    """q^{n^2} prod_{i=1}^{n} (1 - q^{-i}) as an exact rational."""
    out = Fraction(q ** (n * n))
    for i in range(1, n + 1):
        out *= 1 - Fraction(1, q**i)
    return out


def class_sizes_from_census(tally: dict[ClassData, int]) -> list[int]:
    return sorted(tally.values())


def class_sizes_from_formula(n: int, q: int) -> list[int]:
    return sorted(class_size(c, n, q) for c in enumerate_classes(n, q))


def census_matches_formula(n: int, q: int, tally: Optional[dict] = None) -> bool:
    """Every census count equals |GL|/|centralizer|, and the class lists agree."""
    tally = tally if tally is not None else census(n, q)
    if sum(tally.values()) != gl_order(n, q):
        return False
    if any(count != class_size(cd, n, q) for cd, count in tally.items()):
        return False
    return class_sizes_from_census(tally) == class_sizes_from_formula(n, q)


def census_probability(tally: dict[ClassData, int], phi, k: int) -> Fraction:
    """Share of the census whose partition at ``phi`` has largest part < k."""
    total = sum(tally.values())
    hit = sum(cnt for cd, cnt in tally.items() if cd[phi].largest < k)
    return Fraction(hit, total)


def finite_n_probabilities(q: int, k: int, m: int, n_values: Iterable[int]) -> dict[int, Fraction]:
    return {n: probability_by_cycle_index(n, q, k, m) for n in n_values}
