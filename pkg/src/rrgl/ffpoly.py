"""Polynomials over the prime field F_q, irreducible enumeration and counting,
and exact checks of the product identity behind ``1 - u = prod ...``.

Polynomials are coefficient tuples in ascending degree with no trailing
zeros; the zero polynomial is the empty tuple. Operations that build or
factor polynomials need q prime. Counting and generating-function
routines accept any integer q >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from sympy import divisors, factorint, isprime

from .qseries import TruncatedSeries

SIEVE_LIMIT = 10**6


class ModulusMismatch(ValueError):
    pass


@dataclass(frozen=True)
class FqPoly:
    q: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        cs = [c % self.q for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def z(cls, q: int) -> "FqPoly":
        return cls(q, (0, 1))

    @classmethod
    def constant(cls, q: int, c: int) -> "FqPoly":
        return cls(q, (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def _check(self, other: "FqPoly"):
        if not isinstance(other, FqPoly):
            raise TypeError(f"expected FqPoly, got {type(other).__name__}")
        if other.q != self.q:
            raise ModulusMismatch(f"moduli differ: {self.q} vs {other.q}")

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return FqPoly(self.q, tuple(x + y for x, y in zip(a, b)))

    def __neg__(self):
        return FqPoly(self.q, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return FqPoly(self.q, tuple(c * other for c in self.coeffs))
        self._check(other)
        if self.is_zero() or other.is_zero():
            return FqPoly(self.q)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return FqPoly(self.q, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = FqPoly.constant(self.q, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        q = self.q
        rem = list(self.coeffs)
        dg = other.degree
        inv_lead = pow(other.lead, -1, q)
        quot = [0] * max(len(rem) - dg, 0)
        for shift in range(len(rem) - 1 - dg, -1, -1):
            c = rem[shift + dg] * inv_lead % q
            if c:
                quot[shift] = c
                for j, b in enumerate(other.coeffs):
                    rem[shift + j] = (rem[shift + j] - c * b) % q
        return FqPoly(q, tuple(quot)), FqPoly(q, tuple(rem[:dg] if dg > 0 else ()))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "FqPoly":
        if self.is_zero():
            return self
        return self * pow(self.lead, -1, self.q)

    def derivative(self) -> "FqPoly":
        return FqPoly(self.q, tuple(j * c for j, c in enumerate(self.coeffs))[1:])

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.q
        return acc

    def sort_key(self):
        return (self.degree, tuple(reversed(self.coeffs)))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        if self.is_zero():
            return f"FqPoly[{self.q}](0)"
        terms = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            mono = "" if j == 0 else ("z" if j == 1 else f"z^{j}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return f"FqPoly[{self.q}]({' + '.join(terms)})"

    def to_json(self) -> dict:
        return {"q": self.q, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "FqPoly":
        return cls(int(data["q"]), tuple(data["coeffs"]))


def poly_gcd(f: FqPoly, g: FqPoly) -> FqPoly:
    """Monic gcd (zero if both are zero)."""
    f._check(g)
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def _require_prime(q: int):
    if not isprime(q):
        raise ValueError(f"q must be prime for polynomial arithmetic, got {q}")


def monic_polys(q: int, d: int):
    """All monic polynomials of degree d, in coefficient-lexicographic order."""
    for lower in product(range(q), repeat=d):
        # lower is (c_{d-1}, ..., c_0)
        yield FqPoly(q, tuple(reversed(lower)) + (1,))


@lru_cache(maxsize=None)
def _irreducible_table(q: int, d_max: int) -> tuple[tuple[FqPoly, ...], ...]:
    table: list[tuple[FqPoly, ...]] = [()]
    for d in range(1, d_max + 1):
        small = [f for deg in range(1, d // 2 + 1) for f in table[deg]]
        found = tuple(f for f in monic_polys(q, d) if all(not (f % g).is_zero() for g in small))
        table.append(found)
    return tuple(table)


def enumerate_monic_irreducibles(q: int, d_max: int) -> dict[int, list[FqPoly]]:
    """Monic irreducibles of each degree 1..d_max by trial-division sieve."""
    _require_prime(q)
    if d_max < 1:
        raise ValueError("d_max must be positive")
    if q**d_max > SIEVE_LIMIT:
        raise ValueError(
            f"q^d_max = {q}^{d_max} exceeds the sieve limit {SIEVE_LIMIT}; "
            "use count_irreducibles for counts"
        )
    table = _irreducible_table(q, d_max)
    return {d: list(table[d]) for d in range(1, d_max + 1)}


def mobius(n: int) -> int:
    f = factorint(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def count_irreducibles(q: int, d: int) -> int:
    """Number of monic irreducibles of degree d: (1/d) sum_{e | d} mu(e) q^(d/e)."""
    if q < 2 or d < 1:
        raise ValueError("need q >= 2 and d >= 1")
    total = sum(mobius(e) * q ** (d // e) for e in divisors(d))
    assert total % d == 0
    return total // d


def factor_by_trial_division(f: FqPoly, irreducibles) -> list[tuple[FqPoly, int]]:
    """Factor monic f against a list of monic irreducibles; returns (phi, exponent) pairs."""
    out = []
    rest = f
    for phi in irreducibles:
        if phi.degree > rest.degree:
            break
        e = 0
        while True:
            quo, rem = divmod(rest, phi)
            if not rem.is_zero():
                break
            rest, e = quo, e + 1
        if e:
            out.append((phi, e))
    if rest.degree > 0:
        raise ValueError(f"{f} did not factor over the supplied irreducibles")
    return out


def _binomial_power(coeff: Fraction, d: int, power: int, trunc: int) -> TruncatedSeries:
    # (1 - coeff * u^d)^power, only terms with u-degree <= trunc
    cs = [Fraction(0)] * (trunc + 1)
    for j in range(min(power, trunc // d) + 1):
        cs[j * d] = comb(power, j) * (-coeff) ** j
    return TruncatedSeries(cs, trunc)


def fixed_t_factors(q: int, t: int, trunc: int) -> dict[int, TruncatedSeries]:
    """Per-degree factors prod_{deg phi = d} (1 - u^d / q^(d t)) = (1 - u^d/q^(dt))^N_d(q)."""
    return {
        d: _binomial_power(Fraction(1, q ** (d * t)), d, count_irreducibles(q, d), trunc)
        for d in range(1, trunc + 1)
    }


def verify_fixed_t_product(q: int, t: int, trunc: int) -> TruncatedSeries:
    """prod over all monic irreducibles phi (z included) of 1 - u^deg / q^(deg * t).

    Only degrees <= trunc matter. Expected to equal 1 - u / q^(t-1).
    """
    s = TruncatedSeries.one(trunc)
    for factor in fixed_t_factors(q, t, trunc).values():
        s = s * factor
    return s


def verify_telescoped_product(q: int, t_max: int, trunc: int) -> TruncatedSeries:
    """prod_{t=1}^{t_max} (1 - u/q^(t-1)) / (1 - u/q^t).

    Expected to equal (1 - u) / (1 - u/q^t_max).
    """
    s = TruncatedSeries.one(trunc)
    u = TruncatedSeries.monomial(1, trunc)
    for t in range(1, t_max + 1):
        s = s * (1 - u * Fraction(1, q ** (t - 1))) / (1 - u * Fraction(1, q**t))
    return s
