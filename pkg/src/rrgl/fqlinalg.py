"""Dense matrices over F_q (q prime) and their rational-canonical-form data.

The partition attached to an irreducible phi is read off from the kernel
dimensions of phi(A), phi(A)^2, ...; no canonical basis is ever built.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .ffpoly import FqPoly, enumerate_monic_irreducibles, factor_by_trial_division
from .partitions import Partition

CHARPOLY_MAX_N = 5


class ShapeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class MatFq:
    q: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) % self.q for x in row) for row in self.rows)
        if any(len(r) != len(rows) for r in rows):
            raise ShapeMismatch("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, q: int, n: int) -> "MatFq":
        return cls(q, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, q: int, n: int) -> "MatFq":
        return cls(q, tuple((0,) * n for _ in range(n)))

    @classmethod
    def companion(cls, f: FqPoly) -> "MatFq":
        """Companion matrix of a monic polynomial; its characteristic polynomial is f."""
        if not f.is_monic():
            raise ValueError("companion matrix needs a monic polynomial")
        n = f.degree
        rows = [[0] * n for _ in range(n)]
        for i in range(1, n):
            rows[i][i - 1] = 1
        for i in range(n):
            rows[i][n - 1] = -f.coeffs[i]
        return cls(f.q, tuple(map(tuple, rows)))

    def _check(self, other: "MatFq"):
        if self.q != other.q or self.n != other.n:
            raise ShapeMismatch(f"incompatible matrices: F_{self.q}^{self.n} vs F_{other.q}^{other.n}")

    def __add__(self, other):
        self._check(other)
        return MatFq(self.q, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other):
        self._check(other)
        return MatFq(self.q, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def scale(self, c: int) -> "MatFq":
        return MatFq(self.q, tuple(tuple(c * a for a in r) for r in self.rows))

    def __mul__(self, other):
        self._check(other)
        cols = list(zip(*other.rows))
        return MatFq(self.q, tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows))

    def __pow__(self, e: int):
        result = MatFq.identity(self.q, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self):
        return f"MatFq(q={self.q}, {[list(r) for r in self.rows]})"


def rank(A: MatFq) -> int:
    q = A.q
    m = [list(r) for r in A.rows]
    n = A.n
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, n) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][col], -1, q)
        m[r] = [x * inv % q for x in m[r]]
        for i in range(n):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [(x - f * y) % q for x, y in zip(m[i], m[r])]
        r += 1
    return r


def kernel_dim(A: MatFq) -> int:
    return A.n - rank(A)


def is_invertible(A: MatFq) -> bool:
    return rank(A) == A.n


def inverse(A: MatFq) -> MatFq:
    q, n = A.q, A.n
    m = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(A.rows)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col]), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        inv = pow(m[col][col], -1, q)
        m[col] = [x * inv % q for x in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                f = m[i][col]
                m[i] = [(x - f * y) % q for x, y in zip(m[i], m[col])]
    return MatFq(q, tuple(tuple(r[n:]) for r in m))


def _poly_det(entries: list[list[FqPoly]]) -> FqPoly:
    # cofactor expansion along the first row
    n = len(entries)
    if n == 1:
        return entries[0][0]
    total = FqPoly(entries[0][0].q)
    for j in range(n):
        if entries[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in entries[1:]]
        term = entries[0][j] * _poly_det(minor)
        total = total - term if j % 2 else total + term
    return total


def char_poly(A: MatFq) -> FqPoly:
    """det(zI - A) by cofactor expansion (n <= 5)."""
    n, q = A.n, A.q
    if n > CHARPOLY_MAX_N:
        raise ValueError(f"char_poly uses cofactor expansion and is limited to n <= {CHARPOLY_MAX_N}")
    if n == 0:
        return FqPoly.constant(q, 1)
    entries = [
        [FqPoly(q, (-A.rows[i][j], 1)) if i == j else FqPoly(q, (-A.rows[i][j],)) for j in range(n)]
        for i in range(n)
    ]
    return _poly_det(entries)


def poly_at_matrix(f: FqPoly, A: MatFq) -> MatFq:
    if f.q != A.q:
        raise ShapeMismatch("polynomial and matrix live over different fields")
    result = MatFq.zero(A.q, A.n)
    ident = MatFq.identity(A.q, A.n)
    for c in reversed(f.coeffs):
        result = result * A + ident.scale(c)
    return result


def invariant_partition(A: MatFq, phi: FqPoly) -> Partition:
    """The partition attached to phi in the rational canonical form of A.

    With c_j = dim ker phi(A)^j / deg(phi), the number of parts >= j is
    c_j - c_{j-1}.
    """
    if not phi.is_monic() or phi.degree < 1:
        raise ValueError("phi must be monic of positive degree")
    m = phi.degree
    B = poly_at_matrix(phi, A)
    power = MatFq.identity(A.q, A.n)
    conj_parts = []
    prev = 0
    while True:
        power = power * B
        dim = kernel_dim(power)
        if dim % m:
            raise AssertionError(f"kernel dimension {dim} not divisible by deg phi = {m}")
        c = dim // m
        if c == prev:
            break
        conj_parts.append(c - prev)
        prev = c
    return Partition(tuple(conj_parts)).conjugate()


@dataclass(frozen=True)
class ClassData:
    """Map phi -> nonempty partition, stored sorted by (degree, coefficients)."""

    entries: tuple[tuple[FqPoly, Partition], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(sorted(self.entries, key=lambda e: e[0].sort_key())))

    @classmethod
    def from_dict(cls, d: dict) -> "ClassData":
        return cls(tuple((phi, lam) for phi, lam in d.items() if lam.size))

    def as_dict(self) -> dict[FqPoly, Partition]:
        return dict(self.entries)

    def degree_blocks(self) -> list[tuple[int, Partition]]:
        return [(phi.degree, lam) for phi, lam in self.entries]

    @property
    def n(self) -> int:
        return sum(phi.degree * lam.size for phi, lam in self.entries)

    def __getitem__(self, phi: FqPoly) -> Partition:
        return self.as_dict().get(phi, Partition())

    def to_json(self) -> list[dict]:
        return [{"phi": phi.to_json(), "lambda": lam.to_json()} for phi, lam in self.entries]

    @classmethod
    def from_json(cls, data: list[dict]) -> "ClassData":
        return cls(tuple((FqPoly.from_json(e["phi"]), Partition(tuple(e["lambda"]))) for e in data))


def rcf_class_data(A: MatFq) -> ClassData:
    """Class data {phi: lambda_phi(A)} over the irreducible factors of char_poly(A)."""
    cp = char_poly(A)
    irr = enumerate_monic_irreducibles(A.q, max(A.n, 1))
    flat = [f for d in sorted(irr) for f in irr[d]]
    entries = []
    for phi, _ in factor_by_trial_division(cp, flat):
        entries.append((phi, invariant_partition(A, phi)))
    return ClassData(tuple(entries))


def radical_vanishes(A: MatFq) -> bool:
    """True when the product of the distinct irreducible factors of char_poly(A) kills A."""
    cp = char_poly(A)
    irr = enumerate_monic_irreducibles(A.q, max(A.n, 1))
    flat = [f for d in sorted(irr) for f in irr[d]]
    rad = FqPoly.constant(A.q, 1)
    for phi, _ in factor_by_trial_division(cp, flat):
        rad = rad * phi
    return all(x == 0 for row in poly_at_matrix(rad, A).rows for x in row)


def is_semisimple(A: MatFq) -> bool:
    """Every partition in the class data has largest part <= 1."""
    return all(lam.largest <= 1 for _, lam in rcf_class_data(A).entries)


def all_matrices(q: int, n: int, first_row=None) -> Iterator[MatFq]:
    """Every n x n matrix over F_q, optionally with a fixed first row."""
    firsts = [tuple(first_row)] if first_row is not None else product(range(q), repeat=n)
    for r0 in firsts:
        for rest in product(product(range(q), repeat=n), repeat=n - 1):
            yield MatFq(q, (r0,) + rest)
