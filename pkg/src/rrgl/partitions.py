"""Integer partitions and the statistics used throughout the package.

A partition is stored as its weakly decreasing tuple of positive parts.
Multiplicities, the conjugate and the derived statistics are computed on
demand.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[j] < parts[j + 1] for j in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        """Build a partition from parts in any order (zeros are dropped)."""
        return cls(tuple(sorted((p for p in parts if p), reverse=True)))

    @classmethod
    def from_multiplicities(cls, mult) -> "Partition":
        parts = []
        for i in sorted(mult, reverse=True):
            parts.extend([i] * mult[i])
        return cls(tuple(parts))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, j):
        return self.parts[j]

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        """Largest part; 0 for the empty partition."""
        return self.parts[0] if self.parts else 0

    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self.parts).items()))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def to_json(self) -> list[int]:
        return list(self.parts)


class PartitionStats(NamedTuple):
    m: dict[int, int]
    n_lambda: int
    sum_conj_sq: int


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: the i-th part counts parts >= i."""
    parts = lam.parts
    return Partition(tuple(sum(1 for p in parts if p >= i) for i in range(1, lam.largest + 1)))


def n_stat(lam: Partition) -> int:
    """n(lambda) = sum_i (i - 1) * lambda_i."""
    return sum(i * p for i, p in enumerate(lam.parts))


def statistics(lam: Partition) -> PartitionStats:
    """Multiplicities, n(lambda) and the sum of squared conjugate parts.

    The identity ``sum_conj_sq == size + 2 * n_lambda`` holds with
    ``n_lambda`` taken on ``lam`` itself (not on its conjugate).
    """
    return PartitionStats(
        m=lam.multiplicities(),
        n_lambda=n_stat(lam),
        sum_conj_sq=sum(c * c for c in conjugate(lam).parts),
    )


def kung_d(lam: Partition, i: int) -> int:
    """d_i(lambda) = sum_{h<i} h m_h + i * (m_i + m_{i+1} + ...).

    For ``i`` beyond the largest part this is just ``|lambda|``.
    """
    if i < 1:
        raise ValueError("i must be positive")
    mult = lam.multiplicities()
    below = sum(h * c for h, c in mult.items() if h < i)
    at_or_above = sum(c for h, c in mult.items() if h >= i)
    return below + i * at_or_above


def _partitions_of(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    # lexicographically descending
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_of(n - first, first):
            yield (first,) + rest


def partitions_of(n: int, max_part_exclusive: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of exactly ``n`` with every part < ``max_part_exclusive``."""
    cap = n if max_part_exclusive is None else min(n, max_part_exclusive - 1)
    if cap < 1 and n > 0:
        return
    for parts in _partitions_of(n, max(cap, 0)):
        yield Partition(parts)


def enumerate_partitions(size_max: int, max_part_exclusive: Optional[int] = None) -> list[Partition]:
    """All partitions of size <= size_max with largest part < max_part_exclusive.

    ``None`` means unbounded parts. Ordered by size, then lexicographically
    descending within a size.
    """
    if size_max < 0:
        raise ValueError("size_max must be non-negative")
    if max_part_exclusive is not None and max_part_exclusive < 1:
        raise ValueError("max_part_exclusive must be positive")
    out = []
    for n in range(size_max + 1):
        out.extend(partitions_of(n, max_part_exclusive))
    return out

