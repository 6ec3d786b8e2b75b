"""Closed rational intervals and the geometric tail bound used to bracket infinite products."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def distance_bounds(self, x) -> tuple[Fraction, Fraction]:
        """(min, max) of |x - y| over y in the interval."""
        x = Fraction(x)
        far = max(abs(x - self.lo), abs(x - self.hi))
        near = Fraction(0) if x in self else min(abs(x - self.lo), abs(x - self.hi))
        return near, far

    def to_json(self) -> dict:
        return {"lo": f"{self.lo.numerator}/{self.lo.denominator}", "hi": f"{self.hi.numerator}/{self.hi.denominator}"}


def geometric_tail(Q: int, R: int) -> Fraction:
    """sum_{r > R} Q^{-r} = Q^{-R} / (Q - 1)."""
    return Fraction(1, Q**R * (Q - 1))
