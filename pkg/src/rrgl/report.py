"""JSON rendering for exact quantities and the CLI report record."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from decimal import Context, Decimal
from fractions import Fraction
from typing import Any

_CTX = Context(prec=12)


def rational_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def decimal_str(x) -> str:
    x = Fraction(x)
    return str(_CTX.divide(Decimal(x.numerator), Decimal(x.denominator)))


def exact(x) -> dict:
    """An exact rational as {"exact": "p/q", "decimal": 12 significant digits}."""
    return {"exact": rational_str(x), "decimal": decimal_str(x)}


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


@dataclass
class Report:
    command: str
    parameters: dict
    status: str = "pass"
    details: dict = field(default_factory=dict)
    timing_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, default=_default)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls(**json.loads(text))


def _default(obj: Any):
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError(f"cannot serialize {type(obj).__name__}")
