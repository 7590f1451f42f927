"""The result type shared by every confirmation measure."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Number = Union[int, Fraction, float]


class Tag(enum.Enum):
    FINITE = "finite"
    POS_INFINITE = "+inf"
    NEG_INFINITE = "-inf"
    UNDEFINED = "undefined"


@dataclass(frozen=True)
class ConfirmationValue:
    """A measure result: a finite number, +/- infinity, or undefined (0/0).

    Rational measures keep their value as a ``Fraction`` so that golden tests
    can compare exactly; log-based measures hold a ``float``.
    """

    tag: Tag
    value: Number | None = None

    @classmethod
    def finite(cls, x: Number) -> ConfirmationValue:
        if isinstance(x, float) and math.isinf(x):
            return POS_INF if x > 0 else NEG_INF
        if isinstance(x, float) and math.isnan(x):
            return UNDEFINED
        return cls(Tag.FINITE, x)

    @property
    def is_finite(self) -> bool:
        return self.tag is Tag.FINITE

    def __float__(self) -> float:
        if self.tag is Tag.FINITE:
            return float(self.value)
        if self.tag is Tag.POS_INFINITE:
            return math.inf
        if self.tag is Tag.NEG_INFINITE:
            return -math.inf
        return math.nan

    def __neg__(self) -> ConfirmationValue:
        if self.tag is Tag.FINITE:
            return ConfirmationValue(Tag.FINITE, -self.value)
        if self.tag is Tag.POS_INFINITE:
            return NEG_INF
        if self.tag is Tag.NEG_INFINITE:
            return POS_INF
        return UNDEFINED

    def __str__(self) -> str:
        return format(self, "")

    def __format__(self, format_spec: str) -> str:
        if self.tag is Tag.FINITE:
            return format(float(self.value), format_spec or ".6g")
        return self.tag.value


POS_INF = ConfirmationValue(Tag.POS_INFINITE)
NEG_INF = ConfirmationValue(Tag.NEG_INFINITE)
UNDEFINED = ConfirmationValue(Tag.UNDEFINED)


def ratio(num: Number, den: Number) -> ConfirmationValue:
    """num/den for a non-negative numerator, with the x/0 cases tagged."""
    if den == 0:
        if num == 0:
            return UNDEFINED
        return POS_INF if num > 0 else NEG_INF
    if isinstance(num, int) and isinstance(den, int):
        return ConfirmationValue.finite(Fraction(num, den))
    return ConfirmationValue.finite(num / den)
