"""The classical Bayesian confirmation measures D, M, R, C, Z, S, N, L, F.

Each formula is written once for the rule e1 -> h1; other rule directions
are obtained by relabelling the table with :func:`contingency.orient`.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

from .contingency import (
    E0,
    E1,
    H0,
    H1,
    ContingencyTable,
    Rule,
    conditional,
    joint,
    orient,
    prior,
)
from .values import NEG_INF, POS_INF, UNDEFINED, ConfirmationValue, Tag, ratio


class MeasureKind(enum.Enum):
    D = "D"
    M = "M"
    R = "R"
    C = "C"
    Z = "Z"
    S = "S"
    N = "N"
    L = "L"
    F = "F"
    BStar = "bstar"
    CStar = "cstar"
    CFStar = "cfstar"

    @classmethod
    def parse(cls, text: str) -> MeasureKind:
        key = text.strip()
        for kind in cls:
            if key == kind.value or key.lower() == kind.value.lower():
                return kind
        aliases = {"b*": cls.BStar, "c*": cls.CStar, "cf*": cls.CFStar, "c_f*": cls.CFStar}
        if key.lower() in aliases:
            return aliases[key.lower()]
        raise ValueError(f"unknown measure {text!r}")

    @property
    def is_star(self) -> bool:
        return self in STAR_KINDS

    @property
    def normalizing(self) -> bool:
        return self in NORMALIZING_KINDS


CLASSIC_KINDS = tuple(k for k in MeasureKind if k.value.isupper())
STAR_KINDS = (MeasureKind.BStar, MeasureKind.CStar, MeasureKind.CFStar)
NORMALIZING_KINDS = frozenset(
    {MeasureKind.Z, MeasureKind.F, MeasureKind.BStar, MeasureKind.CStar, MeasureKind.CFStar}
)


def _log(x, base: float) -> float:
    if base == 2:
        return math.log2(x)
    return math.log(x) / math.log(base)


def _log_ratio(num: Fraction, den: Fraction, base: float) -> ConfirmationValue:
    # log(num/den) with the signed-infinity conventions used by R and L
    if den == 0:
        return UNDEFINED if num == 0 else POS_INF
    if num == 0:
        return NEG_INF
    return ConfirmationValue.finite(_log(num / den, base))


def _d(t: ContingencyTable, base: float) -> ConfirmationValue:
    return ConfirmationValue.finite(conditional(t, H1, E1) - prior(t, H1))


def _m(t: ContingencyTable, base: float) -> ConfirmationValue:
    return ConfirmationValue.finite(conditional(t, E1, H1) - prior(t, E1))


def _r(t: ContingencyTable, base: float) -> ConfirmationValue:
    return _log_ratio(conditional(t, H1, E1), prior(t, H1), base)


def _c(t: ContingencyTable, base: float) -> ConfirmationValue:
    return ConfirmationValue.finite(joint(t, E1, H1) - prior(t, E1) * prior(t, H1))


def _z(t: ContingencyTable, base: float) -> ConfirmationValue:
    posterior, p_h1 = conditional(t, H1, E1), prior(t, H1)
    # exact rational comparison, so the branch point needs no tolerance band
    if posterior >= p_h1:
        return _ratio_or_zero(posterior - p_h1, 1 - p_h1)
    return _ratio_or_zero(posterior - p_h1, p_h1)


def _ratio_or_zero(num: Fraction, den: Fraction) -> ConfirmationValue:
    # Z's denominators vanish only when the numerator does too (P(h1) in {0,1})
    if den == 0:
        return ConfirmationValue.finite(Fraction(0)) if num == 0 else UNDEFINED
    return ConfirmationValue.finite(num / den)


def _s(t: ContingencyTable, base: float) -> ConfirmationValue:
    return ConfirmationValue.finite(conditional(t, H1, E1) - conditional(t, H1, E0))


def _n(t: ContingencyTable, base: float) -> ConfirmationValue:
    return ConfirmationValue.finite(conditional(t, E1, H1) - conditional(t, E1, H0))


def _l(t: ContingencyTable, base: float) -> ConfirmationValue:
    return _log_ratio(conditional(t, E1, H1), conditional(t, E1, H0), base)


def _f(t: ContingencyTable, base: float) -> ConfirmationValue:
    p, q = conditional(t, E1, H1), conditional(t, E1, H0)
    if p + q == 0:
        return UNDEFINED
    return ConfirmationValue.finite((p - q) / (p + q))


_FORMULAS = {
    MeasureKind.D: _d,
    MeasureKind.M: _m,
    MeasureKind.R: _r,
    MeasureKind.C: _c,
    MeasureKind.Z: _z,
    MeasureKind.S: _s,
    MeasureKind.N: _n,
    MeasureKind.L: _l,
    MeasureKind.F: _f,
}


def eval_classic(
    kind: MeasureKind, rule: Rule, t: ContingencyTable, log_base: float = 2
) -> ConfirmationValue:
    """Evaluate a classical measure on any rule direction.

    Raises ``ZeroMarginal`` when a conditional the formula needs is undefined.
    ``log_base`` only affects R and L.
    """
    if kind.is_star:
        raise ValueError(f"{kind.value} is not a classical measure; use star_measures")
    if log_base <= 1:
        raise ValueError(f"log base must exceed 1, got {log_base}")
    return _FORMULAS[kind](orient(t, rule), log_base)


# Closed forms of F for the four non-negated directions.
_F_EXTRA_TERM = {
    (E1, H1): lambda a, b, c, d: 2 * a * c,
    (H1, E1): lambda a, b, c, d: 2 * a * b,
    (E0, H0): lambda a, b, c, d: 2 * b * d,
    (H0, E0): lambda a, b, c, d: 2 * c * d,
}


def eval_F_directed(rule: Rule, t: ContingencyTable) -> ConfirmationValue:
    """F from its count expressions, (ad - bc)/(ad + bc + 2xy).

    Negated-consequent rules are answered through Hypothesis Symmetry.
    """
    key = (rule.antecedent, rule.consequent)
    if key not in _F_EXTRA_TERM:
        return -eval_F_directed(rule.hs_partner(), t)
    a, b, c, d = t.as_tuple()
    den = a * d + b * c + _F_EXTRA_TERM[key](a, b, c, d)
    if den == 0:
        return UNDEFINED
    return ratio(a * d - b * c, den)


def f_from_lr(lr: ConfirmationValue) -> ConfirmationValue:
    """F = (LR - 1)/(LR + 1)."""
    if lr.tag is Tag.POS_INFINITE:
        return ConfirmationValue.finite(Fraction(1))
    if not lr.is_finite:
        return UNDEFINED
    x = lr.value
    return ConfirmationValue.finite((x - 1) / (x + 1))


__all__ = [
    "MeasureKind",
    "CLASSIC_KINDS",
    "STAR_KINDS",
    "NORMALIZING_KINDS",
    "eval_classic",
    "eval_F_directed",
    "f_from_lr",
]
