"""Probability predictions from confirmation values.

b* needs the prior P(h1) because it only describes the channel; c* and c_F*
already encode the correct rate and need nothing else.  ``bayes_posterior``
is the classical route and serves as the reference for all three.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .contingency import E0, E1, H0, H1, ContingencyTable, conditional
from .errors import OutOfRange, UndefinedError, ZeroMarginal


class Source(enum.Enum):
    FROM_B_STAR = "bstar"
    FROM_C_STAR = "cstar"
    FROM_C_F_STAR = "cfstar"
    BAYES_ORACLE = "bayes"


@dataclass(frozen=True)
class PredictionResult:
    posterior_h1: float | Fraction
    posterior_h0: float | Fraction
    source: Source


def _check_measure(x, name: str) -> None:
    if not -1 <= x <= 1:
        raise OutOfRange(f"{name} = {x} is outside [-1, 1]")


def predict_from_b_star(b_star_value, prior_h1) -> PredictionResult:
    """P(h1|theta_e1) = P(h1) / (1 - b* P(h0)) for b* >= 0.

    A negative b* is the HS mirror: b0* = |b*| predicts h0 the same way.
    """
    _check_measure(b_star_value, "b*")
    if not 0 < prior_h1 < 1:
        raise OutOfRange(f"prior {prior_h1} must lie strictly between 0 and 1")
    prior_h0 = 1 - prior_h1
    if b_star_value >= 0:
        p1 = prior_h1 / (1 - b_star_value * prior_h0)
        return PredictionResult(p1, 1 - p1, Source.FROM_B_STAR)
    b0 = -b_star_value
    p0 = prior_h0 / (1 - b0 * prior_h1)
    return PredictionResult(1 - p0, p0, Source.FROM_B_STAR)


def predict_from_c_star(c_star_value) -> PredictionResult:
    _check_measure(c_star_value, "c*")
    if c_star_value >= 0:
        p1 = 1 / (2 - c_star_value)
        return PredictionResult(p1, 1 - p1, Source.FROM_C_STAR)
    c0 = -c_star_value
    p0 = 1 / (2 - c0)
    return PredictionResult((1 - c0) / (2 - c0), p0, Source.FROM_C_STAR)


def predict_from_c_f_star(c_f_value) -> PredictionResult:
    _check_measure(c_f_value, "c_F*")
    return PredictionResult((1 + c_f_value) / 2, (1 - c_f_value) / 2, Source.FROM_C_F_STAR)


def bayes_posterior(sensitivity, false_positive_rate, prior_h1):
    """P(h1|e1) from sensitivity P(e1|h1), FPR P(e1|h0) and P(h1)."""
    for name, v in (
        ("sensitivity", sensitivity),
        ("false positive rate", false_positive_rate),
        ("prior", prior_h1),
    ):
        if not 0 <= v <= 1:
            raise OutOfRange(f"{name} = {v} is outside [0, 1]")
    num = sensitivity * prior_h1
    den = num + false_positive_rate * (1 - prior_h1)
    if den == 0:
        raise UndefinedError("P(e1) is zero; the posterior is undefined")
    return num / den


@dataclass(frozen=True)
class MedicalIndexPanel:
    """Correct and false rates of a test; ``None`` marks an undefined rate."""

    sensitivity: Fraction | None
    specificity: Fraction | None
    positive_predictive_value: Fraction | None
    negative_predictive_value: Fraction | None
    false_discovery_rate: Fraction | None
    false_omission_rate: Fraction | None
    false_negative_rate: Fraction | None
    false_positive_rate: Fraction | None


def _maybe(t: ContingencyTable, of, given) -> Fraction | None:
    try:
        return conditional(t, of, given)
    except ZeroMarginal:
        return None


def medical_indexes(t: ContingencyTable) -> MedicalIndexPanel:
    return MedicalIndexPanel(
        sensitivity=_maybe(t, E1, H1),
        specificity=_maybe(t, E0, H0),
        positive_predictive_value=_maybe(t, H1, E1),
        negative_predictive_value=_maybe(t, H0, E0),
        false_discovery_rate=_maybe(t, H0, E1),
        false_omission_rate=_maybe(t, H1, E0),
        false_negative_rate=_maybe(t, E0, H1),
        false_positive_rate=_maybe(t, E1, H0),
    )
