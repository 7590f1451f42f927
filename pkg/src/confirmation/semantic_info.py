"""Binary semantic channel: truth functions, semantic Bayes, semantic information.

A predicate e1(h) is modelled as a clear prediction (truth value 1 on h1,
0 on h0) mixed with a tautology.  ``b1_prime`` is the tautology's share, so
the truth value of e1 on a counter-instance h0 is ``b1_prime``.  The e0
predicate mirrors this with ``b0_prime``.

Information values are floats in units of ``log_base`` (bits by default);
an impossible outcome gives ``-math.inf``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .contingency import E1, H0, H1, ContingencyTable, conditional, prior
from .errors import OutOfRange, ZeroLogicalProbability


class Predicate(enum.Enum):
    E1 = "e1"
    E0 = "e0"


class Hypothesis(enum.Enum):
    H1 = "h1"
    H0 = "h0"


@dataclass(frozen=True)
class TruthAssignment:
    b1_prime: float | Fraction
    b0_prime: float | Fraction = 1

    def __post_init__(self) -> None:
        for name in ("b1_prime", "b0_prime"):
            v = getattr(self, name)
            if not 0 <= v <= 1:
                raise OutOfRange(f"{name} = {v} is outside [0, 1]")

    @property
    def b1(self):
        return 1 - self.b1_prime

    @property
    def b0(self):
        return 1 - self.b0_prime


@dataclass(frozen=True)
class SampleCounts:
    """Examples within the e1-labelled subsample."""

    n_11: int  # (h1, e1)
    n_01: int  # (h0, e1)

    def __post_init__(self) -> None:
        if self.n_11 < 0 or self.n_01 < 0:
            raise OutOfRange("sample counts must be non-negative")

    @property
    def total(self) -> int:
        return self.n_11 + self.n_01

    @classmethod
    def from_table(cls, t: ContingencyTable) -> SampleCounts:
        return cls(t.a, t.c)


def _log(x: float, base: float) -> float:
    if x == 0:
        return -math.inf
    return math.log2(x) if base == 2 else math.log(x) / math.log(base)


def _prior_of(h: Hypothesis, prior_h1):
    return prior_h1 if h is Hypothesis.H1 else 1 - prior_h1


def truth_value(ta: TruthAssignment, predicate: Predicate, h: Hypothesis):
    """T(theta|h) for the two-valued channel."""
    if predicate is Predicate.E1:
        return 1 if h is Hypothesis.H1 else ta.b1_prime
    return 1 if h is Hypothesis.H0 else ta.b0_prime


def logical_probability(ta: TruthAssignment, predicate: Predicate, prior_h1):
    """T(theta) = sum_h P(h) T(theta|h)."""
    if not 0 <= prior_h1 <= 1:
        raise OutOfRange(f"prior {prior_h1} is outside [0, 1]")
    return sum(_prior_of(h, prior_h1) * truth_value(ta, predicate, h) for h in Hypothesis)


def semantic_bayes(ta: TruthAssignment, predicate: Predicate, prior_h1) -> dict[Hypothesis, object]:
    """P(h|theta) = P(h) T(theta|h) / T(theta)."""
    lp = logical_probability(ta, predicate, prior_h1)
    if lp == 0:
        raise ZeroLogicalProbability(f"predicate {predicate.value} has logical probability 0")
    return {h: _prior_of(h, prior_h1) * truth_value(ta, predicate, h) / lp for h in Hypothesis}


def semantic_information(
    ta: TruthAssignment, predicate: Predicate, h: Hypothesis, prior_h1, log_base: float = 2
) -> float:
    """I(h; theta) = log T(theta|h)/T(theta)."""
    lp = logical_probability(ta, predicate, prior_h1)
    if lp == 0:
        raise ZeroLogicalProbability(f"predicate {predicate.value} has logical probability 0")
    return _log(truth_value(ta, predicate, h) / lp, log_base)


def semantic_information_posterior_form(
    ta: TruthAssignment, predicate: Predicate, h: Hypothesis, prior_h1, log_base: float = 2
) -> float:
    """The same quantity written as log P(h|theta)/P(h)."""
    p = _prior_of(h, prior_h1)
    if p == 0:
        raise ZeroLogicalProbability(f"prior of {h.value} is 0")
    return _log(semantic_bayes(ta, predicate, prior_h1)[h] / p, log_base)


def _xlogy_sum(weights, values) -> float:
    # sum w*v with 0 * (-inf) taken as 0
    return sum(w * v for w, v in zip(weights, values) if w != 0)


def average_semantic_information(
    t: ContingencyTable, ta: TruthAssignment, log_base: float = 2
) -> float:
    """I(H; theta_e1) averaged over the sample's P(h|e1)."""
    p_h1 = prior(t, H1)
    weights = [float(conditional(t, H1, E1)), float(conditional(t, H0, E1))]
    infos = [
        semantic_information(ta, Predicate.E1, h, p_h1, log_base)
        for h in (Hypothesis.H1, Hypothesis.H0)
    ]
    return _xlogy_sum(weights, infos)


def average_log_likelihood_identity(
    counts: SampleCounts, ta: TruthAssignment, prior_h1, log_base: float = 2
) -> tuple[float, float]:
    """Both sides of I(H; theta) = L(theta)/N1 - sum_i P(h_i|e1) log P(h_i).

    ``lhs`` is the average semantic information; ``rhs`` is built from the
    log-likelihood of the e1 subsample under the semantic posterior.
    """
    n1 = counts.total
    if n1 == 0:
        raise OutOfRange("the e1 subsample is empty")
    cond = {Hypothesis.H1: Fraction(counts.n_11, n1), Hypothesis.H0: Fraction(counts.n_01, n1)}
    order = (Hypothesis.H1, Hypothesis.H0)

    lhs = _xlogy_sum(
        [float(cond[h]) for h in order],
        [semantic_information(ta, Predicate.E1, h, prior_h1, log_base) for h in order],
    )

    posterior = semantic_bayes(ta, Predicate.E1, prior_h1)
    n = {Hypothesis.H1: counts.n_11, Hypothesis.H0: counts.n_01}
    log_likelihood = _xlogy_sum(
        [n[h] for h in order], [_log(float(posterior[h]), log_base) for h in order]
    )
    cross = _xlogy_sum(
        [float(cond[h]) for h in order],
        [_log(float(_prior_of(h, prior_h1)), log_base) for h in order],
    )
    rhs = log_likelihood / n1 - cross
    return lhs, rhs


def kl_divergence(p, q, log_base: float = 2) -> float:
    """D(p || q) for two discrete distributions given as sequences."""
    return _xlogy_sum(
        [float(x) for x in p],
        [_log(float(x) / float(y), log_base) if y else math.inf for x, y in zip(p, q)],
    )
