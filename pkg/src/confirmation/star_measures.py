"""Channel and prediction confirmation measures b*, c* and c_F*.

b* compares the two likelihoods of the rule's antecedent, so it depends on
P(e|h) and behaves like the likelihood ratio.  c* compares the positive
examples with the counterexamples of the rule, so it depends on P(h|e) and
behaves like a correct rate.  c_F* is c* with the max() in the denominator
replaced by a sum.

Every measure has two implementations:

* a probability form, written once for e1 -> h1 and applied to other rules
  by relabelling the table, and
* a count form with the closed expressions for each of the four
  non-negated rules (``*_counts``).

Rules whose consequent is negated (e1 -> h0, ...) are answered by negating
the partner rule, i.e. through Hypothesis Symmetry.
"""

from __future__ import annotations

from collections.abc import Callable
from fractions import Fraction

from .classic_measures import MeasureKind, eval_classic
from .contingency import (
    E0,
    E1,
    H0,
    H1,
    ContingencyTable,
    Rule,
    conditional,
    likelihood_ratio,
    orient,
)
from .errors import UndefinedError
from .semantic_info import TruthAssignment
from .values import UNDEFINED, ConfirmationValue, Tag

StarKind = MeasureKind  # restricted to BStar, CStar, CFStar


def _max_form(pos: Fraction | int, neg: Fraction | int) -> ConfirmationValue:
    """(pos - neg)/max(pos, neg), undefined when both vanish."""
    top = max(pos, neg)
    if top == 0:
        return UNDEFINED
    return ConfirmationValue.finite(Fraction(pos - neg) / top)


def _sum_form(pos: Fraction | int, neg: Fraction | int) -> ConfirmationValue:
    total = pos + neg
    if total == 0:
        return UNDEFINED
    return ConfirmationValue.finite(Fraction(pos - neg) / total)


def _via_hs(
    rule: Rule, t: ContingencyTable, base: Callable[[Rule, ContingencyTable], ConfirmationValue]
) -> ConfirmationValue:
    if rule.is_hs_negated:
        return -base(rule.hs_partner(), t)
    return base(rule, t)


# --- probability forms ------------------------------------------------------


def _b_star_oriented(rule: Rule, t: ContingencyTable) -> ConfirmationValue:
    o = orient(t, rule)
    return _max_form(conditional(o, E1, H1), conditional(o, E1, H0))


def _c_star_oriented(rule: Rule, t: ContingencyTable) -> ConfirmationValue:
    o = orient(t, rule)
    if o.a + o.c == 0:
        return UNDEFINED
    return _max_form(conditional(o, H1, E1), conditional(o, H0, E1))


def _c_f_star_oriented(rule: Rule, t: ContingencyTable) -> ConfirmationValue:
    o = orient(t, rule)
    if o.a + o.c == 0:
        return UNDEFINED
    return _sum_form(conditional(o, H1, E1), conditional(o, H0, E1))


def b_star(rule: Rule, t: ContingencyTable) -> ConfirmationValue:
    """Channel confirmation measure.

    For e1 -> h1 this is ``(P(e1|h1) - P(e1|h0)) / max(P(e1|h1), P(e1|h0))``,
    equivalently ``(LR+ - 1)/max(LR+, 1)``.  Raises ``ZeroMarginal`` when a
    needed conditional has no examples to condition on.
    """
    return _via_hs(rule, t, _b_star_oriented)


def c_star(rule: Rule, t: ContingencyTable) -> ConfirmationValue:
    """Prediction confirmation measure; ``(a - c)/max(a, c)`` for e1 -> h1.

    Undefined when the rule has neither positive examples nor counterexamples.
    """
    return _via_hs(rule, t, _c_star_oriented)


def c_f_star(rule: Rule, t: ContingencyTable) -> ConfirmationValue:
    """``(a - c)/(a + c)`` for e1 -> h1."""
    return _via_hs(rule, t, _c_f_star_oriented)


# --- count forms --------------------------------------------------------------

# (positive, counterexample) terms for the channel measures, after
# multiplying both conditionals through by the product of their marginals.
# pos - neg = ad - bc in every direction; a zero marginal zeroes both terms.
_B_COUNT_TERMS = {
    (E1, H1): lambda a, b, c, d: (a * (c + d), c * (a + b)),
    (E0, H0): lambda a, b, c, d: (d * (a + b), b * (c + d)),
    (H1, E1): lambda a, b, c, d: (a * (b + d), b * (a + c)),
    (H0, E0): lambda a, b, c, d: (d * (a + c), c * (b + d)),
}

# (positive examples, counterexamples) for the prediction measures
_C_COUNT_TERMS = {
    (E1, H1): lambda a, b, c, d: (a, c),
    (E0, H0): lambda a, b, c, d: (d, b),
    (H1, E1): lambda a, b, c, d: (a, b),
    (H0, E0): lambda a, b, c, d: (d, c),
}


def _count_form(terms, combine) -> Callable[[Rule, ContingencyTable], ConfirmationValue]:
    def evaluate(rule: Rule, t: ContingencyTable) -> ConfirmationValue:
        pos, neg = terms[rule.antecedent, rule.consequent](*t.as_tuple())
        return combine(pos, neg)

    return lambda rule, t: _via_hs(rule, t, evaluate)


b_star_counts = _count_form(_B_COUNT_TERMS, _max_form)
b_star_counts.__doc__ = "b* via the (ad - bc)/(x ∨ y) count expressions."
c_star_counts = _count_form(_C_COUNT_TERMS, _max_form)
c_star_counts.__doc__ = "c* via (pos - neg)/(pos ∨ neg) on raw counts."
c_f_star_counts = _count_form(_C_COUNT_TERMS, _sum_form)
c_f_star_counts.__doc__ = "c_F* via (pos - neg)/(pos + neg) on raw counts."


# --- truth assignment ---------------------------------------------------------


def _min_reciprocal(x: ConfirmationValue) -> Fraction:
    # min(x, 1/x) for x in [0, +inf]
    if x.tag is Tag.POS_INFINITE:
        return Fraction(0)
    if not x.is_finite:
        raise UndefinedError("likelihood ratio is 0/0")
    v = x.value
    if v == 0:
        return Fraction(0)
    return min(v, 1 / v)


def optimize_truth_assignment(t: ContingencyTable) -> TruthAssignment:
    """Disbelief degrees that maximise average semantic information.

    ``b1_prime = min(1/LR+, LR+)`` and ``b0_prime = min(1/LR-, LR-)``.  On the
    dominant branch (LR+ >= 1) this is P(e1|h0)/P(e1|h1) and b* = 1 - b1'.
    For LR+ < 1 the value is the disbelief degree of the HS partner e1 -> h0.
    """
    if conditional(t, E1, H1) == 0 and conditional(t, E1, H0) == 0:
        raise UndefinedError("P(e1|h1) and P(e1|h0) are both zero")
    if conditional(t, E0, H0) == 0 and conditional(t, E0, H1) == 0:
        raise UndefinedError("P(e0|h0) and P(e0|h1) are both zero")
    return TruthAssignment(
        _min_reciprocal(likelihood_ratio(t, "positive")),
        _min_reciprocal(likelihood_ratio(t, "negative")),
    )


# --- generic dispatch -----------------------------------------------------------

_STAR = {
    MeasureKind.BStar: b_star,
    MeasureKind.CStar: c_star,
    MeasureKind.CFStar: c_f_star,
}


def evaluate(
    kind: MeasureKind, rule: Rule, t: ContingencyTable, log_base: float = 2
) -> ConfirmationValue:
    """Evaluate any measure, classical or star, on any rule."""
    if kind in _STAR:
        return _STAR[kind](rule, t)
    return eval_classic(kind, rule, t, log_base)


def confirmation_increment(
    kind: MeasureKind,
    rule: Rule,
    t: ContingencyTable,
    delta: tuple[int, int, int, int],
    log_base: float = 2,
):
    """f(a+da, b+db, c+dc, d+dd) - f(a, b, c, d)."""
    before = evaluate(kind, rule, t, log_base)
    after = evaluate(kind, rule, t.shifted(*delta), log_base)
    if not (before.is_finite and after.is_finite):
        raise UndefinedError(
            f"{kind.value}({rule}) is not finite on {t} or on the shifted table"
        )
    return after.value - before.value
