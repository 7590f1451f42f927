import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from confirmation import (
    E1,
    H1,
    ContingencyTable,
    Hypothesis,
    OutOfRange,
    Predicate,
    SampleCounts,
    TruthAssignment,
    ZeroLogicalProbability,
    average_semantic_information,
    conditional,
    optimize_truth_assignment,
    prior,
    semantic_bayes,
    semantic_information,
)
from confirmation.semantic_info import (
    average_log_likelihood_identity,
    kl_divergence,
    logical_probability,
    semantic_information_posterior_form,
    truth_value,
)

from . import oracles
from .strategies import tables

EX1 = ContingencyTable(20, 180, 8, 792)
TA = TruthAssignment(Fraction(1, 10))
H1_, H0_ = Hypothesis.H1, Hypothesis.H0
probabilities = st.fractions(0, 1).filter(lambda p: 0 < p < 1)


def test_truth_values():
    assert truth_value(TA, Predicate.E1, H0_) == Fraction(1, 10)
    assert truth_value(TA, Predicate.E1, H1_) == 1
    tautology = TruthAssignment(1)
    assert truth_value(tautology, Predicate.E1, H0_) == truth_value(tautology, Predicate.E1, H1_) == 1
    assert truth_value(TruthAssignment(0), Predicate.E1, H0_) == 0
    assert truth_value(TruthAssignment(1, Fraction(1, 4)), Predicate.E0, H1_) == Fraction(1, 4)
    with pytest.raises(OutOfRange):
        TruthAssignment(1.5)


def test_logical_probability():
    assert logical_probability(TA, Predicate.E1, Fraction(1, 5)) == Fraction(28, 100)
    assert logical_probability(TruthAssignment(1), Predicate.E1, Fraction(1, 5)) == 1
    assert logical_probability(TruthAssignment(0), Predicate.E1, Fraction(1, 5)) == Fraction(1, 5)
    with pytest.raises(OutOfRange):
        logical_probability(TA, Predicate.E1, 2)


def test_semantic_bayes():
    post = semantic_bayes(TA, Predicate.E1, Fraction(1, 5))
    assert post[H1_] == Fraction(20, 28)
    assert sum(post.values()) == 1
    assert semantic_bayes(TruthAssignment(1), Predicate.E1, Fraction(1, 5))[H1_] == Fraction(1, 5)
    assert semantic_bayes(TruthAssignment(0), Predicate.E1, Fraction(1, 5))[H1_] == 1
    with pytest.raises(ZeroLogicalProbability):
        semantic_bayes(TruthAssignment(0), Predicate.E1, 0)


def test_semantic_information():
    assert semantic_information(TA, Predicate.E1, H1_, 0.2) == pytest.approx(math.log2(1 / 0.28))
    tautology = TruthAssignment(1)
    for h in Hypothesis:
        assert semantic_information(tautology, Predicate.E1, h, 0.2) == 0
    assert semantic_information(TruthAssignment(0), Predicate.E1, H0_, 0.2) == -math.inf
    assert semantic_information(TA, Predicate.E1, H1_, 0.2, log_base=math.e) == \
        pytest.approx(math.log(1 / 0.28))


@given(st.fractions(0, 1), probabilities, st.sampled_from(list(Hypothesis)))
def test_information_dual_forms_agree(b1, p, h):
    ta = TruthAssignment(b1)
    direct = semantic_information(ta, Predicate.E1, h, p)
    via_posterior = semantic_information_posterior_form(ta, Predicate.E1, h, p)
    if math.isinf(direct):
        assert via_posterior == direct
    else:
        assert via_posterior == pytest.approx(direct, abs=1e-12)


@given(st.fractions(0, 1), probabilities)
def test_semantic_bayes_sums_to_one(b1, p):
    assert sum(semantic_bayes(TruthAssignment(b1), Predicate.E1, p).values()) == 1


def test_average_semantic_information():
    expected = (20 / 28) * math.log2(1 / 0.28) + (8 / 28) * math.log2(0.1 / 0.28)
    assert average_semantic_information(EX1, TA) == pytest.approx(expected, abs=1e-12)
    assert expected == pytest.approx(0.8865, abs=1e-3)
    assert average_semantic_information(EX1, TruthAssignment(1)) == 0


@given(tables(min_cell=1), st.fractions(0, 1).filter(lambda x: x > 0))
def test_average_information_matches_oracle(t, b1):
    got = average_semantic_information(t, TruthAssignment(b1))
    assert got == pytest.approx(oracles.avg_semantic_info(*t.as_tuple(), float(b1)), abs=1e-12)


@given(tables(min_cell=1))
def test_optimum_is_kl_divergence(t):
    # orient so that the rule is confirmed: on the other branch b1' would clip at 1
    ta = optimize_truth_assignment(t)
    p1, pe = prior(t, H1), conditional(t, H1, E1)
    if pe < p1:
        return
    kl = kl_divergence([pe, 1 - pe], [p1, 1 - p1])
    assert average_semantic_information(t, ta) == pytest.approx(kl, abs=1e-12)
    post = semantic_bayes(ta, Predicate.E1, p1)
    assert post[H1_] == pe


def test_identity_examples():
    lhs, rhs = average_log_likelihood_identity(SampleCounts(20, 8), TA, Fraction(1, 5))
    assert lhs == pytest.approx(rhs, abs=1e-10)
    assert lhs == pytest.approx(0.8865, abs=1e-3)
    lhs, rhs = average_log_likelihood_identity(SampleCounts(20, 8), TruthAssignment(1), Fraction(1, 5))
    assert lhs == 0 and rhs == pytest.approx(0, abs=1e-10)
    lhs, rhs = average_log_likelihood_identity(SampleCounts(9, 0), TruthAssignment(0), Fraction(1, 5))
    assert lhs == pytest.approx(-math.log2(0.2)) and rhs == pytest.approx(-math.log2(0.2))
    with pytest.raises(OutOfRange):
        average_log_likelihood_identity(SampleCounts(0, 0), TA, Fraction(1, 5))


def test_sample_counts_from_table():
    assert SampleCounts.from_table(EX1) == SampleCounts(20, 8)
    assert SampleCounts(20, 8).total == 28
