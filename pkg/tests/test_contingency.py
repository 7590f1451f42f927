import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from confirmation import (
    ALL_RULES,
    E0,
    E1,
    H0,
    H1,
    ContingencyTable,
    EmptyTable,
    NegativeCount,
    Rule,
    TablePermutation,
    ZeroMarginal,
    conditional,
    from_counts,
    from_examples,
    joint,
    likelihood_ratio,
    orient,
    permute,
    prior,
    read_counts_json,
    read_examples_csv,
)
from confirmation.contingency import parse_counts
from confirmation.values import POS_INF, UNDEFINED

from .strategies import positive_tables, tables

EX1 = ContingencyTable(20, 180, 8, 792)


def test_from_counts():
    assert from_counts(20, 180, 8, 792).n == 1000
    assert from_counts(10, 0, 90, 900).n == 1000
    with pytest.raises(EmptyTable):
        from_counts(0, 0, 0, 0)
    with pytest.raises(NegativeCount):
        from_counts(1, -1, 0, 0)


def test_from_counts_rejects_non_integers():
    with pytest.raises(TypeError):
        from_counts(1.5, 0, 0, 1)
    with pytest.raises(TypeError):
        ContingencyTable(True, 0, 0, 1)
    assert from_counts(2.0, 0, 0, 1) == ContingencyTable(2, 0, 0, 1)


def test_from_examples():
    assert from_examples([(1, 1), (1, 1), (0, 0)]).as_tuple() == (2, 0, 0, 1)
    assert from_examples([(1, 0)]).as_tuple() == (0, 0, 1, 0)
    pairs = [(1, 1)] * 20 + [(0, 1)] * 180 + [(1, 0)] * 8 + [(0, 0)] * 792
    assert from_examples(pairs) == EX1
    with pytest.raises(EmptyTable):
        from_examples([])


def test_laplace_alpha():
    assert from_examples([(1, 1)], alpha=1).as_tuple() == (2, 1, 1, 1)
    with pytest.raises((TypeError, ValueError)):
        from_examples([(1, 1)], alpha=0.5)


@given(st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1)), min_size=1, max_size=300))
def test_from_examples_readback(pairs):
    t = from_examples(pairs)
    for e, h, count in ((1, 1, t.a), (0, 1, t.b), (1, 0, t.c), (0, 0, t.d)):
        assert count == pairs.count((e, h))


def test_conditionals_and_priors():
    assert conditional(EX1, E1, H1) == Fraction(1, 10)
    assert conditional(EX1, E1, H0) == Fraction(1, 100)
    assert conditional(ContingencyTable(7, 0, 0, 3), H1, E1) == 1
    assert prior(EX1, H1) == Fraction(1, 5)
    assert prior(EX1, E1) == Fraction(28, 1000)
    assert prior(ContingencyTable(3, 2, 1, 4), H1) == Fraction(1, 2)
    assert joint(EX1, E1, H1) == Fraction(2, 100)
    assert joint(ContingencyTable(1, 2, 0, 3), E1, H0) == 0


def test_zero_marginal():
    with pytest.raises(ZeroMarginal):
        conditional(ContingencyTable(0, 5, 0, 5), H1, E1)


def test_conditional_rejects_same_family():
    with pytest.raises(ValueError):
        conditional(EX1, E1, E0)


@given(tables())
def test_joints_sum_to_one(t):
    assert sum(joint(t, e, h) for e in (E1, E0) for h in (H1, H0)) == 1


@given(tables())
def test_conditionals_sum_to_one(t):
    for given_ev, pair in ((H1, (E1, E0)), (H0, (E1, E0)), (E1, (H1, H0)), (E0, (H1, H0))):
        try:
            assert sum(conditional(t, x, given_ev) for x in pair) == 1
        except ZeroMarginal:
            pass


def test_likelihood_ratio():
    assert likelihood_ratio(ContingencyTable(20, 10, 10, 20)).value == 2
    assert likelihood_ratio(ContingencyTable(30, 10, 10, 20)).value == Fraction(9, 4)
    assert likelihood_ratio(ContingencyTable(20, 10, 10, 30)).value == Fraction(8, 3)
    assert likelihood_ratio(ContingencyTable(5, 5, 0, 10)) == POS_INF
    assert likelihood_ratio(ContingencyTable(0, 5, 0, 10)) == UNDEFINED
    # P(e0|h0)/P(e0|h1)
    assert likelihood_ratio(ContingencyTable(20, 10, 10, 20), "negative").value == 2


@given(positive_tables)
def test_lr_times_fpr_is_sensitivity(t):
    assert likelihood_ratio(t).value * conditional(t, E1, H0) == conditional(t, E1, H1)


def test_permutations():
    assert permute(EX1, TablePermutation.SWAP_H).as_tuple() == (8, 792, 20, 180)
    assert permute(EX1, TablePermutation.SWAP_E).as_tuple() == (180, 20, 792, 8)
    assert permute(EX1, TablePermutation.TRANSPOSE).as_tuple() == (20, 8, 180, 792)
    assert permute(EX1, TablePermutation.SWAP_BOTH).as_tuple() == (792, 8, 180, 20)
    composed = permute(permute(EX1, TablePermutation.SWAP_H), TablePermutation.SWAP_E)
    assert composed == permute(EX1, TablePermutation.SWAP_BOTH)


@given(tables(), st.sampled_from(list(TablePermutation)))
def test_permute_is_involution(t, p):
    assert permute(permute(t, p), p) == t


@pytest.mark.parametrize(
    "rule, expected",
    [
        ("e1->h1", (1, 2, 3, 4)),
        ("e0->h0", (4, 3, 2, 1)),
        ("h1->e1", (1, 3, 2, 4)),
        ("h0->e0", (4, 2, 3, 1)),
        ("h1->e0", (2, 4, 1, 3)),
    ],
)
def test_orient(rule, expected):
    assert orient(ContingencyTable(1, 2, 3, 4), Rule.parse(rule)).as_tuple() == expected


def test_rules():
    assert len(ALL_RULES) == 8
    assert len(set(ALL_RULES)) == 8
    with pytest.raises(ValueError):
        Rule(E1, E0)
    r = Rule.parse("h0 → e0")
    assert r.is_converse and not r.is_hs_negated
    assert Rule.parse("e1->h0").is_hs_negated
    assert Rule.parse("e1->h0").hs_partner() == Rule.parse("e1->h1")
    assert str(Rule.parse("e1->h1").converse()) == "h1->e1"
    with pytest.raises(ValueError):
        Rule.parse("e1=>h1")


def test_read_examples_csv(tmp_path):
    path = tmp_path / "ex.csv"
    path.write_text("e,h\n1,1\nyes,no\n0,0\n\n")
    t = read_examples_csv(path, true_labels={"1", "yes"}, false_labels={"0", "no"})
    assert t.as_tuple() == (1, 0, 1, 1)
    path.write_text("e,h\n1,maybe\n")
    with pytest.raises(ValueError, match="line 2"):
        read_examples_csv(path)
    path.write_text("x,y\n1,1\n")
    with pytest.raises(ValueError, match="header"):
        read_examples_csv(path)


def test_read_counts_json(tmp_path):
    path = tmp_path / "t.json"
    path.write_text(EX1.to_json())
    assert read_counts_json(path) == EX1
    path.write_text(json.dumps({"a": 1, "b": 2, "c": 3}))
    with pytest.raises(ValueError):
        read_counts_json(path)
    path.write_text(json.dumps({"a": 1, "b": 2, "c": 3, "d": 0.5}))
    with pytest.raises(TypeError):
        read_counts_json(path)


def test_parse_counts():
    assert parse_counts(" 20, 180,8,792") == EX1
    for bad in ("1,2,3", "a,b,c,d", "1,2,3,-4"):
        with pytest.raises(ValueError):
            parse_counts(bad)
