"""2x2 evidence tables, the probabilities derived from them, and rules.

Cell layout (rows are hypotheses, columns evidence)::

            e0   e1
      h1     b    a
      h0     d    c

Probabilities are returned as exact ``Fraction`` values computed from the
integer counts on demand.
"""

from __future__ import annotations

import csv
import enum
import json
import os
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyTable, NegativeCount, ZeroMarginal
from .values import ConfirmationValue, ratio


class EventRole(enum.Enum):
    E1 = "e1"
    E0 = "e0"
    H1 = "h1"
    H0 = "h0"

    @property
    def is_evidence(self) -> bool:
        return self in (EventRole.E1, EventRole.E0)

    @property
    def positive(self) -> bool:
        return self in (EventRole.E1, EventRole.H1)

    def negated(self) -> EventRole:
        return _NEGATION[self]


_NEGATION = {
    EventRole.E1: EventRole.E0,
    EventRole.E0: EventRole.E1,
    EventRole.H1: EventRole.H0,
    EventRole.H0: EventRole.H1,
}

E1, E0, H1, H0 = EventRole.E1, EventRole.E0, EventRole.H1, EventRole.H0


@dataclass(frozen=True)
class Rule:
    """A directed implication ``antecedent -> consequent``."""

    antecedent: EventRole
    consequent: EventRole

    def __post_init__(self) -> None:
        if self.antecedent.is_evidence == self.consequent.is_evidence:
            raise ValueError(
                f"rule must link an e-event and an h-event, got "
                f"{self.antecedent.value}->{self.consequent.value}"
            )

    @property
    def is_converse(self) -> bool:
        """True for rules of the form h -> e."""
        return not self.antecedent.is_evidence

    @property
    def is_hs_negated(self) -> bool:
        """True when the consequent's polarity differs from the antecedent's."""
        return self.antecedent.positive != self.consequent.positive

    def hs_partner(self) -> Rule:
        return Rule(self.antecedent, self.consequent.negated())

    def converse(self) -> Rule:
        return Rule(self.consequent, self.antecedent)

    @classmethod
    def parse(cls, text: str) -> Rule:
        """Parse ``"e1->h1"`` (also accepts a unicode arrow)."""
        left, sep, right = text.replace("→", "->").partition("->")
        if not sep:
            raise ValueError(f"cannot parse rule {text!r}; expected e.g. 'e1->h1'")
        try:
            return cls(EventRole(left.strip().lower()), EventRole(right.strip().lower()))
        except ValueError as exc:
            raise ValueError(f"cannot parse rule {text!r}: {exc}") from None

    def __str__(self) -> str:
        return f"{self.antecedent.value}->{self.consequent.value}"


ALL_RULES = tuple(
    Rule(x, y)
    for x in EventRole
    for y in EventRole
    if x.is_evidence != y.is_evidence
)
E1_H1 = Rule(E1, H1)
E1_H0 = Rule(E1, H0)
E0_H0 = Rule(E0, H0)
E0_H1 = Rule(E0, H1)
H1_E1 = Rule(H1, E1)
H0_E0 = Rule(H0, E0)


class TablePermutation(enum.Enum):
    SWAP_H = "swap_h"        # a<->c, b<->d  (negate the hypothesis)
    SWAP_E = "swap_e"        # a<->b, c<->d  (negate the evidence)
    TRANSPOSE = "transpose"  # b<->c         (exchange the roles of e and h)
    SWAP_BOTH = "swap_both"  # a<->d, b<->c


@dataclass(frozen=True)
class ContingencyTable:
    a: int  # (e1, h1)
    b: int  # (e0, h1)
    c: int  # (e1, h0)
    d: int  # (e0, h0)

    def __post_init__(self) -> None:
        for name in "abcd":
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"count {name} must be an int, got {v!r}")
            if v < 0:
                raise NegativeCount(f"count {name} = {v} is negative")
        if self.n == 0:
            raise EmptyTable("table has no examples (a+b+c+d = 0)")

    @property
    def n(self) -> int:
        return self.a + self.b + self.c + self.d

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def shifted(self, da: int = 0, db: int = 0, dc: int = 0, dd: int = 0) -> ContingencyTable:
        return ContingencyTable(self.a + da, self.b + db, self.c + dc, self.d + dd)

    def count(self, e: EventRole, h: EventRole) -> int:
        _check_families(e, h)
        if h is H1:
            return self.a if e is E1 else self.b
        return self.c if e is E1 else self.d

    def to_json(self) -> str:
        return json.dumps({"a": self.a, "b": self.b, "c": self.c, "d": self.d})

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c}, {self.d})"


def _check_families(e: EventRole, h: EventRole) -> None:
    if not e.is_evidence or h.is_evidence:
        raise ValueError(f"expected an e-event and an h-event, got {e.value}, {h.value}")


def _as_count(x) -> int:
    # accept numpy integers and integral floats from parsers, nothing fuzzier
    if isinstance(x, bool):
        raise TypeError(f"count must be an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if hasattr(x, "__index__"):
        return int(x.__index__())
    if isinstance(x, float) and x.is_integer():
        return int(x)
    raise TypeError(f"count must be an integer, got {x!r}")


def from_counts(a, b, c, d) -> ContingencyTable:
    return ContingencyTable(_as_count(a), _as_count(b), _as_count(c), _as_count(d))


def from_examples(pairs: Iterable[tuple[int, int]], alpha: int = 0) -> ContingencyTable:
    """Count labelled ``(e_flag, h_flag)`` pairs into a table.

    ``alpha`` is an optional Laplace pseudo-count added to every cell. It is
    restricted to integers so the table stays integral.
    """
    alpha = _as_count(alpha)
    if alpha < 0:
        raise NegativeCount(f"smoothing alpha = {alpha} is negative")
    cells = {(1, 1): 0, (0, 1): 0, (1, 0): 0, (0, 0): 0}
    seen = 0
    for e, h in pairs:
        key = (int(e), int(h))
        if key not in cells:
            raise ValueError(f"flags must be 0 or 1, got {(e, h)!r}")
        cells[key] += 1
        seen += 1
    if seen == 0:
        raise EmptyTable("no examples supplied")
    return ContingencyTable(
        cells[1, 1] + alpha, cells[0, 1] + alpha, cells[1, 0] + alpha, cells[0, 0] + alpha
    )


def conditional(t: ContingencyTable, of: EventRole, given: EventRole) -> Fraction:
    """P(of | given); ``of`` and ``given`` must come from different families."""
    if of.is_evidence == given.is_evidence:
        raise ValueError(f"P({of.value}|{given.value}) mixes events of one family")
    if of.is_evidence:
        num = t.count(of, given)
        den = t.count(E1, given) + t.count(E0, given)
    else:
        num = t.count(given, of)
        den = t.count(given, H1) + t.count(given, H0)
    if den == 0:
        raise ZeroMarginal(f"P({of.value}|{given.value}) undefined: no {given.value} examples")
    return Fraction(num, den)


def prior(t: ContingencyTable, of: EventRole) -> Fraction:
    """Marginal probability of a single event."""
    if of.is_evidence:
        return Fraction(t.count(of, H1) + t.count(of, H0), t.n)
    return Fraction(t.count(E1, of) + t.count(E0, of), t.n)


def joint(t: ContingencyTable, e: EventRole, h: EventRole) -> Fraction:
    return Fraction(t.count(e, h), t.n)


def likelihood_ratio(t: ContingencyTable, sign: str = "positive") -> ConfirmationValue:
    """LR+ = P(e1|h1)/P(e1|h0) or LR- = P(e0|h0)/P(e0|h1)."""
    if sign in ("positive", "+"):
        return ratio(conditional(t, E1, H1), conditional(t, E1, H0))
    if sign in ("negative", "-"):
        return ratio(conditional(t, E0, H0), conditional(t, E0, H1))
    raise ValueError(f"sign must be 'positive' or 'negative', got {sign!r}")


def permute(t: ContingencyTable, p: TablePermutation) -> ContingencyTable:
    a, b, c, d = t.as_tuple()
    if p is TablePermutation.SWAP_H:
        return ContingencyTable(c, d, a, b)
    if p is TablePermutation.SWAP_E:
        return ContingencyTable(b, a, d, c)
    if p is TablePermutation.TRANSPOSE:
        return ContingencyTable(a, c, b, d)
    if p is TablePermutation.SWAP_BOTH:
        return ContingencyTable(d, c, b, a)
    raise ValueError(f"unknown permutation {p!r}")


def orient(t: ContingencyTable, rule: Rule) -> ContingencyTable:
    """Relabel ``t`` so that ``rule`` reads as e1 -> h1.

    Any measure written for e1 -> h1 evaluated on the oriented table gives
    that measure for ``rule``.
    """
    if rule.is_converse:
        t = permute(t, TablePermutation.TRANSPOSE)
    if not rule.antecedent.positive:
        t = permute(t, TablePermutation.SWAP_E)
    if not rule.consequent.positive:
        t = permute(t, TablePermutation.SWAP_H)
    return t


# --- file ingestion -------------------------------------------------------

DEFAULT_TRUE_LABELS = frozenset({"1"})
DEFAULT_FALSE_LABELS = frozenset({"0"})


def read_examples_csv(
    path: str | os.PathLike,
    true_labels: Iterable[str] = DEFAULT_TRUE_LABELS,
    false_labels: Iterable[str] = DEFAULT_FALSE_LABELS,
    alpha: int = 0,
) -> ContingencyTable:
    """Read a CSV with header ``e,h`` and one labelled example per row."""
    truthy = {s.strip().lower() for s in true_labels}
    falsy = {s.strip().lower() for s in false_labels}
    if truthy & falsy:
        raise ValueError(f"labels {sorted(truthy & falsy)} are both true and false")

    def flag(field: str, lineno: int) -> int:
        key = field.strip().lower()
        if key in truthy:
            return 1
        if key in falsy:
            return 0
        raise ValueError(f"line {lineno}: unrecognised label {field!r}")

    pairs = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip().lower() for h in header] != ["e", "h"]:
            raise ValueError(f"{path}: expected header 'e,h', got {header!r}")
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not f.strip() for f in row):
                continue
            if len(row) != 2:
                raise ValueError(f"line {lineno}: expected 2 fields, got {len(row)}")
            pairs.append((flag(row[0], lineno), flag(row[1], lineno)))
    return from_examples(pairs, alpha=alpha)


def read_counts_json(path: str | os.PathLike) -> ContingencyTable:
    """Read ``{"a": .., "b": .., "c": .., "d": ..}``."""
    with open(path) as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict) or set(doc) != set("abcd"):
        raise ValueError(f"{path}: expected an object with keys a, b, c, d")
    for k in "abcd":
        if not isinstance(doc[k], int) or isinstance(doc[k], bool):
            raise TypeError(f"{path}: count {k} must be an integer, got {doc[k]!r}")
    return from_counts(doc["a"], doc["b"], doc["c"], doc["d"])


def parse_counts(text: str) -> ContingencyTable:
    """Parse ``"20,180,8,792"``."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"expected four comma-separated counts, got {text!r}")
    try:
        values: Sequence[int] = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"counts must be integers, got {text!r}") from None
    return from_counts(*values)
