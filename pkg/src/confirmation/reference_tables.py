"""Reference tables recomputed from first principles.

Each published figure is kept as the string it was printed with, so the
comparison knows its precision.  A cell is

* ``MATCH`` when the computed value equals the printed one (within 1e-9),
* ``MATCH-ROUNDED`` when rounding the computed value to the printed number
  of decimals lands within 0.005 of it,
* ``ERRATUM`` otherwise.

Fractions such as ``5/13`` are printed exactly and compared exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from .classic_measures import MeasureKind
from .contingency import E1_H1, H0_E0, ContingencyTable, likelihood_ratio
from .prediction import bayes_posterior, predict_from_b_star
from .star_measures import confirmation_increment, evaluate

MATCH = "MATCH"
MATCH_ROUNDED = "MATCH-ROUNDED"
ERRATUM = "ERRATUM"

EXACT_TOL = 1e-9
ROUNDED_TOL = 0.005


@dataclass(frozen=True)
class ReferenceCell:
    table: str
    row: str
    column: str
    printed: str
    computed: object  # Fraction, float, or "Yes"/"No"
    status: str
    note: str = ""


def printed_decimals(printed: str) -> int:
    text = printed.strip().lstrip("+-")
    return len(text.split(".", 1)[1]) if "." in text else 0


def classify(computed, printed: str, exact: bool = False) -> str:
    """Status of one numeric cell; see the module docstring.

    ``exact`` marks cells printed as exact rationals (``3`` then means 3/1).
    """
    if exact or "/" in printed:
        return MATCH if Fraction(computed) == Fraction(printed) else ERRATUM
    target = float(printed)
    x = float(computed)
    if abs(x - target) <= EXACT_TOL:
        return MATCH
    # Decimal rounding avoids binary artefacts such as round(0.0145, 3)
    rounded = float(round(Decimal(repr(x)), printed_decimals(printed)))
    if abs(rounded - target) <= ROUNDED_TOL:
        return MATCH_ROUNDED
    return ERRATUM


def _cell(table, row, column, printed, computed, note="", exact=False) -> ReferenceCell:
    status = classify(computed, printed, exact)
    if status == ERRATUM and not note:
        note = f"printed {printed}, computed {float(computed):.6g}"
    return ReferenceCell(table, row, column, printed, computed, status, note)


# --- three worked examples -----------------------------------------------------

EXAMPLES_COLUMNS = (
    MeasureKind.D, MeasureKind.M, MeasureKind.R, MeasureKind.C, MeasureKind.Z,
    MeasureKind.S, MeasureKind.N, MeasureKind.L, MeasureKind.F,
    MeasureKind.BStar, MeasureKind.CStar,
)

EXAMPLES_ROWS = {
    "Ex.1": ((20, 180, 8, 792),
             (".514", ".072", "1.84", ".014", ".643", ".529", ".09", "3.32", ".818", ".9", "0.8")),
    "Ex.2": ((200, 0, 720, 80),
             (".017", ".08", "0.12", ".016", ".022", ".217", ".1", ".152", ".053", ".1", "-.722")),
    "Ex.3": ((10, 0, 90, 900),
             (".09", ".9", "3.32", ".009", ".091", ".1", ".091", "3.46", ".833", ".91", "-.9")),
}


def worked_examples() -> list[ReferenceCell]:
    cells = []
    for row, (counts, printed) in EXAMPLES_ROWS.items():
        t = ContingencyTable(*counts)
        for kind, text in zip(EXAMPLES_COLUMNS, printed):
            value = evaluate(kind, E1_H1, t, log_base=2)
            cells.append(_cell("worked examples", f"{row} {counts}", kind.value, text, value.value))
    return cells


# --- increments from a and d -----------------------------------------------------

INCREMENTS_BASE = (20, 10, 10, 20)
INCREMENTS_STEP = 10
INCREMENTS_ROWS = {
    "D": (("1/6", "5/28", "5/21"), "Yes"),
    "LR+": (("2", "9/4", "3"), "Yes"),
    "F": (("1/3", "5/13", "5/11"), "Yes"),
    "c*": (("1/2", "2/3", "1/2"), "No"),
}


def _increment_value(row: str, t: ContingencyTable) -> Fraction:
    if row == "LR+":
        return likelihood_ratio(t, "positive").value
    kind = {"D": MeasureKind.D, "F": MeasureKind.F, "c*": MeasureKind.CStar}[row]
    return evaluate(kind, E1_H1, t).value


def increments() -> list[ReferenceCell]:
    base = ContingencyTable(*INCREMENTS_BASE)
    variants = (
        ("a=d=20 b=c=10", base),
        ("da=10", base.shifted(da=INCREMENTS_STEP)),
        ("dd=10", base.shifted(dd=INCREMENTS_STEP)),
    )
    cells = []
    for row, (printed, answer) in INCREMENTS_ROWS.items():
        values = []
        for (column, t), text in zip(variants, printed):
            value = _increment_value(row, t)
            values.append(value)
            note = f"printed {text}, computed {value}" if value != Fraction(text) else ""
            cells.append(_cell("increments", row, column, text, value, note, exact=True))
        by_d = (values[2] - values[0]) / INCREMENTS_STEP
        by_a = (values[1] - values[0]) / INCREMENTS_STEP
        computed = "Yes" if by_d > by_a else "No"
        status = MATCH if computed == answer else ERRATUM
        cells.append(ReferenceCell("increments", row, "df/dd > df/da?", answer, computed, status))
    return cells


# --- predictions that depend on the prior ------------------------------------------

PRIOR_SENSITIVITY = Fraction("0.917")
PRIOR_FALSE_POSITIVE_RATE = Fraction("0.001")
PRIOR_PRINTED_B = "0.9989"
PRIOR_PRIORS = {"0.0001": "0.0084", "0.002": "0.65", "0.1": "0.99"}


def prior_b_star() -> Fraction:
    """b* of the test, from its two likelihoods."""
    return (PRIOR_SENSITIVITY - PRIOR_FALSE_POSITIVE_RATE) / PRIOR_SENSITIVITY


def prior_dependence() -> list[ReferenceCell]:
    b = prior_b_star()
    cells = [_cell("prior dependence", "b*", "", PRIOR_PRINTED_B, b)]
    for prior_text, printed in PRIOR_PRIORS.items():
        prior = Fraction(prior_text)
        predicted = predict_from_b_star(b, prior).posterior_h1
        bayes = bayes_posterior(PRIOR_SENSITIVITY, PRIOR_FALSE_POSITIVE_RATE, prior)
        note = "" if predicted == bayes else f"Bayes gives {float(bayes):.6g}"
        cells.append(_cell("prior dependence", "P(h1|theta_e1)", f"P(h1)={prior_text}", printed,
                           predicted, note))
    return cells


# --- ravens ------------------------------------------------------------------------

RAVEN_TABLE = (10, 0, 1, 100)


def raven_figures(counts=RAVEN_TABLE, delta_a: int = 1, delta_d: int = 1) -> dict:
    """c* of a rule and its converse, and the increments one more example brings."""
    t = ContingencyTable(*counts)
    inc_a = confirmation_increment(MeasureKind.CStar, E1_H1, t, (delta_a, 0, 0, 0))
    inc_d = confirmation_increment(MeasureKind.CStar, H0_E0, t, (0, 0, 0, delta_d))
    return {
        "c*(e1->h1)": evaluate(MeasureKind.CStar, E1_H1, t),
        "c*(h0->e0)": evaluate(MeasureKind.CStar, H0_E0, t),
        "increment(da)": inc_a,
        "increment(dd)": inc_d,
    }


def raven() -> list[ReferenceCell]:
    fig = raven_figures()
    cells = [
        _cell("Raven", str(RAVEN_TABLE), "c*(e1->h1)", "0.9", fig["c*(e1->h1)"].value),
        _cell("Raven", str(RAVEN_TABLE), "c*(h0->e0)", "0.99", fig["c*(h0->e0)"].value),
        _cell("Raven", str(RAVEN_TABLE), "increment(da=1)", "0.0091", fig["increment(da)"]),
        _cell("Raven", str(RAVEN_TABLE), "increment(dd=1)", "0.0001", fig["increment(dd)"]),
    ]
    ratio = fig["increment(da)"] / fig["increment(dd)"]
    cells.append(_cell(
        "Raven", str(RAVEN_TABLE), "ratio", "91", ratio,
        f"computed {float(ratio):.6g}; 91 is the ratio of the rounded increments 0.0091/0.0001",
    ))
    return cells


def all_cells() -> list[ReferenceCell]:
    return prior_dependence() + worked_examples() + increments() + raven()


def examples_note(t: ContingencyTable, kind: MeasureKind) -> str:
    """Erratum note for a measure on one of the worked-example tables, else ''."""
    for row, (counts, printed) in EXAMPLES_ROWS.items():
        if t.as_tuple() != counts or kind not in EXAMPLES_COLUMNS:
            continue
        text = printed[EXAMPLES_COLUMNS.index(kind)]
        value = evaluate(kind, E1_H1, t, log_base=2).value
        if classify(value, text) == ERRATUM:
            return f"published table prints {text} for {row} ({ERRATUM})"
    return ""


def prior_note(b_value, prior) -> str:
    """Erratum note when a prediction reproduces a flagged column of the prior table."""
    if abs(float(b_value) - float(PRIOR_PRINTED_B)) > 5e-5:
        return ""
    for prior_text, printed in PRIOR_PRIORS.items():
        if Fraction(prior) != Fraction(prior_text):
            continue
        predicted = predict_from_b_star(b_value, prior).posterior_h1
        if classify(predicted, printed) == ERRATUM:
            return f"published table prints {printed} for P(h1)={prior_text} ({ERRATUM})"
    return ""
