"""Seeded audits of measure properties.

Each ``check_*`` function inspects one table; the ``audit_*`` sweeps run a
check over a deterministic sequence of random tables and reduce the results
to an :class:`AuditReport`.  Evaluations that are not finite (0/0, +/-inf,
or a zero marginal) are skipped, never counted as violations.
"""

from __future__ import annotations

import enum
import json
from collections.abc import Iterable, Sequence
from dataclasses import asdict, dataclass

import numpy as np

from .classic_measures import MeasureKind
from .contingency import (
    E1_H1,
    ContingencyTable,
    EventRole,
    Rule,
    TablePermutation,
    permute,
)
from .errors import ZeroMarginal
from .star_measures import evaluate
from .values import UNDEFINED, ConfirmationValue

DEFAULT_TOL = 1e-9
K = MeasureKind


class SymmetryKind(enum.Enum):
    HS = "HS"  # c(e1->h1) = -c(e1->h0)
    ES = "ES"  # c(e1->h1) = -c(e0->h1)
    CS = "CS"  # c(e1->h1) = c(h1->e1)
    TS = "TS"  # c(e1->h1) = c(e0->h0)


_SYMMETRY = {
    SymmetryKind.HS: (TablePermutation.SWAP_H, -1),
    SymmetryKind.ES: (TablePermutation.SWAP_E, -1),
    SymmetryKind.CS: (TablePermutation.TRANSPOSE, 1),
    SymmetryKind.TS: (TablePermutation.SWAP_BOTH, 1),
}

PROPERTIES = ("HS", "ES", "CS", "TS", "monotonicity", "normalization", "logicality", "NFC")

# Measure/property pairs that should come out clean; everything else is
# audited for information only.
EXPECTED_PASS = {
    "HS": {K.F, K.Z, K.L, K.BStar, K.CStar, K.CFStar},
    "ES": set(),
    "CS": {K.C},
    "TS": set(),
    "monotonicity": {K.L, K.F, K.Z, K.BStar, K.CStar, K.CFStar},
    "normalization": {K.Z, K.F, K.BStar, K.CStar, K.CFStar},
    "logicality": {K.F, K.Z, K.BStar, K.CStar, K.CFStar},
    "NFC": {K.CStar, K.CFStar},
}


@dataclass(frozen=True)
class CheckResult:
    status: str  # "holds", "violation" or "skipped"
    deviation: float = 0.0
    detail: str = ""
    values: tuple = ()

    @property
    def holds(self) -> bool:
        return self.status == "holds"


@dataclass
class AuditReport:
    measure: str
    property: str
    trials: int = 0
    violations: int = 0
    skipped: int = 0
    max_deviation: float = 0.0
    worst_witness: dict | None = None
    expected_pass: bool = False

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def add(self, t: ContingencyTable, result: CheckResult) -> None:
        if result.status == "skipped":
            self.skipped += 1
            return
        self.trials += 1
        if result.status == "violation":
            self.violations += 1
            if self.worst_witness is None or result.deviation > self.max_deviation:
                self.worst_witness = {
                    "table": list(t.as_tuple()),
                    "values": [str(v) for v in result.values],
                    "detail": result.detail,
                }
        self.max_deviation = max(self.max_deviation, result.deviation)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    TSV_FIELDS = ("measure", "property", "trials", "violations", "skipped", "max_deviation",
                  "expected_pass", "worst_witness")

    def tsv_row(self) -> str:
        d = self.to_dict()
        d["max_deviation"] = format(self.max_deviation, ".6g")
        d["worst_witness"] = "" if self.worst_witness is None else json.dumps(self.worst_witness)
        return "\t".join(str(d[k]) for k in self.TSV_FIELDS)


def random_tables(trials: int, seed: int = 0, max_cell: int = 100) -> list[ContingencyTable]:
    """Deterministic tables with cells uniform on [0, max_cell], n > 0."""
    if trials <= 0:
        raise ValueError("trials must be positive")
    if max_cell < 1:
        raise ValueError("max_cell must be at least 1")
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < trials:
        cells = [int(x) for x in rng.integers(0, max_cell, size=4, endpoint=True)]
        if sum(cells):
            out.append(ContingencyTable(*cells))
    return out


def _eval(kind: MeasureKind, rule: Rule, t: ContingencyTable, log_base: float = 2
          ) -> ConfirmationValue:
    try:
        return evaluate(kind, rule, t, log_base)
    except ZeroMarginal:
        return UNDEFINED


def check_symmetry(
    kind: MeasureKind, s: SymmetryKind, t: ContingencyTable, tol: float = DEFAULT_TOL
) -> CheckResult:
    perm, sign = _SYMMETRY[s]
    v = _eval(kind, E1_H1, t)
    w = _eval(kind, E1_H1, permute(t, perm))
    if not (v.is_finite and w.is_finite):
        return CheckResult("skipped")
    dev = float(abs(v.value - sign * w.value))
    status = "holds" if dev <= tol else "violation"
    return CheckResult(status, dev, f"{s.value} on {perm.value}", (v, w))


_UNIT_STEPS = {
    "a": ((1, 0, 0, 0), +1),
    "b": ((0, 1, 0, 0), -1),
    "c": ((0, 0, 1, 0), -1),
    "d": ((0, 0, 0, 1), +1),
}


def check_monotonicity(
    kind: MeasureKind, t: ContingencyTable, tol: float = DEFAULT_TOL, rule: Rule = E1_H1
) -> CheckResult:
    """Non-decreasing in a and d, non-increasing in b and c (unit steps)."""
    base = _eval(kind, rule, t)
    stepped = {cell: _eval(kind, rule, t.shifted(*step)) for cell, (step, _) in _UNIT_STEPS.items()}
    if not base.is_finite or not all(v.is_finite for v in stepped.values()):
        return CheckResult("skipped")
    worst, detail, values = 0.0, "", ()
    for cell, (_, direction) in _UNIT_STEPS.items():
        change = stepped[cell].value - base.value
        shortfall = float(-change if direction > 0 else change)
        if shortfall > worst:
            worst = shortfall
            detail = f"{cell}+1 {'decreased' if direction > 0 else 'increased'} the value"
            values = (base, stepped[cell])
    if worst > tol:
        return CheckResult("violation", worst, detail, values)
    return CheckResult("holds", worst)


def _report(kind: MeasureKind, prop: str) -> AuditReport:
    return AuditReport(kind.value, prop, expected_pass=kind in EXPECTED_PASS.get(prop, ()))


def audit_symmetry(kind: MeasureKind, s: SymmetryKind, trials: int, seed: int = 0,
                   max_cell: int = 100, tol: float = DEFAULT_TOL) -> AuditReport:
    report = _report(kind, s.value)
    for t in random_tables(trials, seed, max_cell):
        report.add(t, check_symmetry(kind, s, t, tol))
    return report


def audit_monotonicity(kind: MeasureKind, trials: int, seed: int = 0,
                       max_cell: int = 100, tol: float = DEFAULT_TOL) -> AuditReport:
    report = _report(kind, "monotonicity")
    for t in random_tables(trials, seed, max_cell):
        report.add(t, check_monotonicity(kind, t, tol))
    return report


def check_normalization(kind: MeasureKind, trials: int, seed: int = 0,
                        max_cell: int = 100, tol: float = DEFAULT_TOL) -> AuditReport:
    """Count finite values outside [-1, 1].

    Only Z, F, b*, c* and c_F* are expected to pass; the rest are reported
    for information.
    """
    report = _report(kind, "normalization")
    for t in random_tables(trials, seed, max_cell):
        v = _eval(kind, E1_H1, t)
        if not v.is_finite:
            report.add(t, CheckResult("skipped"))
            continue
        excess = float(max(abs(v.value) - 1, 0))
        status = "violation" if excess > tol else "holds"
        report.add(t, CheckResult(status, excess, "outside [-1, 1]", (v,)))
    return report


def logicality_tables(trials: int, seed: int = 0, max_cell: int = 100):
    """Yield (table, expected) with c = 0 (expect 1) or a = 0 (expect -1).

    The other three cells are drawn from [1, max_cell].
    """
    rng = np.random.default_rng(seed)
    for k in range(trials):
        a, b, c, d = (int(x) for x in rng.integers(1, max_cell, size=4, endpoint=True))
        if k % 2 == 0:
            yield ContingencyTable(a, b, 0, d), 1
        else:
            yield ContingencyTable(0, b, c, d), -1


def check_logicality(kind: MeasureKind, trials: int, seed: int = 0,
                     max_cell: int = 100, tol: float = DEFAULT_TOL) -> AuditReport:
    report = _report(kind, "logicality")
    for t, expected in logicality_tables(trials, seed, max_cell):
        v = _eval(kind, E1_H1, t)
        if not v.is_finite:
            report.add(t, CheckResult("skipped"))
            continue
        dev = float(abs(v.value - expected))
        status = "violation" if dev > tol else "holds"
        report.add(t, CheckResult(status, dev, f"expected {expected}", (v,)))
    return report


def irrelevant_cells(rule: Rule) -> tuple[str, str]:
    """Cells whose examples falsify the antecedent: (consequent true, false).

    For e1 -> h1 these are b = (e0, h1) and d = (e0, h0).
    """
    names = {
        (EventRole.E1, EventRole.H1): "a",
        (EventRole.E0, EventRole.H1): "b",
        (EventRole.E1, EventRole.H0): "c",
        (EventRole.E0, EventRole.H0): "d",
    }
    off = rule.antecedent.negated()
    out = []
    for partner in (rule.consequent, rule.consequent.negated()):
        pair = (off, partner) if off.is_evidence else (partner, off)
        out.append(names[pair])
    return out[0], out[1]


def _perturb(t: ContingencyTable, cells: tuple[str, str], deltas: tuple[int, int]
             ) -> ContingencyTable:
    shift = dict.fromkeys("abcd", 0)
    for cell, delta in zip(cells, deltas):
        shift[cell] += delta
    return t.shifted(shift["a"], shift["b"], shift["c"], shift["d"])


def check_nfc(kind: MeasureKind, rule: Rule, t: ContingencyTable,
              perturbations: Iterable[tuple[int, int]], tol: float = DEFAULT_TOL
              ) -> AuditReport:
    """How far the measure moves when only antecedent-false examples change.

    Each perturbation ``(dx, dy)`` is added to the two cells returned by
    :func:`irrelevant_cells` (``(db, dd)`` for e1 -> h1).
    """
    report = _report(kind, "NFC")
    cells = irrelevant_cells(rule)
    base = _eval(kind, rule, t)
    for deltas in perturbations:
        shifted = _perturb(t, cells, deltas)
        v = _eval(kind, rule, shifted)
        if not (base.is_finite and v.is_finite):
            report.add(shifted, CheckResult("skipped"))
            continue
        dev = float(abs(v.value - base.value))
        status = "violation" if dev > tol else "holds"
        detail = f"d{cells[0]}={deltas[0]}, d{cells[1]}={deltas[1]} from {t}"
        report.add(shifted, CheckResult(status, dev, detail, (base, v)))
    return report


def audit_nfc(kind: MeasureKind, trials: int, seed: int = 0, max_cell: int = 100,
              rule: Rule = E1_H1, tol: float = DEFAULT_TOL) -> AuditReport:
    """Random tables, each with one random perturbation of the irrelevant cells."""
    rng = np.random.default_rng([seed, 1])
    report = _report(kind, "NFC")
    for t in random_tables(trials, seed, max_cell):
        deltas = tuple(int(x) for x in rng.integers(0, max_cell, size=2, endpoint=True))
        sub = check_nfc(kind, rule, t, [deltas], tol)
        report.trials += sub.trials
        report.skipped += sub.skipped
        report.violations += sub.violations
        if sub.max_deviation > report.max_deviation:
            report.max_deviation = sub.max_deviation
            report.worst_witness = sub.worst_witness
    return report


def run_audit(kind: MeasureKind, prop: str, trials: int = 1000, seed: int = 0,
              max_cell: int = 100) -> AuditReport:
    """Dispatch by property name (see ``PROPERTIES``)."""
    if prop in SymmetryKind.__members__:
        return audit_symmetry(kind, SymmetryKind[prop], trials, seed, max_cell)
    key = prop.lower()
    if key == "monotonicity":
        return audit_monotonicity(kind, trials, seed, max_cell)
    if key == "normalization":
        return check_normalization(kind, trials, seed, max_cell)
    if key == "logicality":
        return check_logicality(kind, trials, seed, max_cell)
    if key == "nfc":
        return audit_nfc(kind, trials, seed, max_cell)
    raise ValueError(f"unknown property {prop!r}; choose from {', '.join(PROPERTIES)}")


def parse_property(text: str) -> str:
    for name in PROPERTIES:
        if text.strip().lower() == name.lower():
            return name
    raise ValueError(f"unknown property {text!r}; choose from {', '.join(PROPERTIES)}")


__all__: Sequence[str] = [
    "SymmetryKind", "CheckResult", "AuditReport", "EXPECTED_PASS", "PROPERTIES",
    "random_tables", "check_symmetry", "check_monotonicity", "check_normalization",
    "check_logicality", "check_nfc", "audit_symmetry", "audit_monotonicity", "audit_nfc",
    "irrelevant_cells", "logicality_tables", "run_audit", "parse_property",
]
