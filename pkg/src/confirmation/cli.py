"""Command-line front end.

    confirmation measures --counts 20,180,8,792 --measures D,Z,F,bstar,cstar
    confirmation predict bstar 0.9989 --prior 0.002
    confirmation raven --counts 10,0,1,100
    confirmation audit F HS --trials 1000 --seed 7
    confirmation classify demos/data/overlap.csv
    confirmation paper-tables --format json

Exit status is 0 on success, 2 on invalid input, and 1 when ``audit`` finds
violations of a property the measure is expected to satisfy.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import reference_tables
from .classic_measures import CLASSIC_KINDS, STAR_KINDS, MeasureKind
from .classifier import Criterion, iterate, read_dataset_csv
from .contingency import (
    E1_H1,
    Rule,
    parse_counts,
    read_counts_json,
    read_examples_csv,
)
from .errors import ConfirmationError, ZeroMarginal
from .prediction import predict_from_b_star, predict_from_c_f_star, predict_from_c_star
from .properties import parse_property, run_audit
from .star_measures import evaluate
from .values import UNDEFINED, ConfirmationValue, ratio

DEFAULT_MEASURES = CLASSIC_KINDS + STAR_KINDS
GLOBAL_DEFAULTS = {"format": "tsv", "log_base": 2.0, "precision": 6, "seed": 0}


class UsageError(Exception):
    """Bad input detected after argument parsing."""


# --- rendering ---------------------------------------------------------------


def _number(x, precision: int):
    """Value for output: rounded float, exact fraction string, or a tag."""
    if isinstance(x, ConfirmationValue):
        if not x.is_finite:
            return x.tag.value
        x = x.value
    if isinstance(x, str):
        return x
    return float(format(float(x), f".{precision}g"))


def _emit(args, columns, rows, meta=None) -> None:
    meta = meta or {}
    if args.format == "json":
        doc = dict(meta)
        doc["rows"] = [dict(zip(columns, row)) for row in rows]
        print(json.dumps(doc, indent=2))
        return
    for key, value in meta.items():
        print(f"# {key}={json.dumps(value) if isinstance(value, dict) else value}")
    print("\t".join(columns))
    for row in rows:
        print("\t".join(str(v) for v in row))


# --- commands ----------------------------------------------------------------


def _load_table(args):
    sources = [s for s in (args.counts, args.counts_file, args.input) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --counts, --counts-file, --input")
    if args.counts is not None:
        return parse_counts(args.counts)
    if args.counts_file is not None:
        return read_counts_json(args.counts_file)
    return read_examples_csv(args.input, _labels(args.true_labels), _labels(args.false_labels),
                             alpha=args.alpha)


def _labels(text: str) -> set[str]:
    return {s for s in (p.strip() for p in text.split(",")) if s}


def cmd_measures(args) -> int:
    t = _load_table(args)
    rule = Rule.parse(args.rule)
    kinds = [MeasureKind.parse(m) for m in args.measures.split(",")] if args.measures \
        else list(DEFAULT_MEASURES)
    rows = []
    for kind in kinds:
        note = ""
        try:
            value = evaluate(kind, rule, t, args.log_base)
        except ZeroMarginal as exc:
            value, note = UNDEFINED, str(exc)
        if rule == E1_H1 and args.log_base == 2 and not note:
            note = reference_tables.examples_note(t, kind)
        rows.append((kind.value, str(rule), _number(value, args.precision), note))
    meta = {"table": dict(zip("abcd", t.as_tuple())), "rule": str(rule), "log_base": args.log_base}
    _emit(args, ("measure", "rule", "value", "note"), rows, meta)
    return 0


def cmd_ingest(args) -> int:
    t = read_examples_csv(args.input, _labels(args.true_labels), _labels(args.false_labels),
                          alpha=args.alpha)
    _emit(args, ("a", "b", "c", "d", "n"), [t.as_tuple() + (t.n,)])
    return 0


_PREDICTORS = {
    "bstar": lambda v, prior: predict_from_b_star(v, prior),
    "cstar": lambda v, prior: predict_from_c_star(v),
    "cfstar": lambda v, prior: predict_from_c_f_star(v),
}


def _fraction(text: str, name: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{name} must be a number, got {text!r}") from None


def cmd_predict(args) -> int:
    value = _fraction(args.value, "value")
    prior = None if args.prior is None else _fraction(args.prior, "prior")
    if args.measure == "bstar" and prior is None:
        raise UsageError("bstar predictions need --prior")
    result = _PREDICTORS[args.measure](value, prior)
    note = reference_tables.prior_note(value, prior) if args.measure == "bstar" else ""
    rows = [(args.measure, _number(value, args.precision),
             "" if prior is None else _number(prior, args.precision),
             _number(result.posterior_h1, args.precision),
             _number(result.posterior_h0, args.precision), note)]
    _emit(args, ("measure", "value", "prior_h1", "posterior_h1", "posterior_h0", "note"), rows)
    return 0


def cmd_raven(args) -> int:
    t = parse_counts(args.counts)
    fig = reference_tables.raven_figures(t.as_tuple(), args.delta_a, args.delta_d)
    inc_a, inc_d = fig["increment(da)"], fig["increment(dd)"]
    gain = ratio(inc_a, inc_d)
    rows = [
        ("c*(e1->h1)", _number(fig["c*(e1->h1)"], args.precision)),
        ("c*(h0->e0)", _number(fig["c*(h0->e0)"], args.precision)),
        (f"increment c*(e1->h1), da={args.delta_a}", _number(inc_a, args.precision)),
        (f"increment c*(h0->e0), dd={args.delta_d}", _number(inc_d, args.precision)),
        ("ratio", _number(gain, args.precision)),
    ]
    _emit(args, ("quantity", "value"), rows, {"table": dict(zip("abcd", t.as_tuple()))})
    return 0


def cmd_audit(args) -> int:
    kind = MeasureKind.parse(args.measure)
    prop = parse_property(args.property)
    if args.trials <= 0:
        raise UsageError("--trials must be positive")
    report = run_audit(kind, prop, args.trials, args.seed, args.max_cell)
    if args.format == "json":
        print(report.to_json())
    else:
        print("\t".join(report.TSV_FIELDS))
        print(report.tsv_row())
    return 1 if report.expected_pass and report.violations else 0


def cmd_classify(args) -> int:
    ds = read_dataset_csv(args.dataset)
    if args.scale <= 0 or args.max_iters <= 0:
        raise UsageError("--scale and --max-iters must be positive")
    run = iterate(ds, scale=args.scale, max_iters=args.max_iters, log_base=args.log_base,
                  criterion=Criterion(args.criterion))

    def labels(p):
        return "".join(str(int(x)) for x in p)

    rows = [(k + 1, labels(p), _number(mi, args.precision))
            for k, (p, mi) in enumerate(zip(run.history, run.trace))]
    meta = {
        "bins": len(ds.bins),
        "initial": labels(run.initial),
        "final": labels(run.partition),
        "iterations": run.iterations,
        "status": run.status,
        "final_mi": _number(run.trace[-1], args.precision),
    }
    _emit(args, ("iteration", "partition", "mutual_information"), rows, meta)
    return 0


def _cell_value(cell, precision: int):
    # exact cells stay exact so "8/3" is visible next to the printed "3"
    if isinstance(cell.computed, str) or cell.table == "increments":
        return str(cell.computed)
    return _number(cell.computed, precision)


def cmd_reference_tables(args) -> int:
    rows = [(c.table, c.row, c.column, c.printed, _cell_value(c, args.precision), c.status, c.note)
            for c in reference_tables.all_cells()]
    _emit(args, ("table", "row", "column", "printed", "computed", "status", "note"), rows)
    return 0


# --- parser --------------------------------------------------------------------


def _global_options(defaults: bool) -> argparse.ArgumentParser:
    # Defaults are only set on the top-level parser so a flag given after the
    # subcommand is not overwritten by the subparser's default.
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda k: GLOBAL_DEFAULTS[k]) if defaults else (lambda k: argparse.SUPPRESS)
    p.add_argument("--format", choices=("tsv", "json"), default=d("format"))
    p.add_argument("--log-base", type=float, default=d("log_base"),
                   help="base of the logarithms in R, L and information values")
    p.add_argument("--precision", type=int, default=d("precision"),
                   help="significant digits in printed values")
    p.add_argument("--seed", type=int, default=d("seed"))
    return p


def _table_options(p: argparse.ArgumentParser, with_counts: bool = True) -> None:
    if with_counts:
        p.add_argument("--counts", help="a,b,c,d")
        p.add_argument("--counts-file", help='JSON object {"a":..,"b":..,"c":..,"d":..}')
        p.add_argument("--input", help="CSV of labelled examples with header e,h")
    p.add_argument("--true-labels", default="1", help="comma-separated labels read as 1")
    p.add_argument("--false-labels", default="0", help="comma-separated labels read as 0")
    p.add_argument("--alpha", type=int, default=0, help="add-alpha smoothing of every cell")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="confirmation",
        description="Confirmation measures over 2x2 evidence tables.",
        parents=[_global_options(True)],
    )
    common = _global_options(False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measures", parents=[common], help="evaluate measures on one table")
    _table_options(p)
    p.add_argument("--rule", default="e1->h1")
    p.add_argument("--measures", help="comma-separated, e.g. D,Z,F,bstar,cstar (default: all)")
    p.set_defaults(func=cmd_measures)

    p = sub.add_parser("ingest", parents=[common], help="count labelled examples into a table")
    p.add_argument("--input", required=True)
    _table_options(p, with_counts=False)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("predict", parents=[common], help="posterior from a confirmation value")
    p.add_argument("measure", choices=sorted(_PREDICTORS))
    p.add_argument("value")
    p.add_argument("--prior", help="P(h1), required for bstar")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("raven", parents=[common], help="c* increments from new examples")
    p.add_argument("--counts", default="10,0,1,100")
    p.add_argument("--delta-a", type=int, default=1)
    p.add_argument("--delta-d", type=int, default=1)
    p.set_defaults(func=cmd_raven)

    p = sub.add_parser("audit", parents=[common], help="seeded property audit")
    p.add_argument("measure")
    p.add_argument("property", help="HS, ES, CS, TS, monotonicity, normalization, logicality, NFC")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-cell", type=int, default=100)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("classify", parents=[common], help="maximum-information classifier")
    p.add_argument("dataset")
    p.add_argument("--scale", type=int, default=10_000)
    p.add_argument("--max-iters", type=int, default=50)
    p.add_argument("--criterion", choices=[c.value for c in Criterion],
                   default=Criterion.MAX_POSTERIOR.value)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("paper-tables", parents=[common], help="recompute the reference tables")
    p.set_defaults(func=cmd_reference_tables)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.log_base <= 0 or args.log_base == 1:
        print("error: --log-base must be positive and not 1", file=sys.stderr)
        return 2
    if args.precision < 1:
        print("error: --precision must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, ConfirmationError, ValueError, TypeError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
