"""Binary classification by iterated maximum semantic information.

The feature space is a sequence of bins.  A partition labels every bin e1
or e0 (stored as 1/0).  One iteration:

1. build the expected 2x2 table the partition induces on the data,
2. compute the information amounts I(h_i; e_j) of that table,
3. relabel every bin with the e_j maximising
   ``P(h0|x) I(h0; e_j) + P(h1|x) I(h1; e_j)``.

The loop stops when the partition repeats.  Each relabelling cannot lower
the mutual information of the induced table, but convergence to the global
optimum is not guaranteed in general.
"""

from __future__ import annotations

import csv
import enum
import math
import os
from dataclasses import dataclass, field

import numpy as np

from .contingency import E0, E1, H0, H1, ContingencyTable, joint, prior
from .errors import Degenerate, OutOfRange

SUM_TOLERANCE = 1e-9
FILE_SUM_TOLERANCE = 1e-6


class Criterion(enum.Enum):
    MAX_POSTERIOR = "posterior"
    MAX_LIKELIHOOD = "likelihood"


@dataclass(frozen=True)
class DiscretizedDataset:
    bins: tuple
    p_x_given_h1: np.ndarray
    p_x_given_h0: np.ndarray
    prior_h1: float

    def __post_init__(self) -> None:
        p1 = np.asarray(self.p_x_given_h1, dtype=float)
        p0 = np.asarray(self.p_x_given_h0, dtype=float)
        object.__setattr__(self, "bins", tuple(self.bins))
        object.__setattr__(self, "p_x_given_h1", p1)
        object.__setattr__(self, "p_x_given_h0", p0)
        if len(self.bins) < 2:
            raise ValueError("a dataset needs at least 2 bins")
        if p1.shape != (len(self.bins),) or p0.shape != (len(self.bins),):
            raise ValueError("probability vectors must have one entry per bin")
        for name, p in (("p_x_given_h1", p1), ("p_x_given_h0", p0)):
            if np.any(p < 0) or not np.all(np.isfinite(p)):
                raise ValueError(f"{name} has negative or non-finite entries")
            if abs(p.sum() - 1) > SUM_TOLERANCE:
                raise ValueError(f"{name} sums to {p.sum()!r}, not 1")
        if not 0 < self.prior_h1 < 1:
            raise OutOfRange(f"prior_h1 = {self.prior_h1} must lie in (0, 1)")

    @property
    def posterior_h1(self) -> np.ndarray:
        """P(h1|x) per bin; bins with no mass get NaN."""
        w1 = self.prior_h1 * self.p_x_given_h1
        w0 = (1 - self.prior_h1) * self.p_x_given_h0
        total = w1 + w0
        with np.errstate(invalid="ignore", divide="ignore"):
            return np.where(total > 0, w1 / np.where(total > 0, total, 1), np.nan)


def read_dataset_csv(path: str | os.PathLike) -> DiscretizedDataset:
    """Read ``bin,p_x_given_h1,p_x_given_h0`` rows plus a ``# prior_h1=`` line.

    Vectors within 1e-6 of summing to 1 are renormalised.
    """
    prior_h1 = None
    rows = []
    with open(path, newline="") as fh:
        lines = []
        for raw in fh:
            stripped = raw.strip()
            if stripped.startswith("#"):
                key, _, value = stripped.lstrip("#").partition("=")
                if key.strip() == "prior_h1":
                    prior_h1 = float(value)
                continue
            if stripped:
                lines.append(raw)
    reader = csv.reader(lines)
    header = next(reader, None)
    if header is None or [h.strip() for h in header] != ["bin", "p_x_given_h1", "p_x_given_h0"]:
        raise ValueError(f"{path}: expected header 'bin,p_x_given_h1,p_x_given_h0'")
    for row in reader:
        if len(row) != 3:
            raise ValueError(f"{path}: malformed row {row!r}")
        rows.append((row[0].strip(), float(row[1]), float(row[2])))
    if prior_h1 is None:
        raise ValueError(f"{path}: missing '# prior_h1=<value>' line")
    if not rows:
        raise ValueError(f"{path}: no bins")
    bins = tuple(r[0] for r in rows)
    p1 = np.array([r[1] for r in rows])
    p0 = np.array([r[2] for r in rows])
    for name, p in (("p_x_given_h1", p1), ("p_x_given_h0", p0)):
        if abs(p.sum() - 1) > FILE_SUM_TOLERANCE:
            raise ValueError(f"{path}: {name} sums to {p.sum()!r}")
    return DiscretizedDataset(bins, p1 / p1.sum(), p0 / p0.sum(), prior_h1)


def initial_partition(
    ds: DiscretizedDataset, criterion: Criterion = Criterion.MAX_POSTERIOR
) -> np.ndarray:
    """Label e1 where P(h1|x) >= P(h0|x) (or P(x|h1) >= P(x|h0))."""
    if criterion is Criterion.MAX_POSTERIOR:
        w1 = ds.prior_h1 * ds.p_x_given_h1
        w0 = (1 - ds.prior_h1) * ds.p_x_given_h0
    else:
        w1, w0 = ds.p_x_given_h1, ds.p_x_given_h0
    return (w1 >= w0).astype(int)


def _largest_remainder(expected: np.ndarray, total: int) -> list[int]:
    floors = np.floor(expected).astype(np.int64)
    counts = [int(x) for x in floors]
    fractional = expected - floors
    remainder = total - sum(counts)
    # stable sorts so ties go to the earlier cell
    if remainder >= 0:
        for k in np.argsort(-fractional, kind="stable")[:remainder]:
            counts[k] += 1
    else:
        # float overshoot: take units back from the smallest remainders
        for k in np.argsort(fractional, kind="stable"):
            if remainder == 0:
                break
            if counts[k] > 0:
                counts[k] -= 1
                remainder += 1
    return counts


def induced_table(ds: DiscretizedDataset, partition, scale: int) -> ContingencyTable:
    """Expected counts of the four (e, h) cells for ``scale`` examples."""
    if scale <= 0:
        raise OutOfRange("scale must be positive")
    labels = np.asarray(partition, dtype=bool)
    # sum each side separately so an unused label gets exactly zero mass
    expected = np.array(
        [
            ds.prior_h1 * ds.p_x_given_h1[labels].sum(),
            ds.prior_h1 * ds.p_x_given_h1[~labels].sum(),
            (1 - ds.prior_h1) * ds.p_x_given_h0[labels].sum(),
            (1 - ds.prior_h1) * ds.p_x_given_h0[~labels].sum(),
        ]
    )
    expected = np.clip(expected, 0, None) * scale
    a, b, c, d = _largest_remainder(expected, scale)
    return ContingencyTable(a, b, c, d)


def _log(x, base: float) -> float:
    return math.log2(x) if base == 2 else math.log(x) / math.log(base)


def info_amounts(t: ContingencyTable, log_base: float = 2) -> np.ndarray:
    """I[i, j] = log P(h_i, e_j) / (P(h_i) P(e_j)).

    Rows index h (0, 1), columns index e (0, 1).  An empty cell with non-empty
    marginals gives -inf; an empty marginal gives NaN.
    """
    out = np.empty((2, 2))
    for i, h in enumerate((H0, H1)):
        for j, e in enumerate((E0, E1)):
            denom = prior(t, h) * prior(t, e)
            if denom == 0:
                out[i, j] = math.nan
            elif joint(t, e, h) == 0:
                out[i, j] = -math.inf
            else:
                out[i, j] = _log(joint(t, e, h) / denom, log_base)
    return out


def mutual_information(t: ContingencyTable, log_base: float = 2) -> float:
    """Shannon mutual information I(H; E) of a table."""
    total = 0.0
    for h in (H0, H1):
        for e in (E0, E1):
            p = joint(t, e, h)
            if p:
                total += float(p) * _log(p / (prior(t, h) * prior(t, e)), log_base)
    return total


def _scores(posterior_h1: np.ndarray, column: np.ndarray) -> np.ndarray:
    # sum_i P(h_i|x) I[i, j] with 0 * (-inf) = 0
    if np.isnan(column).any():
        return np.full(posterior_h1.shape, -math.inf)
    weights = np.stack([1 - posterior_h1, posterior_h1])
    with np.errstate(invalid="ignore"):
        terms = np.where(weights > 0, weights * column[:, None], 0.0)
    return terms.sum(axis=0)


def reclassify(ds: DiscretizedDataset, info: np.ndarray) -> np.ndarray:
    """Per-bin argmax of posterior-weighted information; ties go to e1.

    A column with an undefined (NaN) entry belongs to a label that was never
    used and cannot be chosen.  Bins without mass are labelled e1.
    """
    info = np.asarray(info, dtype=float)
    posterior = ds.posterior_h1
    empty = np.isnan(posterior)
    posterior = np.where(empty, 0.0, posterior)
    s0 = _scores(posterior, info[:, 0])
    s1 = _scores(posterior, info[:, 1])
    stuck = (s0 == -math.inf) & (s1 == -math.inf) & ~empty
    if stuck.any():
        raise Degenerate(
            f"no label has finite information for bins "
            f"{[ds.bins[k] for k in np.flatnonzero(stuck)]}"
        )
    return ((s1 >= s0) | empty).astype(int)


@dataclass
class ClassifierRun:
    initial: np.ndarray
    partition: np.ndarray
    trace: list[float] = field(default_factory=list)
    history: list[np.ndarray] = field(default_factory=list)
    iterations: int = 0
    converged: bool = False
    status: str = ""


def iterate(
    ds: DiscretizedDataset,
    scale: int = 10_000,
    max_iters: int = 50,
    log_base: float = 2,
    criterion: Criterion = Criterion.MAX_POSTERIOR,
) -> ClassifierRun:
    """Alternate induced table -> information amounts -> relabel.

    ``trace`` holds the mutual information of each induced table and
    ``history`` the partition it was induced by.  A
    single-label partition carries no information and is returned as its
    own fixed point.
    """
    if max_iters < 1:
        raise OutOfRange("max_iters must be at least 1")
    current = initial_partition(ds, criterion)
    run = ClassifierRun(initial=current.copy(), partition=current)
    seen = {tuple(current)}
    for step in range(1, max_iters + 1):
        t = induced_table(ds, current, scale)
        run.trace.append(mutual_information(t, log_base))
        run.history.append(current.copy())
        run.iterations = step
        if current.min() == current.max():
            run.converged, run.status = True, "single-label fixed point"
            return run
        new = reclassify(ds, info_amounts(t, log_base))
        if np.array_equal(new, current):
            run.converged, run.status = True, "converged"
            return run
        if tuple(new) in seen:
            run.partition = new
            run.status = "cycle detected"
            return run
        seen.add(tuple(new))
        current = new
        run.partition = current
    run.status = "max_iters reached"
    return run


def threshold_partitions(n_bins: int):
    """Every contiguous split: bins >= k labelled e1, and its mirror."""
    for k in range(n_bins + 1):
        upper = np.array([1 if i >= k else 0 for i in range(n_bins)])
        yield upper
        yield 1 - upper


__all__ = [
    "Criterion",
    "DiscretizedDataset",
    "ClassifierRun",
    "read_dataset_csv",
    "initial_partition",
    "induced_table",
    "info_amounts",
    "mutual_information",
    "reclassify",
    "iterate",
    "threshold_partitions",
]
