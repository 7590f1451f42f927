"""Confirmation measures over 2x2 evidence tables.

Counts ``a, b, c, d`` are the examples (e1, h1), (e0, h1), (e1, h0) and
(e0, h0).  Every measure can be evaluated on any of the eight directed rules
between an evidence event and a hypothesis event:

>>> from confirmation import ContingencyTable, E1_H1, MeasureKind, evaluate
>>> t = ContingencyTable(20, 180, 8, 792)
>>> evaluate(MeasureKind.BStar, E1_H1, t).value
Fraction(9, 10)
"""

from .classic_measures import (
    CLASSIC_KINDS,
    NORMALIZING_KINDS,
    STAR_KINDS,
    MeasureKind,
    eval_classic,
    eval_F_directed,
    f_from_lr,
)
from .classifier import (
    ClassifierRun,
    Criterion,
    DiscretizedDataset,
    induced_table,
    info_amounts,
    iterate,
    mutual_information,
    read_dataset_csv,
    reclassify,
)
from .contingency import (
    ALL_RULES,
    E0,
    E0_H0,
    E0_H1,
    E1,
    E1_H0,
    E1_H1,
    H0,
    H0_E0,
    H1,
    H1_E1,
    ContingencyTable,
    EventRole,
    Rule,
    TablePermutation,
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
from .errors import (
    ConfirmationError,
    Degenerate,
    EmptyTable,
    NegativeCount,
    OutOfRange,
    UndefinedError,
    ZeroLogicalProbability,
    ZeroMarginal,
)
from .prediction import (
    MedicalIndexPanel,
    PredictionResult,
    bayes_posterior,
    medical_indexes,
    predict_from_b_star,
    predict_from_c_f_star,
    predict_from_c_star,
)
from .properties import AuditReport, SymmetryKind, run_audit
from .semantic_info import (
    Hypothesis,
    Predicate,
    SampleCounts,
    TruthAssignment,
    average_semantic_information,
    semantic_bayes,
    semantic_information,
)
from .star_measures import (
    b_star,
    c_f_star,
    c_star,
    confirmation_increment,
    evaluate,
    optimize_truth_assignment,
)
from .values import ConfirmationValue, Tag

__version__ = "0.1.0"
