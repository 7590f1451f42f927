"""
Measures on three tables
========================

Eleven confirmation measures evaluated on three 2x2 tables, then the same
rule scored from its other directions.  Counts are ``a, b, c, d`` for
(e1, h1), (e0, h1), (e1, h0), (e0, h0).
"""

from confirmation import ALL_RULES, ContingencyTable, MeasureKind, evaluate

# %%
# A test with ten percent sensitivity and a one percent false positive rate.
# The sample is small for h1 and large for h0.

tables = {
    "weak test, rare h1": ContingencyTable(20, 180, 8, 792),
    "no negatives": ContingencyTable(200, 0, 720, 80),
    "perfect recall": ContingencyTable(10, 0, 90, 900),
}
kinds = [MeasureKind.D, MeasureKind.M, MeasureKind.R, MeasureKind.C, MeasureKind.Z,
         MeasureKind.S, MeasureKind.N, MeasureKind.L, MeasureKind.F,
         MeasureKind.BStar, MeasureKind.CStar]



def cell(v):
    return f"{float(v.value):8.3f}" if v.is_finite else f"{v!s:>8}"


print("table".ljust(22) + "".join(k.value.rjust(8) for k in kinds))
for name, t in tables.items():
    print(name.ljust(22) + "".join(cell(evaluate(k, ALL_RULES[0], t)) for k in kinds))

# %%
# b* tracks the test (its likelihoods), c* tracks the prediction.  On the
# third table every h1 is caught, so b* is high, yet nine in ten positives are
# wrong, so c* is close to -1.

t = tables["perfect recall"]
for rule in ALL_RULES:
    print(f"{str(rule):>8}  b*={evaluate(MeasureKind.BStar, rule, t)!s:>10}"
          f"  c*={evaluate(MeasureKind.CStar, rule, t)!s:>10}")
