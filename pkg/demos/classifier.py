"""
Relabelling bins to maximise mutual information
===============================================

A feature is binned; each bin gets the label e1 or e0.  Each step scores
the bins with the information values of the current partition and relabels.
"""

from pathlib import Path

from confirmation import Criterion, iterate, read_dataset_csv

DATA = Path(__file__).resolve().parent / "data"

# %%
# Separable classes settle at once.  Overlapping ones take a step or two,
# and the starting rule matters: the posterior start stops one bin short of
# the best split.

for name in ("separable", "overlap", "identical"):
    ds = read_dataset_csv(DATA / f"{name}.csv")
    for criterion in Criterion:
        run = iterate(ds, scale=10**12, criterion=criterion)
        labels = "".join(str(x) for x in run.partition)
        print(f"{name:<10} {criterion.value:<10} {labels:<12} "
              f"iterations={run.iterations} MI={run.trace[-1]:.6f}")
