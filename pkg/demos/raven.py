"""
Black ravens and white chalk
============================

``e1`` is "raven", ``h1`` is "black".  The table holds ten black ravens, one
non-black raven and a hundred non-black non-ravens.
"""

from fractions import Fraction

from confirmation import E1_H1, H0_E0, ContingencyTable, MeasureKind, evaluate
from confirmation.reference_tables import raven_figures

t = ContingencyTable(10, 0, 1, 100)

# %%
# "All ravens are black" and its contrapositive "non-black things are not
# ravens" get different c* values.  Classical logic would call them equal.

print("c*(raven -> black)         ", evaluate(MeasureKind.CStar, E1_H1, t))
print("c*(non-black -> non-raven) ", evaluate(MeasureKind.CStar, H0_E0, t))

# %%
# One more black raven moves the first rule by about 0.009.  One more piece
# of white chalk moves the contrapositive by about 0.0001, and leaves the
# first rule untouched.

fig = raven_figures()
da, dd = fig["increment(da)"], fig["increment(dd)"]
print(f"one more black raven:   {float(da):.6f}")
print(f"one more white chalk:   {float(dd):.6f}")
print(f"ratio:                  {float(da / dd):.2f}")
chalk = t.shifted(dd=1)
assert evaluate(MeasureKind.CStar, E1_H1, chalk).value == Fraction(9, 10)
