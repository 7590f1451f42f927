"""
Predicting from a confirmation value
====================================

b* describes a test independently of the population it is used on.  Given
a prior, it turns back into a posterior.  c* already carries the population
and predicts without one.
"""

from fractions import Fraction

from confirmation import bayes_posterior, predict_from_b_star, predict_from_c_star
from confirmation.reference_tables import (
    PRIOR_FALSE_POSITIVE_RATE,
    PRIOR_SENSITIVITY,
    prior_b_star,
)

b = prior_b_star()
print(f"b* of the test: {float(b):.4f}")

# %%
# The same test in three populations.  The posterior from b* is Bayes'
# theorem in disguise, so the two columns agree exactly.

for text in ("0.0001", "0.002", "0.1"):
    prior = Fraction(text)
    from_b = predict_from_b_star(b, prior).posterior_h1
    bayes = bayes_posterior(PRIOR_SENSITIVITY, PRIOR_FALSE_POSITIVE_RATE, prior)
    print(f"P(h1)={text:<7} from b*: {float(from_b):.4f}   Bayes: {float(bayes):.4f}")

# %%
# c* = 0 means even odds; c* = 0.9 means ten to one.

for c in (0, 0.5, 0.9, -0.722):
    print(f"c*={c:<7} P(h1|e1)={float(predict_from_c_star(c).posterior_h1):.4f}")
