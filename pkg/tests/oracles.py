"""Independent reference implementations used by the tests.

Plain-float formulas written straight from the measure definitions, with no
table permutations, no Fractions and no shared helpers from the package.
"""

import itertools
import math


def measures_e1_h1(a, b, c, d, base=2.0):
    """All measures of the rule e1 -> h1, or None where a denominator is 0."""
    n = a + b + c + d
    log = lambda x: math.log(x) / math.log(base)  # noqa: E731
    ph1 = (a + b) / n
    pe1 = (a + c) / n
    h1_e1 = a / (a + c) if a + c else None
    h1_e0 = b / (b + d) if b + d else None
    e1_h1 = a / (a + b) if a + b else None
    e1_h0 = c / (c + d) if c + d else None
    out = dict.fromkeys(["D", "M", "R", "C", "Z", "S", "N", "L", "F", "bstar", "cstar", "cfstar"])
    out["C"] = a / n - pe1 * ph1
    if h1_e1 is not None:
        out["D"] = h1_e1 - ph1
        if h1_e1 > 0 and ph1 > 0:
            out["R"] = log(h1_e1 / ph1)
        if h1_e1 >= ph1 and ph1 < 1:
            out["Z"] = (h1_e1 - ph1) / (1 - ph1)
        elif h1_e1 < ph1:
            out["Z"] = (h1_e1 - ph1) / ph1
        if h1_e0 is not None:
            out["S"] = h1_e1 - h1_e0
    if e1_h1 is not None:
        out["M"] = e1_h1 - pe1
        if e1_h0 is not None:
            out["N"] = e1_h1 - e1_h0
            if e1_h1 > 0 and e1_h0 > 0:
                out["L"] = log(e1_h1 / e1_h0)
            if e1_h1 + e1_h0 > 0:
                out["F"] = (e1_h1 - e1_h0) / (e1_h1 + e1_h0)
                out["bstar"] = (e1_h1 - e1_h0) / max(e1_h1, e1_h0)
    if a + c:
        out["cstar"] = (a - c) / max(a, c)
        out["cfstar"] = (a - c) / (a + c)
    return out


def bayes(sensitivity, fpr, prior):
    return sensitivity * prior / (sensitivity * prior + fpr * (1 - prior))


def entropy(ps, base=2.0):
    return -sum(p * math.log(p, base) for p in ps if p > 0)


def partition_mi(p1, p0, prior, labels, base=2.0):
    """Exact mutual information of the (h, e) split a labelling induces."""
    joint = {}
    for h, dist, w in ((1, p1, prior), (0, p0, 1 - prior)):
        for e in (0, 1):
            joint[h, e] = w * math.fsum(p for p, lab in zip(dist, labels) if lab == e)
    ph = {h: joint[h, 0] + joint[h, 1] for h in (0, 1)}
    pe = {e: joint[0, e] + joint[1, e] for e in (0, 1)}
    return math.fsum(
        j * math.log(j / (ph[h] * pe[e]), base) for (h, e), j in joint.items() if j > 0
    )


def best_threshold_mi(p1, p0, prior, base=2.0):
    """Maximum MI over every split 'bins >= k get e1' and its mirror."""
    n = len(p1)
    best = 0.0
    for k in range(n + 1):
        upper = [1 if i >= k else 0 for i in range(n)]
        for labels in (upper, [1 - x for x in upper]):
            best = max(best, partition_mi(p1, p0, prior, labels, base))
    return best


def best_partition_mi(p1, p0, prior, base=2.0):
    """Maximum MI over all 2**n labellings."""
    return max(
        partition_mi(p1, p0, prior, labels, base)
        for labels in itertools.product((0, 1), repeat=len(p1))
    )


def avg_semantic_info(a, b, c, d, b1_prime, base=2.0):
    """sum_h P(h|e1) log T(e1|h)/T(e1) for truth values 1 on h1, b1' on h0."""
    n = a + b + c + d
    ph1 = (a + b) / n
    t_theta = ph1 + b1_prime * (1 - ph1)
    total = 0.0
    if a:
        total += a / (a + c) * math.log(1 / t_theta, base)
    if c:
        total += c / (a + c) * (math.log(b1_prime / t_theta, base) if b1_prime else -math.inf)
    return total
