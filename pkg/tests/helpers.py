import numpy as np

from horse import LinearDiff, Ratio, resolve, score_prob

FD_STEP = 1e-6


def family_score(rules, case, p1):
    return score_prob(rules, *resolve(case.with_p1(p1)))


def central_difference(rules, case, p1, h=FD_STEP):
    return (family_score(rules, case, p1 + h) - family_score(rules, case, p1 - h)) / (2 * h)


def sample_d(rng, n):
    return rng.uniform(-1, 1, n)


def sample_r(rng, n, high=3.0):
    # uniform on (0, high), nudged off an exact zero
    return np.maximum(rng.uniform(0, high, n), 1e-12)


def sample_interior_p1(rng, case, margin=FD_STEP):
    """A p1 at least ``10 * margin`` inside the family's domain."""
    lo, hi = case.p1_lower + 10 * margin, case.p1_upper - 10 * margin
    return float(rng.uniform(lo, hi))


def fd_samples(rng, family, n):
    """``n`` (case, p1) pairs of one family, with room for a central difference."""
    out = []
    while len(out) < n:
        case = LinearDiff(float(rng.uniform(-1, 1))) if family is LinearDiff \
            else Ratio(float(rng.uniform(0, 3)))
        if case.p1_upper - case.p1_lower > 100 * FD_STEP:
            out.append((case, sample_interior_p1(rng, case)))
    return out
