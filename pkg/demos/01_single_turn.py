"""How likely is the shooter to score on a single turn?

Walks through the three scenarios of a Horse turn, the scoring probability
under Traditional rules (A) and Pops rules (B), and how they compare.
Run with ``python demos/01_single_turn.py``.
"""
import numpy as np

from horse import RuleSet, scenario_probs, score_prob, score_prob_equal

TR, PR = RuleSet.TRADITIONAL, RuleSet.POPS

# %% Scenario split for one shot
# S1: shooter misses. S2: shooter makes, opponent misses (a point). S3: both make.
for p1, p2 in [(0.5, 0.5), (0.9, 0.1), (0.6, 0.4)]:
    s = scenario_probs(p1, p2)
    print(f"p1={p1:.1f} p2={p2:.1f}  S1={s.s1:.3f}  S2={s.s2:.3f}  S3={s.s3:.3f}")

# %% Equal players: A(p) = p/(1+p) keeps rising, B(p) = p(1-p) peaks at 1/2
print("\n   p     A(p)    B(p)")
for p in np.arange(0.1, 1.0, 0.1):
    print(f"{p:5.2f}  {score_prob_equal(TR, p):.4f}  {score_prob_equal(PR, p):.4f}")

# Near-certain shots push A towards one half but never reach it.
for eps in (1e-2, 1e-4, 1e-8):
    print(f"A(1 - {eps:g}) = {score_prob_equal(TR, 1 - eps):.10f}")

# %% Unequal players
a = score_prob(TR, 0.6, 0.4)
b = score_prob(PR, 0.6, 0.4)
print(f"\np1=0.6, p2=0.4:  A = {a:.6f} (= 9/19 = {9 / 19:.6f}),  B = {b:.6f}")

# The Traditional value is the fixed point of A = P(S2) + P(S3) * A.
s = scenario_probs(0.6, 0.4)
print(f"recurrence residual: {a - (s.s2 + s.s3 * a):.2e}")

# %% A is never below B
grid = np.linspace(0.01, 0.99, 99)
gap = min(score_prob(TR, x, y) - score_prob(PR, x, y) for x in grid for y in grid)
print(f"smallest A - B over a 99x99 grid: {gap:.3e}")
