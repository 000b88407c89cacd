"""Checking the closed forms by playing turns shot by shot.

Each simulated turn draws make/miss events for both players and follows the
turn rules directly; the scoring frequency should sit within a few standard
errors of the formula.
"""
import math

from horse import RuleSet, score_prob, turn_score_estimate
from horse.simulate import make_rng, simulate_turns

n = 1_000_000
print(" rules   p1   p2   closed    estimate       z")
for rules in RuleSet:
    for p1, p2 in [(0.5, 0.5), (0.6, 0.4), (0.9, 0.9), (0.2, 0.7)]:
        exact = score_prob(rules, p1, p2)
        est, _ = turn_score_estimate(rules, p1, p2, n, seed=2022)
        z = (est - exact) / math.sqrt(exact * (1 - exact) / n)
        print(f"{rules.value:>6} {p1:4.1f} {p2:4.1f}  {exact:.6f}  {est:.6f}  {z:+6.2f}")

# %% Turn length under Traditional rules with equal players
p = 0.8
_, shots = simulate_turns(RuleSet.TRADITIONAL, p, p, n, make_rng(1))
print(f"\nmean shooter attempts at p={p}: {shots.mean():.4f}  (1/(1-p^2) = {1 / (1 - p * p):.4f})")
