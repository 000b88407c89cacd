"""Win probability for a whole game of H-O-R-S-E.

Full games are not part of the single-turn analysis; these numbers come from
an absorbing Markov chain built on the same turn rules, checked against
shot-by-shot simulation. A player who scores keeps shooting under both rule
sets; Pops rules also pass the turn when both players make the shot.
"""
from horse import GameConfig, RuleSet, game_win_prob_exact, game_win_prob_mc

for rules in RuleSet:
    print(rules.name)
    for p1, p2 in [(0.5, 0.5), (0.6, 0.5), (0.8, 0.6)]:
        cfg = GameConfig.from_skills(rules, p1, p2)
        exact = game_win_prob_exact(cfg)
        est, se = game_win_prob_mc(cfg, 100_000, seed=4)
        print(f"  p1={p1} p2={p2}: exact {exact:.4f}   simulated {est:.4f} +/- {se:.4f}")

# %% Going first matters, and swapping the players' labels mirrors the result
cfg = GameConfig(RuleSet.POPS, (0.55, 0.5), (0.5, 0.55), letters_to_lose=5)
w = game_win_prob_exact(cfg)
print(f"\nOne shoots first: {w:.6f};  labels swapped: {game_win_prob_exact(cfg.swapped()):.6f}")

# %% Shorter games are noisier
for letters in (1, 3, 5, 9):
    cfg = GameConfig.from_skills(RuleSet.TRADITIONAL, 0.6, 0.5, letters_to_lose=letters)
    print(f"letters to lose {letters}: P(One wins) = {game_win_prob_exact(cfg):.4f}")
