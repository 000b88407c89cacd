"""Render the equal-player curves and the unequal-player heatmaps.

Uses the CSV files the ``horse`` command writes, so it doubles as a recipe
for plotting them. Needs matplotlib; writes PNGs next to the CSVs.

    python demos/05_plot_figures.py [output-dir]
"""
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from horse import cli  # noqa: E402

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
out.mkdir(parents=True, exist_ok=True)
cli.main(["curve", "--out", str(out / "curve.csv")])
cli.main(["heatmap", "--overlays", "--out", str(out / "heatmap.csv")])



def read_csv(path):
    # metadata sits in leading "# key: value" lines
    body = [line for line in path.read_text().splitlines() if not line.startswith("#")]
    return np.genfromtxt(body, delimiter=",", names=True)


curve = read_csv(out / "curve.csv")
fig, ax = plt.subplots()
ax.plot(curve["p"], curve["A_tr"], label="Traditional")
ax.plot(curve["p"], curve["B_pr"], label="Pops")
ax.set_xlabel("shot probability p")
ax.set_ylabel("P(shooter scores on the turn)")
ax.legend()
fig.savefig(out / "curve.png", dpi=120)

heat = read_csv(out / "heatmap.csv")
n = int(round(np.sqrt(len(heat))))
p = heat["p1"][::n]
lines = {
    "p2=p1+0.2": lambda x: x + 0.2,
    "p2=p1/0.8": lambda x: x / 0.8,
    "p2=p1": lambda x: x,
    "p2=p1/1.1": lambda x: x / 1.1,
    "p2=p1-0.2": lambda x: x - 0.2,
}
fig, axes = plt.subplots(1, 2, figsize=(11, 5), sharey=True)
for ax, col, title in zip(axes, ["A_tr", "B_pr"], ["Traditional", "Pops"]):
    z = heat[col].reshape(n, n).T  # rows: p2, columns: p1
    im = ax.imshow(z, origin="lower", extent=(0, 1, 0, 1), vmin=0, vmax=1, cmap="viridis")
    for label, f in lines.items():
        ys = f(p)
        keep = (ys > 0) & (ys < 1)
        ax.plot(p[keep], ys[keep], lw=1, label=label)
    ax.set_title(title)
    ax.set_xlabel("p1")
axes[0].set_ylabel("p2")
axes[1].legend(loc="upper left", fontsize=7)
fig.colorbar(im, ax=axes, shrink=0.8)
fig.savefig(out / "heatmap.png", dpi=120)
print("wrote", *sorted(str(x) for x in out.glob("*.png")))
