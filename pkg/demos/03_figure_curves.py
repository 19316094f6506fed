"""
Concurrence curves for every preset
===================================

Each panel sweeps one decoherence parameter at five accelerations. The
output is written to ``figure_curves.png`` in the working directory.
"""

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from unruh_esd import FIGURES, figure_data

fig, axes = plt.subplots(3, 3, figsize=(12, 10), sharey=True)

for ax, (fid, preset) in zip(axes.flat, FIGURES.items()):
    recs = figure_data(preset, samples=101)
    var = "p1" if preset.sweep == "p" else preset.sweep
    for r in preset.r_values:
        xs = [getattr(rec, var) for rec in recs if rec.r == r]
        cs = [rec.concurrence for rec in recs if rec.r == r]
        ax.plot(xs, cs, label=f"r = {r / math.pi:.4g} pi")
    fixed = ", ".join(f"{k}={v:g}" for k, v in preset.fixed.items()) or "p1=p2=p3"
    ax.set_title(f"{fid}: {preset.scenario.value} {preset.coupling.value} ({fixed})", fontsize=9)
    ax.set_xlabel(preset.sweep)

for ax in axes[:, 0]:
    ax.set_ylabel("concurrence")
axes[0, 0].legend(fontsize=7)
fig.tight_layout()
fig.savefig("figure_curves.png", dpi=120)
print("wrote figure_curves.png")

# Where do the curves first touch zero? A cheap look before running the real search.
recs = figure_data("1a", samples=1001)
for r in FIGURES["1a"].r_values:
    row = [rec for rec in recs if rec.r == r]
    dead = next((rec.p2 for rec in row if rec.concurrence <= 1e-12), None)
    print(f"1a  r = {r:.4f}  first dead grid point: {dead}")
