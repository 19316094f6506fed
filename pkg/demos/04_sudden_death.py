"""
Locating entanglement sudden death
==================================

A grid scan finds the first dead point, then bisection pins it down.
"""

import math

from unruh_esd import FIGURES, EsdStatus, ScenarioConfig, find_esd

# Rob amplitude damped at p1 = 0.5, Alice dephased: the threshold in p2 moves left with r.
base = ScenarioConfig("S1", "multilocal", 0.0, p1=0.5)
print("S1 multilocal, p1 = 0.5, sweep p2")
for r in FIGURES["1a"].r_values:
    res = find_esd(base.with_value("r", r), "p2")
    expect = 1 - 0.5 * math.tan(r) ** 2
    thr = "-" if res.threshold is None else f"{res.threshold:.9f}"
    print(f"  r = {r:.4f}  {res.status.value:<9} threshold {thr:<12} 1 - p1 tan^2 r = {expect:.9f}")

# Swap the roles and no finite threshold appears.
print("\nS2 multilocal, p2 = 0.5, sweep p1")
for r in FIGURES["3"].r_values:
    res = find_esd(ScenarioConfig("S2", "multilocal", r, p2=0.5), "p1")
    print(f"  r = {r:.4f}  {res.status.value}")

# With depolarizing noise on Alice death cannot be avoided.
print("\nS3 presets")
for fid in ("5a", "5b", "6"):
    preset = FIGURES[fid]
    hits = [find_esd(preset.config(r), preset.sweep) for r in preset.r_values]
    assert all(h.status is EsdStatus.FOUND for h in hits)
    print(f"  {fid}: thresholds in {preset.sweep}:", ", ".join(f"{h.threshold:.5f}" for h in hits))
