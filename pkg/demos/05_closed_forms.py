"""
Checking the printed closed forms against the Kraus pipeline
============================================================

Two slips are repaired before comparison: rho41 carries cos r, and the
unlabelled p in the eigenvalue formulas is read as p3. The calibration
below shows why p3 is the only reading that works.
"""

from unruh_esd import closedform as cf

for cal in cf.calibrate(n=200, seed=0):
    resid = ", ".join(f"{k}: {v:.2e}" for k, v in cal.residuals.items())
    print(f"{cal.formula}: chose {cal.chosen}  ({resid})")

reports = cf.validation_grid(1000, seed=0)
for name in cf.FORMULAS:
    mine = [rep for rep in reports if rep.formula == name]
    worst = max(rep.max_abs_deviation for rep in mine)
    ok = all(rep.validated for rep in mine)
    print(f"{name:<22} {len(mine)} points  max deviation {worst:.2e}  validated={ok}")

print("\ncorrections applied:")
for fix in sorted({c for rep in reports for c in rep.corrected}):
    print("  -", fix)
