"""
The shared state seen by an accelerated observer
================================================

Alice stays inertial, Rob accelerates. Rob's mode splits into two Rindler
regions and the region he cannot reach gets traced out.
"""

import math

import numpy as np

from unruh_esd import concurrence, r_from_acceleration, shared_state, three_mode_state

np.set_printoptions(precision=4, suppress=True)

# The acceleration enters only through r, with cos r = (exp(-2 pi omega c / a) + 1)^(-1/2).
# Units with omega = c = 1.
for a in (0.1, 1.0, 10.0, 1e6):
    print(f"a = {a:>9g}  ->  r = {r_from_acceleration(1.0, a, 1.0):.6f}")
print("the infinite acceleration limit is r = pi/4 =", math.pi / 4)

# Three-mode pure state over (Alice, Rob in region I, region II).
psi = three_mode_state(math.pi / 6)
print("\nnonzero amplitudes at r = pi/6:")
for idx in np.flatnonzero(psi):
    print(f"  |{idx:03b}>  {psi[idx].real:.4f}")

# After tracing out region II only the anti-diagonal corners stay coherent.
rho = shared_state(math.pi / 6)
print("\nshared state at r = pi/6:\n", rho.real)

# The entanglement left over is exactly cos r.
for r in np.linspace(0, math.pi / 4, 5):
    print(f"r = {r:.4f}   C = {concurrence(shared_state(r)):.6f}   cos r = {math.cos(r):.6f}")
