"""
Three noise channels and how they are lifted to two qubits
===========================================================
"""

import numpy as np

from unruh_esd import (ChannelKind, Placement, apply, lift_collective, lift_local, make_channel,
                       shared_state)

np.set_printoptions(precision=3, suppress=True)
bell = shared_state(0.0)

for kind in ChannelKind:
    ch = make_channel(kind, 0.3)
    local = lift_local(ch, Placement.ROB_LOCAL)
    coll = lift_collective(ch)
    print(f"{kind.name}: {len(ch)} single qubit operators, {len(coll)} collective ones,"
          f" completeness defect {coll.completeness_defect():.1e}")

    # Rob's local noise on a Bell pair; damping moves weight, dephasing only eats coherence.
    out = apply(local, bell)
    print("  Rob-local on a Bell pair:\n", out.real)

# Collective depolarizing uses all sixteen ordered products E_q (x) E_q'.
dep = lift_collective(make_channel(ChannelKind.DEPOLARIZING, 0.5))
print("\ncollective depolarizing, p = 0.5, diagonal:", apply(dep, bell).diagonal().real)
