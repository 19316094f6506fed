"""Alice-Rob state seen from Rob's uniformly accelerated frame.

Rob's Minkowski vacuum becomes a two-mode squeezed state over Rindler
regions I and II, ``|0> -> cos r |00> + sin r |11>``, while the excitation
maps to ``|1>_I |0>_II``. Starting from the Bell pair
``(|00> + |11>)/sqrt(2)`` and discarding region II leaves a mixed two-qubit
state for Alice and Rob.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .qmat import partial_trace_third

R_MAX = math.pi / 4
#: slack accepted above pi/4 so that decimal inputs like 0.7853981634 pass
R_SLACK = 1e-9


def check_r(r: float) -> float:
    r = float(r)
    if not (0.0 <= r <= R_MAX + R_SLACK):
        raise DomainError(f"acceleration parameter r must lie in [0, pi/4], got {r!r}")
    return r


def r_from_acceleration(omega: float, a: float, c: float) -> float:
    """Squeezing angle from ``cos r = (exp(-2 pi omega c / a) + 1)**-0.5``.

    Parameters
    ----------
    omega : float
        Mode frequency detected by Rob.
    a : float
        Rob's proper acceleration.
    c : float
        Speed of light, in units consistent with ``omega`` and ``a``.
    """
    for name, v in (("omega", omega), ("a", a), ("c", c)):
        if not (math.isfinite(v) and v > 0):
            raise DomainError(f"{name} must be positive and finite, got {v!r}")
    return math.acos((math.exp(-2 * math.pi * omega * c / a) + 1) ** -0.5)


def three_mode_state(r: float) -> np.ndarray:
    """Pure state over (Alice, region I, region II) as a length-8 vector."""
    r = check_r(r)
    psi = np.zeros(8, dtype=complex)
    psi[0b000] = math.cos(r)
    psi[0b011] = math.sin(r)
    psi[0b110] = 1.0
    return psi / math.sqrt(2)


def shared_state(r: float) -> np.ndarray:
    """Two-qubit density matrix shared by Alice and Rob after tracing out region II."""
    psi = three_mode_state(r)
    return partial_trace_third(np.outer(psi, psi.conj()))
