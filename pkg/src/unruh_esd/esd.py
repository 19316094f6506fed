"""Locate entanglement sudden death along a one-parameter sweep."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .scenarios import ScenarioConfig, concurrence_of

#: concurrence at or below this counts as zero
ZERO_TOL = 1e-12
DEFAULT_GRID = 256
DEFAULT_TOL = 1e-9


class EsdStatus(enum.Enum):
    FOUND = "found"
    NO_DEATH = "no_death"
    ALWAYS_ZERO = "always_zero"


@dataclass(frozen=True)
class EsdResult:
    status: EsdStatus
    threshold: float | None
    bracket: tuple[float, float]

    @property
    def effective_threshold(self) -> float:
        """Threshold with no death mapped to 1 (concurrence only vanishes at full decoherence)."""
        if self.status is EsdStatus.FOUND:
            return self.threshold
        return 0.0 if self.status is EsdStatus.ALWAYS_ZERO else 1.0


def find_esd(cfg: ScenarioConfig, var: str, grid: int = DEFAULT_GRID,
             tol: float = DEFAULT_TOL) -> EsdResult:
    """First value of ``var`` in [0, 1) at which the concurrence reaches zero.

    The interval ``[0, 1 - tol]`` is scanned on ``grid`` points; the first
    bracket that crosses into the dead region is bisected down to width
    ``tol``. The reported threshold is the dead end of that bracket. Revivals
    after the first death are not searched for.
    """
    if var not in ("p1", "p2", "p3"):
        raise ValueError(f"sweep variable must be p1, p2 or p3, got {var!r}")
    if grid < 16:
        raise ValueError("grid must have at least 16 points")
    if not 0 < tol <= 1e-6:
        raise ValueError("tol must lie in (0, 1e-6]")

    def dead(x: float) -> bool:
        return concurrence_of(cfg.with_value(var, float(x))) <= ZERO_TOL

    xs = np.linspace(0.0, 1.0 - tol, grid)
    if dead(xs[0]):
        return EsdResult(EsdStatus.ALWAYS_ZERO, None, (0.0, 0.0))
    for lo, hi in zip(xs[:-1], xs[1:]):
        if dead(hi):
            break
    else:
        return EsdResult(EsdStatus.NO_DEATH, None, (float(xs[-1]), 1.0))
    lo, hi = float(lo), float(hi)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if dead(mid):
            hi = mid
        else:
            lo = mid
    return EsdResult(EsdStatus.FOUND, hi, (lo, hi))
