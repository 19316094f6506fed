"""Entanglement of an accelerated Dirac-field Bell pair under Kraus noise."""

__version__ = "0.1.0"

from .channels import (ChannelKind, KrausChannel, Placement, apply, apply_global,
                       lift_collective, lift_local, make_channel)
from .entanglement import (concurrence, concurrence_xstate, spin_flip, spin_flip_spectrum)
from .esd import EsdResult, EsdStatus, find_esd
from .rindler import r_from_acceleration, shared_state, three_mode_state
from .scenarios import (FIGURES, Coupling, Scenario, ScenarioConfig, SweepRecord, concurrence_of,
                        evolve, figure_data)

__all__ = [
    "ChannelKind", "KrausChannel", "Placement", "apply", "apply_global", "lift_collective",
    "lift_local", "make_channel", "concurrence", "concurrence_xstate", "spin_flip",
    "spin_flip_spectrum", "EsdResult", "EsdStatus", "find_esd", "r_from_acceleration",
    "shared_state", "three_mode_state", "FIGURES", "Coupling", "Scenario", "ScenarioConfig", "SweepRecord",
    "concurrence_of", "evolve", "figure_data",
]
