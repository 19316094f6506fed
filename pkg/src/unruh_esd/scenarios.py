"""The three channel layouts and the figure sweep presets.

========  ==================  ==================  ====================
scenario  Alice (local)       Rob (local)         both (collective)
========  ==================  ==================  ====================
S1        phase damping p2    amp. damping p1     depolarizing p3
S2        amp. damping p1     phase damping p2    depolarizing p3
S3        depolarizing p3     phase damping p2    amp. damping p1
========  ==================  ==================  ====================

Multilocal coupling switches the collective channel off; global coupling
keeps all three.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .channels import (ChannelKind, KrausChannel, Placement, apply_global, lift_collective,
                       lift_local, make_channel)
from .entanglement import concurrence
from .errors import DomainError
from .rindler import check_r, shared_state

AD, PD, DEP = ChannelKind.AMPLITUDE_DAMPING, ChannelKind.PHASE_DAMPING, ChannelKind.DEPOLARIZING

#: r values used when a figure does not list its accelerations
PRESET_R_GRID = (0.0, math.pi / 16, math.pi / 8, 3 * math.pi / 16, math.pi / 4)
DEFAULT_SAMPLES = 201
SWEEP_VARS = ("p1", "p2", "p3", "p")


class Scenario(enum.Enum):
    S1 = "S1"
    S2 = "S2"
    S3 = "S3"


class Coupling(enum.Enum):
    MULTILOCAL = "multilocal"
    GLOBAL = "global"


# (alice, rob, collective) channel kinds per scenario
LAYOUT = {
    Scenario.S1: (PD, AD, DEP),
    Scenario.S2: (AD, PD, DEP),
    Scenario.S3: (DEP, PD, AD),
}
PARAM_OF = {AD: "p1", PD: "p2", DEP: "p3"}


@dataclass(frozen=True)
class ScenarioConfig:
    scenario: Scenario
    coupling: Coupling
    r: float
    p1: float = 0.0
    p2: float = 0.0
    p3: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "scenario", Scenario(self.scenario))
        object.__setattr__(self, "coupling", Coupling(self.coupling))
        check_r(self.r)
        for name in ("p1", "p2", "p3"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise DomainError(f"{name} must lie in [0, 1], got {v!r}")

    def param(self, kind: ChannelKind) -> float:
        return getattr(self, PARAM_OF[kind])

    def with_value(self, var: str, value: float) -> "ScenarioConfig":
        """Copy with one parameter replaced; ``var='p'`` sets p1 = p2 = p3."""
        if var == "p":
            return replace(self, p1=value, p2=value, p3=value)
        if var not in ("p1", "p2", "p3", "r"):
            raise ValueError(f"unknown parameter {var!r}")
        return replace(self, **{var: value})


def channels_for(cfg: ScenarioConfig) -> tuple[KrausChannel, KrausChannel, KrausChannel | None]:
    """Lifted (alice, rob, collective) channels; collective is ``None`` when multilocal."""
    a_kind, r_kind, c_kind = LAYOUT[cfg.scenario]
    alice = lift_local(make_channel(a_kind, cfg.param(a_kind)), Placement.ALICE_LOCAL)
    rob = lift_local(make_channel(r_kind, cfg.param(r_kind)), Placement.ROB_LOCAL)
    collective = None
    if cfg.coupling is Coupling.GLOBAL:
        collective = lift_collective(make_channel(c_kind, cfg.param(c_kind)))
    return alice, rob, collective


def evolve(cfg: ScenarioConfig) -> np.ndarray:
    """Shared Alice-Rob state pushed through the scenario's noise."""
    return apply_global(shared_state(cfg.r), *channels_for(cfg))


def concurrence_of(cfg: ScenarioConfig) -> float:
    return concurrence(evolve(cfg))


@dataclass(frozen=True)
class SweepRecord:
    scenario: str
    coupling: str
    r: float
    p1: float
    p2: float
    p3: float
    concurrence: float

    @classmethod
    def evaluate(cls, cfg: ScenarioConfig) -> "SweepRecord":
        return cls(cfg.scenario.value, cfg.coupling.value, cfg.r, cfg.p1, cfg.p2, cfg.p3,
                   concurrence_of(cfg))


@dataclass(frozen=True)
class FigurePreset:
    figure: str
    scenario: Scenario
    coupling: Coupling
    fixed: dict = field(hash=False)
    sweep: str
    r_values: tuple = PRESET_R_GRID

    def config(self, r: float) -> ScenarioConfig:
        return ScenarioConfig(self.scenario, self.coupling, r, **self.fixed)


def _preset(fig, scenario, coupling, sweep, **fixed):
    return FigurePreset(fig, Scenario(scenario), Coupling(coupling), fixed, sweep)


FIGURES = {
    p.figure: p for p in (
        _preset("1a", "S1", "multilocal", "p2", p1=0.5, p3=0.0),
        _preset("1b", "S1", "multilocal", "p1", p2=0.5, p3=0.0),
        _preset("2a", "S1", "global", "p3", p1=0.1, p2=0.1),
        _preset("2b", "S1", "global", "p"),
        _preset("3", "S2", "multilocal", "p1", p2=0.5, p3=0.0),
        _preset("4", "S2", "global", "p3", p1=0.1, p2=0.1),
        _preset("5a", "S3", "multilocal", "p3", p1=0.0, p2=0.2),
        _preset("5b", "S3", "multilocal", "p2", p1=0.0, p3=0.2),
        _preset("6", "S3", "global", "p1", p2=0.2, p3=0.2),
    )
}


def get_preset(figure: str) -> FigurePreset:
    try:
        return FIGURES[str(figure)]
    except KeyError:
        raise KeyError(f"unknown figure {figure!r}; valid ids: {', '.join(FIGURES)}") from None


def sweep(base: ScenarioConfig, var: str, values, r_values) -> list[SweepRecord]:
    """Evaluate ``base`` at every (r, value) pair, ordered by r then value."""
    if var not in SWEEP_VARS:
        raise ValueError(f"sweep variable must be one of {SWEEP_VARS}, got {var!r}")
    values = sorted(float(v) for v in values)
    return [SweepRecord.evaluate(base.with_value("r", r).with_value(var, v))
            for r in sorted(float(r) for r in r_values) for v in values]


def figure_data(preset: FigurePreset | str, samples: int = DEFAULT_SAMPLES,
                r_values=None) -> list[SweepRecord]:
    """Data behind one figure: ``samples`` uniform points on [0, 1] per r value."""
    if not isinstance(preset, FigurePreset):
        preset = get_preset(preset)
    if samples < 2:
        raise ValueError("need at least two samples")
    rs = preset.r_values if r_values is None else r_values
    return sweep(preset.config(rs[0]), preset.sweep, np.linspace(0.0, 1.0, samples), rs)
