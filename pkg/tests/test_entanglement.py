import itertools
import math

import numpy as np
import pytest

from unruh_esd.entanglement import (check_density, concurrence, concurrence_xstate, spin_flip,
                                    spin_flip_spectrum)
from unruh_esd.errors import PreconditionError
from unruh_esd.qmat import eigenvalues4
from unruh_esd.rindler import shared_state
from unruh_esd.scenarios import Coupling, Scenario, ScenarioConfig, evolve

import oracles


def bell():
    return shared_state(0.0)


def random_density(rng):
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = g @ g.conj().T
    return rho / np.trace(rho)


def test_spin_flip_examples():
    assert np.max(np.abs(spin_flip(bell()) - bell())) <= 1e-15
    assert np.array_equal(spin_flip(np.diag([0.1, 0.2, 0.3, 0.4])), np.diag([0.4, 0.3, 0.2, 0.1]))
    flipped = spin_flip(shared_state(math.pi / 6))
    assert np.allclose(flipped.diagonal(), [0.5, 0, 1 / 8, 3 / 8], atol=1e-15)
    assert flipped[0, 3] == pytest.approx(math.sqrt(3) / 4, abs=1e-15)
    assert flipped[3, 0] == pytest.approx(math.sqrt(3) / 4, abs=1e-15)


def test_spin_flip_involution_on_real_states():
    rng = np.random.default_rng(0)
    for _ in range(20):
        rho = random_density(rng).real
        rho /= np.trace(rho)
        assert np.max(np.abs(spin_flip(spin_flip(rho)) - rho)) <= 1e-13


def test_concurrence_examples():
    assert concurrence(bell()) == pytest.approx(1, abs=1e-15)
    assert concurrence(np.eye(4) / 4) == 0
    for r in (0, math.pi / 8, math.pi / 6, math.pi / 4):
        assert concurrence(shared_state(r)) == pytest.approx(math.cos(r), abs=1e-12)


def test_xstate_examples():
    assert concurrence_xstate(bell()) == pytest.approx(1, abs=1e-15)
    assert concurrence_xstate(np.eye(4) / 4) == 0
    for r in np.linspace(0, math.pi / 4, 9):
        assert concurrence_xstate(shared_state(r)) == pytest.approx(math.cos(r), abs=1e-15)


def test_xstate_rejects_general_state():
    with pytest.raises(PreconditionError):
        concurrence_xstate(random_density(np.random.default_rng(1)))


def test_concurrence_rejects_invalid_density():
    with pytest.raises(PreconditionError):
        concurrence(np.eye(4) / 2)
    with pytest.raises(PreconditionError):
        concurrence(np.diag([1.2, -0.2, 0, 0]))
    m = np.eye(4) / 4
    m[0, 1] = 0.1
    with pytest.raises(PreconditionError):
        concurrence(m)


def test_complex_states_against_mp_oracle():
    # general (non X, complex) states go through the rho*rho_tilde spectrum
    rng = np.random.default_rng(3)
    for _ in range(20):
        rho = random_density(rng)
        assert concurrence(rho) == pytest.approx(oracles.mp_concurrence(rho.tolist()), abs=1e-9)


def test_werner_state_threshold():
    # F|Bell><Bell| + (1-F)(I - |Bell><Bell|)/3 has C = max(0, 2F - 1)
    for f in np.linspace(0, 1, 11):
        rho = f * bell() + (1 - f) * (np.eye(4) - bell()) / 3
        assert concurrence(rho) == pytest.approx(max(0, 2 * f - 1), abs=1e-12)


@pytest.mark.parametrize("scenario,coupling", list(itertools.product(Scenario, Coupling)))
def test_two_routes_agree_on_scenario_states(scenario, coupling):
    rng = np.random.default_rng(hash((scenario.value, coupling.value)) % 2**32)
    for _ in range(100):
        cfg = ScenarioConfig(scenario, coupling, rng.uniform(0, math.pi / 4), *rng.uniform(0, 1, 3))
        rho = evolve(cfg)
        c = concurrence(rho)
        assert 0 <= c <= 1
        assert c == pytest.approx(concurrence_xstate(rho), abs=1e-10)


def test_spectrum_is_real_nonnegative():
    rng = np.random.default_rng(6)
    for scenario in Scenario:
        for _ in range(30):
            rho = evolve(ScenarioConfig(scenario, Coupling.GLOBAL, rng.uniform(0, math.pi / 4),
                                        *rng.uniform(0, 1, 3)))
            raw = eigenvalues4(rho @ spin_flip(rho))
            assert np.all(np.abs(raw.imag) <= 1e-10)
            assert np.all(raw.real >= -1e-10)
            lam = spin_flip_spectrum(rho)
            assert np.all(np.diff(lam) <= 0)
            assert np.max(np.abs(np.sort(lam) - np.sort(raw.real))) <= 1e-12


def test_concurrence_decreases_with_r():
    cs = [concurrence(shared_state(r)) for r in np.linspace(0, math.pi / 4, 100)]
    assert all(b < a for a, b in zip(cs, cs[1:]))


def test_check_density_accepts_valid_state():
    rho = random_density(np.random.default_rng(8))
    assert check_density(rho) is not None
