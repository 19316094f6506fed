import math

import numpy as np
import pytest

from unruh_esd import closedform as cf
from unruh_esd.entanglement import concurrence, spin_flip
from unruh_esd.qmat import eigenvalues4
from unruh_esd.rindler import shared_state
from unruh_esd.scenarios import Scenario

SLOTS = cf.ELEMENT_SLOTS


def pipeline_spectrum(rho):
    return np.sort(eigenvalues4(rho @ spin_flip(rho)).real)[::-1]


def closed_form_concurrence(lams):
    s = np.sort(np.sqrt(np.clip(lams, 0, None)))[::-1]
    return max(0.0, s[0] - s[1] - s[2] - s[3])


def test_elements_without_noise_match_shared_state():
    for r in np.linspace(0, math.pi / 4, 13):
        rho = shared_state(r)
        vals = cf.density_elements_s1(r, 0, 0, 0)
        assert max(abs(v - rho[i, j]) for v, (i, j) in zip(vals, SLOTS)) <= 1e-14


@pytest.mark.parametrize("p1", [0.0, 0.25, 0.8, 1.0])
def test_elements_at_rest_with_amplitude_damping(p1):
    _, _, _, rho33, _, rho44 = cf.density_elements_s1(0, p1, 0, 0)
    assert rho33 == pytest.approx(p1 / 2, abs=1e-15)
    assert rho44 == pytest.approx((1 - p1) / 2, abs=1e-15)


def test_elements_match_pipeline_at_reference_point():
    pt = (0.4, 0.3, 0.5, 0.2)
    rho = cf.pipeline_state(Scenario.S1, *pt)
    vals = cf.density_elements_s1(*pt)
    assert max(abs(v - rho[i, j]) for v, (i, j) in zip(vals, SLOTS)) <= 1e-12


def test_transcribed_rho41_is_not_hermitian_partner():
    r, p1, p2, p3 = 0.4, 0.3, 0.5, 0.2
    rho = cf.pipeline_state(Scenario.S1, r, p1, p2, p3)
    transcribed = (3 - 4 * p3) ** 2 * math.sqrt((1 - p1) * (1 - p2)) * math.cos(2 * r) / 18
    assert abs(rho[3, 0] - transcribed) > 1e-2
    assert rho[3, 0] == pytest.approx(cf.density_elements_s1(r, p1, p2, p3)[4], abs=1e-15)


@pytest.mark.parametrize("fn", [cf.eigenvalues_s1, cf.eigenvalues_s3])
def test_noiseless_spectrum(fn):
    for r in np.linspace(0, math.pi / 4, 9):
        lams = sorted(fn(r, 0, 0, 0), reverse=True)
        assert lams == pytest.approx([math.cos(r) ** 2, 0, 0, 0], abs=1e-14)
        # rounding residue of ~1e-17 in the vanishing eigenvalues is amplified by sqrt
        assert closed_form_concurrence(lams) == pytest.approx(math.cos(r), abs=1e-7)
    assert sorted(fn(0, 0, 0, 0), reverse=True) == pytest.approx([1, 0, 0, 0], abs=1e-15)


@pytest.mark.parametrize("fn,scenario,pt", [
    (cf.eigenvalues_s1, Scenario.S1, (0.4, 0.3, 0.5, 0.2)),
    (cf.eigenvalues_s3, Scenario.S3, (0.3, 0.1, 0.2, 0.2)),
])
def test_spectrum_matches_pipeline(fn, scenario, pt):
    ref = pipeline_spectrum(cf.pipeline_state(scenario, *pt))
    assert np.sort(fn(*pt))[::-1] == pytest.approx(ref, abs=1e-9)


def test_calibration_recovers_frozen_subscripts():
    cal = {c.formula: c for c in cf.calibrate(n=60, seed=1)}
    assert cal["s1_eigenvalues"].chosen == cf.S1_BARE_P
    assert cal["s3_eigenvalues"].chosen == cf.S3_BARE_P
    for c in cal.values():
        assert c.residuals[c.chosen] <= 1e-12
        assert c.margin > 1e-4


def test_wrong_subscript_can_give_negative_radicand():
    pts = cf.random_points(50, 2)
    failures = 0
    for pt in pts:
        try:
            cf.eigenvalues_s1(*pt, bare_p="p1")
        except cf.ClosedFormError:
            failures += 1
    assert failures > 0


@pytest.mark.parametrize("fn,scenario", [(cf.eigenvalues_s1, Scenario.S1),
                                         (cf.eigenvalues_s3, Scenario.S3)])
def test_spectrum_sum_is_trace(fn, scenario):
    for pt in cf.random_points(1000, 3):
        rho = cf.pipeline_state(scenario, *pt)
        assert abs(sum(fn(*pt)) - np.trace(rho @ spin_flip(rho)).real) <= 1e-9


@pytest.mark.parametrize("fn,scenario", [(cf.eigenvalues_s1, Scenario.S1),
                                         (cf.eigenvalues_s3, Scenario.S3)])
def test_closed_form_concurrence_matches_pipeline(fn, scenario):
    for pt in cf.random_points(300, 4):
        rho = cf.pipeline_state(scenario, *pt)
        assert closed_form_concurrence(fn(*pt)) == pytest.approx(concurrence(rho), abs=1e-9)


def test_validation_grid_reports():
    reports = cf.validation_grid(20, seed=5)
    assert len(reports) == 60
    assert {r.formula for r in reports} == set(cf.FORMULAS)
    for rep in reports[:3]:
        assert rep.point[1:] == (0.0, 0.0, 0.0)
        assert rep.max_abs_deviation <= 1e-12
    for rep in reports:
        assert rep.validated and rep.corrected
    fixes = {c for rep in reports for c in rep.corrected}
    assert cf.RHO41_FIX in fixes
    assert sum("read as p3" in c for c in fixes) == 3


def test_validation_grid_needs_points():
    with pytest.raises(ValueError):
        cf.validation_grid(0)
