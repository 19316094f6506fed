import math

import numpy as np
import pytest

from unruh_esd.esd import ZERO_TOL, EsdStatus, find_esd
from unruh_esd.scenarios import PRESET_R_GRID, ScenarioConfig, concurrence_of

# First dead point of a 10^4-step grid scan of S1 multilocal, p1 = 0.5, sweeping p2.
GRID_SCAN_1A = {math.pi / 16: 0.9803, math.pi / 8: 0.9143, 3 * math.pi / 16: 0.7768,
                math.pi / 4: 0.5000}


def fig1a(r):
    return ScenarioConfig("S1", "multilocal", r, p1=0.5, p3=0.0)


def analytic_1a(r):
    # C = sqrt(1-p1) (sqrt(1-p2) cos r - sqrt(p1) sin r) vanishes at p2 = 1 - p1 tan^2 r
    return 1 - 0.5 * math.tan(r) ** 2


def test_s2_multilocal_never_dies():
    res = find_esd(ScenarioConfig("S2", "multilocal", math.pi / 8, p2=0.5), "p1")
    assert res.status is EsdStatus.NO_DEATH
    assert res.threshold is None


def test_s1_multilocal_dies_at_large_acceleration():
    res = find_esd(fig1a(math.pi / 4), "p2")
    assert res.status is EsdStatus.FOUND
    assert res.threshold < 1


@pytest.mark.parametrize("r", sorted(GRID_SCAN_1A))
def test_thresholds_against_grid_scan_and_analytic(r):
    res = find_esd(fig1a(r), "p2", tol=1e-9)
    # the reported threshold is the dead end of a bracket of width tol
    assert GRID_SCAN_1A[r] - 1e-4 < res.threshold <= GRID_SCAN_1A[r] + 1e-9
    assert res.threshold == pytest.approx(analytic_1a(r), abs=2e-9)


def test_threshold_ordering_in_r():
    thr = {r: find_esd(fig1a(r), "p2").threshold for r in (math.pi / 16, math.pi / 8, math.pi / 4)}
    assert thr[math.pi / 4] < thr[math.pi / 8] < thr[math.pi / 16]


def test_found_result_brackets_the_death():
    cfg = fig1a(3 * math.pi / 16)
    res = find_esd(cfg, "p2", tol=1e-9)
    lo, hi = res.bracket
    assert hi - lo <= 1e-9 and hi == res.threshold
    assert concurrence_of(cfg.with_value("p2", res.threshold - 1e-6)) > 0
    assert concurrence_of(cfg.with_value("p2", res.threshold + 1e-6)) <= ZERO_TOL


def test_refining_tolerance_is_consistent():
    for r in PRESET_R_GRID[1:]:
        coarse = find_esd(fig1a(r), "p2", tol=1e-6).threshold
        fine = find_esd(fig1a(r), "p2", tol=1e-7).threshold
        assert abs(coarse - fine) <= 1e-5


def test_always_zero():
    cfg = ScenarioConfig("S1", "multilocal", math.pi / 4, p1=0.5, p2=0.9)
    res = find_esd(cfg, "p3")
    assert res.status is EsdStatus.ALWAYS_ZERO
    assert res.effective_threshold == 0.0


@pytest.mark.parametrize("kwargs", [dict(var="r"), dict(var="p", grid=32), dict(var="p1", grid=8),
                                    dict(var="p1", tol=1e-3)])
def test_argument_validation(kwargs):
    var = kwargs.pop("var")
    with pytest.raises(ValueError):
        find_esd(fig1a(0.1), var, **kwargs)


def test_s3_presets_always_die():
    presets = [(ScenarioConfig("S3", "multilocal", 0, p1=0, p2=0.2), "p3"),
               (ScenarioConfig("S3", "multilocal", 0, p1=0, p3=0.2), "p2"),
               (ScenarioConfig("S3", "global", 0, p2=0.2, p3=0.2), "p1")]
    for base, var in presets:
        for r in PRESET_R_GRID:
            assert find_esd(base.with_value("r", r), var).status is EsdStatus.FOUND


def test_scan_is_not_fooled_by_late_zero():
    # Fig. 3 layout reaches zero only at p1 = 1, outside the scanned interval
    cfg = ScenarioConfig("S2", "multilocal", math.pi / 4, p2=0.5)
    assert concurrence_of(cfg.with_value("p1", 1.0)) <= ZERO_TOL
    assert find_esd(cfg, "p1").status is EsdStatus.NO_DEATH
    assert np.isclose(find_esd(cfg, "p1").effective_threshold, 1.0)
