import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chsh_lab import reference_data as ref
from chsh_lab.core import DomainError, PolarizationGrid, equal_spacing_setting, make_grid
from chsh_lab.hv_model import (
    MC_ALGORITHM,
    block_projection,
    chsh_population,
    chsh_single,
    ensemble_joint,
    expected_value_population,
    expected_value_single,
    joint_quantities,
    mc_expected_value,
    pass_projection,
    population,
    single_state,
)
from chsh_lab.qm_model import qm_expected_value

import oracles

angles = st.floats(min_value=0, max_value=360, exclude_max=True, allow_nan=False)
GRID = make_grid(32)


def test_pass_projection():
    assert pass_projection(22.5, 11.25) == pytest.approx(0.92388, abs=5e-6)
    assert pass_projection(22.5, 11.25) ** 2 == pytest.approx(0.854, abs=5e-4)
    assert pass_projection(37.0, 37.0) == 1.0
    assert pass_projection(45, 0) == pytest.approx(0.0, abs=1e-15)
    assert block_projection(45, 0) == pytest.approx(1.0)


def test_joint_quantities_printed_cell():
    j = joint_quantities(0, 0, 11.25)
    assert (j.pp, j.nn, j.pn, j.np) == pytest.approx((0.854, 0.146, -0.354, -0.354), abs=5e-4)
    assert joint_quantities(0, 90, 11.25).pp == pytest.approx(-0.854, abs=5e-4)


@given(angles)
def test_joint_quantities_aligned(x):
    j = joint_quantities(x, x, x)
    assert (j.pp, j.nn, j.pn, j.np) == pytest.approx((1, 0, 0, 0), abs=1e-12)


@given(angles, angles, angles)
def test_joint_matches_brute(a, b, lam):
    j = joint_quantities(a, b, lam)
    assert (j.pp, j.nn, j.pn, j.np) == pytest.approx(oracles.brute_joint(a, b, lam), abs=1e-12)
    for v in (j.pp, j.nn, j.pn, j.np):
        assert -1 <= v <= 1


@pytest.mark.parametrize("b, expected", [(0, 0.854), (11.25, 0.653), (33.75, 0.0)])
def test_expected_value_single(b, expected):
    assert expected_value_single(0, b, 11.25) == pytest.approx(expected, abs=5e-4)


@given(angles, angles, angles)
def test_single_state_halves_combination(a, b, lam):
    r = single_state(a, b, lam)
    assert r.expected_value == pytest.approx(r.joint.combination() / 2, abs=1e-12)
    closed = (math.cos(math.radians(2 * (a - b))) - math.sin(math.radians(2 * (a + b) - 4 * lam))) / 2
    assert r.expected_value == pytest.approx(closed, abs=1e-12)


@pytest.mark.parametrize(
    "theta, lam, expected", [(11.25, 0, 0.5412), (22.5, 33.75, 1.4142), (11.25, 33.75, 1.8478)]
)
def test_chsh_single(theta, lam, expected):
    assert chsh_single(equal_spacing_setting(theta), lam) == pytest.approx(expected, abs=5e-4)


def test_ensemble_joint_against_brute_force():
    j = ensemble_joint(0, 0, GRID)
    # brute force gives (0.5, 0.5, ~1e-17, ~1e-17)
    assert (j.pp, j.nn, j.pn, j.np) == pytest.approx((0.5, 0.5, 0, 0), abs=1e-12)
    assert ensemble_joint(0, 90, GRID).pp == pytest.approx(-0.5, abs=1e-12)
    for a, b in [(0, 22.5), (33.75, 281.25), (17.3, 101.9)]:
        j = ensemble_joint(a, b, GRID)
        assert (j.pp, j.nn, j.pn, j.np) == pytest.approx(oracles.brute_ensemble(a, b, 32), abs=1e-12)


def test_ensemble_single_state_grid():
    a, b = 12.0, 77.0
    assert ensemble_joint(a, b, make_grid(1)) == joint_quantities(a, b, 0.0)


def test_empty_grid_rejected():
    with pytest.raises(DomainError):
        PolarizationGrid(states=(), weights=())


@pytest.mark.parametrize("b, expected", [(0, 1.0), (90, -1.0), (22.5, 0.70711)])
def test_expected_value_population(b, expected):
    assert expected_value_population(0, b, GRID) == pytest.approx(expected, abs=5e-6)
    assert expected_value_population(0, b, GRID) == pytest.approx(oracles.brute_population_e(0, b, 32), abs=1e-12)


def test_population_result_consistency():
    setting = equal_spacing_setting(22.5)
    r = population(0, 22.5, GRID, setting)
    assert r.expected_value == pytest.approx(r.joint_mean.combination(), abs=1e-15)
    assert r.s_value == pytest.approx(chsh_population(setting, GRID))


@pytest.mark.parametrize("theta, expected", [(22.5, 2.82843), (90, -2.0), (0, 2.0)])
def test_chsh_population(theta, expected):
    got = chsh_population(equal_spacing_setting(theta), GRID)
    assert got == pytest.approx(expected, abs=5e-6)
    assert got == pytest.approx(oracles.brute_population_s(theta, 32), abs=1e-12)


@settings(max_examples=200)
@given(angles, angles, angles)
def test_identities(a, b, lam):
    j = joint_quantities(a, b, lam)
    assert j.pp + j.nn == pytest.approx(math.cos(math.radians(2 * (a - b))), abs=1e-12)
    assert j.pn - j.np == pytest.approx(math.sin(math.radians(2 * (b - a))), abs=1e-12)


@settings(max_examples=100)
@given(angles, angles, st.integers(min_value=5, max_value=200))
def test_grid_exactness(a, b, n):
    grid = make_grid(n)
    assert expected_value_population(a, b, grid) == pytest.approx(math.cos(math.radians(2 * (a - b))), abs=1e-9)
    assert expected_value_population(a, b, grid) == pytest.approx(qm_expected_value(a, b), abs=1e-9)


def test_four_state_grid_does_not_cancel():
    # 4 * lambda is a multiple of 360 on this grid, so the sine term survives
    a, b = 0.0, 10.0
    e = expected_value_population(a, b, make_grid(4))
    expected = math.cos(math.radians(-20)) - math.sin(math.radians(20))
    assert e == pytest.approx(expected, abs=1e-12)


def test_per_state_bounds_for_printed_setups():
    for row in ref.INDIVIDUAL_BOUNDS:
        for theta in row.thetas:
            s = np.asarray(chsh_single(equal_spacing_setting(theta), GRID.states_array()))
            assert np.all(np.abs(s) <= 2 + 1e-9)


def test_mc_examples():
    est, se = mc_expected_value(0, 22.5, 10**6, seed=7)
    assert abs(est - math.cos(math.radians(45))) < 3 * se
    est, se = mc_expected_value(0, 0, 10**6, seed=11)
    assert abs(est - 1) < 3 * se


def test_mc_deterministic():
    assert mc_expected_value(10, 40, 1000, seed=3) == mc_expected_value(10, 40, 1000, seed=3)
    assert mc_expected_value(10, 40, 1000, seed=3) != mc_expected_value(10, 40, 1000, seed=4)
    assert "PCG64" in MC_ALGORITHM


@pytest.mark.parametrize("samples", [0, 1, 2.5])
def test_mc_rejects_small_samples(samples):
    with pytest.raises(DomainError):
        mc_expected_value(0, 0, samples, seed=0)


def test_mc_coverage():
    a, b = 0.0, 22.5
    target = math.cos(math.radians(2 * (a - b)))
    hits = 0
    for seed in range(1000):
        est, se = mc_expected_value(a, b, 10**4, seed)
        hits += abs(est - target) < 4 * se
    assert hits >= 990


def test_population_reduction_is_repeatable():
    a = np.linspace(0, 359, 97)
    first = expected_value_population(a[:, None], a[None, :], GRID)
    second = expected_value_population(a[:, None], a[None, :], GRID)
    assert np.array_equal(first, second)


def test_mc_sample_matches_model_combination():
    # a single-draw check of the factored integrand against the per-state model
    rng = np.random.Generator(np.random.PCG64(9))
    lam = rng.uniform(0.0, 360.0, size=2)
    direct = [2 * expected_value_single(30.0, 75.0, x) for x in lam]
    est, se = mc_expected_value(30.0, 75.0, 2, seed=9)
    assert est == pytest.approx(sum(direct) / 2, abs=1e-12)
    assert se == pytest.approx(abs(direct[0] - direct[1]) / 2, abs=1e-12)
