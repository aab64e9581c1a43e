"""Local hidden-variable model: each photon carries a polarization angle.

A filter at angle ``f`` meeting a photon polarized at ``lam`` contributes
``cos(2 (f - lam))`` on the pass channel and ``sin(2 (f - lam))`` on the
block channel. Per-state quantities combine these projections for the two
sides; population quantities are weighted means over a polarization grid.

Normalization conventions:

* per-state expected value ``E = (pp + nn - pn - np) / 2``
* population expected value ``E_bar = mean(pp + nn - pn - np)`` (no 1/2),
  which gives ``E_bar(a, a) = 1`` on any uniform grid with at least 5 states.

Every function broadcasts over numpy arrays; scalar inputs give floats.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    ChshSetting,
    DomainError,
    JointQuantities,
    PolarizationGrid,
    chsh_combine,
)

MC_ALGORITHM = "numpy.random.Generator(PCG64)"


def _out(x):
    x = np.asarray(x, dtype=float)
    return float(x) if x.ndim == 0 else x


def _doubled_radians(filter_deg, lam_deg):
    return np.radians(2.0 * (np.asarray(filter_deg, dtype=float) - np.asarray(lam_deg, dtype=float)))


def pass_projection(filter_deg, lam_deg):
    """Pass-channel projection ``cos(2 (filter - lambda))``."""
    return _out(np.cos(_doubled_radians(filter_deg, lam_deg)))


def block_projection(filter_deg, lam_deg):
    """Block-channel projection ``sin(2 (filter - lambda))``."""
    return _out(np.sin(_doubled_radians(filter_deg, lam_deg)))


def _joint_arrays(a, b, lam):
    arg_a = _doubled_radians(a, lam)
    arg_b = _doubled_radians(b, lam)
    ca, sa = np.cos(arg_a), np.sin(arg_a)
    cb, sb = np.cos(arg_b), np.sin(arg_b)
    return ca * cb, sa * sb, ca * sb, sa * cb


def joint_quantities(a, b, lam) -> JointQuantities:
    """pp, nn, pn, np for filters ``a``, ``b`` and one polarization state ``lam``."""
    pp, nn, pn, np_ = _joint_arrays(a, b, lam)
    return JointQuantities(_out(pp), _out(nn), _out(pn), _out(np_))


def expected_value_single(a, b, lam):
    pp, nn, pn, np_ = _joint_arrays(a, b, lam)
    return _out((pp + nn - pn - np_) / 2.0)


def chsh_single(setting: ChshSetting, lam):
    """Per-state CHSH value for one (or an array of) polarization states."""
    values = [expected_value_single(x, y, lam) for x, y in setting.pairs()]
    return _out(chsh_combine(*values))


def _check_grid(grid: PolarizationGrid) -> tuple[np.ndarray, np.ndarray]:
    if grid is None or grid.n_states == 0:
        raise DomainError("polarization grid must be nonempty")
    return grid.states_array(), grid.weights_array()


def _weighted_mean(values: np.ndarray, weights: np.ndarray):
    # Reduction over the trailing (lambda) axis in fixed index order.
    return _out(np.sum(values * weights, axis=-1))


def ensemble_joint(a, b, grid: PolarizationGrid) -> JointQuantities:
    """Weighted means of pp, nn, pn, np over every state of ``grid``."""
    lam, w = _check_grid(grid)
    a = np.asarray(a, dtype=float)[..., None]
    b = np.asarray(b, dtype=float)[..., None]
    pp, nn, pn, np_ = _joint_arrays(a, b, lam)
    return JointQuantities(
        _weighted_mean(pp, w),
        _weighted_mean(nn, w),
        _weighted_mean(pn, w),
        _weighted_mean(np_, w),
    )


def expected_value_population(a, b, grid: PolarizationGrid):
    """Population expected value: weighted mean of ``pp + nn - pn - np``."""
    lam, w = _check_grid(grid)
    a = np.asarray(a, dtype=float)[..., None]
    b = np.asarray(b, dtype=float)[..., None]
    pp, nn, pn, np_ = _joint_arrays(a, b, lam)
    return _weighted_mean(pp + nn - pn - np_, w)


def chsh_population(setting: ChshSetting, grid: PolarizationGrid) -> float:
    values = [expected_value_population(x, y, grid) for x, y in setting.pairs()]
    return float(chsh_combine(*values))


@dataclass(frozen=True)
class SingleStateResult:
    lam: float
    joint: JointQuantities
    expected_value: float


@dataclass(frozen=True)
class PopulationResult:
    joint_mean: JointQuantities
    expected_value: float
    s_value: float | None = None


def single_state(a: float, b: float, lam: float) -> SingleStateResult:
    joint = joint_quantities(a, b, lam)
    return SingleStateResult(lam=float(lam), joint=joint, expected_value=joint.combination() / 2.0)


def population(a: float, b: float, grid: PolarizationGrid, setting: ChshSetting | None = None) -> PopulationResult:
    joint = ensemble_joint(a, b, grid)
    s = chsh_population(setting, grid) if setting is not None else None
    return PopulationResult(joint_mean=joint, expected_value=joint.combination(), s_value=s)


def mc_expected_value(a: float, b: float, samples: int, seed: int) -> tuple[float, float]:
    """Monte-Carlo estimate of the population expected value with continuous lambda.

    Draws lambda uniformly on [0, 360) and averages ``2 * E(a, b, lambda)``.
    Returns ``(estimate, standard_error_of_mean)``. The generator is
    ``MC_ALGORITHM`` seeded with ``seed``.
    """
    if int(samples) != samples or samples < 2:
        raise DomainError(f"samples must be an integer >= 2, got {samples!r}")
    rng = np.random.Generator(np.random.PCG64(seed))
    lam = rng.uniform(0.0, 360.0, size=int(samples))
    # pp + nn - pn - np = (cos x - sin x)(cos y - sin y), and cos x - sin x = sqrt(2) cos(x + 45 deg)
    side_a = np.cos(np.radians(2.0 * (a - lam) + 45.0))
    side_b = np.cos(np.radians(2.0 * (b - lam) + 45.0))
    values = 2.0 * side_a * side_b
    estimate = float(np.mean(values))
    std_error = float(np.std(values, ddof=1) / np.sqrt(values.size))
    return estimate, std_error
