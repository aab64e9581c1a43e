"""Angle arithmetic, polarization grids and CHSH settings.

All angles are carried in degrees. Radians only appear inside the
trigonometric calls of the model modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

DEFAULT_GRID_SIZE = 32
FULL_TURN = 360.0


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


def normalize_angle(raw: float) -> float:
    """Return ``raw`` wrapped into the canonical range [0, 360)."""
    raw = float(raw)
    if not math.isfinite(raw):
        raise DomainError(f"angle must be finite, got {raw!r}")
    wrapped = math.fmod(raw, FULL_TURN)
    if wrapped < 0.0:
        wrapped += FULL_TURN
    # fmod of a tiny negative number can round back up to exactly 360
    if wrapped >= FULL_TURN:
        wrapped = 0.0
    return wrapped + 0.0  # drop negative zero


@dataclass(frozen=True)
class PolarizationGrid:
    """Equally spaced polarization states over a full turn with their weights."""

    states: tuple[float, ...]
    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.states:
            raise DomainError("polarization grid must contain at least one state")
        if len(self.states) != len(self.weights):
            raise DomainError("states and weights must have equal length")

    @property
    def n_states(self) -> int:
        return len(self.states)

    def __len__(self) -> int:
        return len(self.states)

    def states_array(self) -> np.ndarray:
        return np.asarray(self.states, dtype=float)

    def weights_array(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=float)

    def label(self, index: int) -> str:
        """1-based label used in rendered tables (``lambda1`` is 0 degrees)."""
        return f"lambda{index + 1}"


def make_grid(n_states: int = DEFAULT_GRID_SIZE) -> PolarizationGrid:
    """Build the uniform grid ``k * 360 / n_states`` for ``k = 0..n_states-1``."""
    if isinstance(n_states, bool) or int(n_states) != n_states:
        raise DomainError(f"n_states must be an integer, got {n_states!r}")
    n_states = int(n_states)
    if n_states < 1:
        raise DomainError(f"n_states must be >= 1, got {n_states}")
    step = FULL_TURN / n_states
    states = tuple(k * step for k in range(n_states))
    weights = (1.0 / n_states,) * n_states
    return PolarizationGrid(states=states, weights=weights)


@dataclass(frozen=True)
class ChshSetting:
    """Polarizer orientations (a, b, a', b') entering the CHSH combination."""

    a: float
    b: float
    a_prime: float
    b_prime: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "a_prime", "b_prime"):
            object.__setattr__(self, name, normalize_angle(getattr(self, name)))

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.a_prime, self.b_prime)

    def pairs(self) -> tuple[tuple[float, float], ...]:
        """The four (a, b) pairs in the order they enter S, first one added, second subtracted."""
        return (
            (self.a, self.b),
            (self.a, self.b_prime),
            (self.a_prime, self.b),
            (self.a_prime, self.b_prime),
        )


# Signs of E(a,b), E(a,b'), E(a',b), E(a',b') in S.
CHSH_SIGNS = (1.0, -1.0, 1.0, 1.0)


def chsh_combine(e_ab: float, e_abp: float, e_apb: float, e_apbp: float) -> float:
    return e_ab - e_abp + e_apb + e_apbp


def equal_spacing_setting(theta: float) -> ChshSetting:
    """Setting with equal steps: a = 0, b = theta, a' = 2 theta, b' = 3 theta."""
    theta = float(theta)
    if not math.isfinite(theta):
        raise DomainError(f"theta must be finite, got {theta!r}")
    return ChshSetting(0.0, theta, 2.0 * theta, 3.0 * theta)


@dataclass(frozen=True)
class JointQuantities:
    """Signed correlator contributions for pass/pass, block/block, pass/block, block/pass.

    These can be negative and are not probabilities.
    """

    pp: float
    nn: float
    pn: float
    np: float

    def combination(self) -> float:
        """pp + nn - pn - np, without any normalization factor."""
        return self.pp + self.nn - self.pn - self.np

    def as_dict(self) -> dict[str, float]:
        return {"pp": self.pp, "nn": self.nn, "pn": self.pn, "np": self.np}
