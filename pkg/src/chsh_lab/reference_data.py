"""Published values embedded for side-by-side comparison.

Matrices are stored in the printed row/column order: filter index
``1..9`` and ``32`` on both axes (0-based grid indices 0..8 and 31).
Per-state matrices are for the polarization state at 11.25 degrees.
"""

from __future__ import annotations

from dataclasses import dataclass

PRINTED_INDICES = (0, 1, 2, 3, 4, 5, 6, 7, 8, 31)
PER_STATE_LAMBDA_INDEX = 1

PER_STATE_PP = (
    (0.854, 0.924, 0.854, 0.653, 0.354, 0.0, -0.354, -0.653, -0.854, 0.653),
    (0.924, 1.0, 0.924, 0.707, 0.383, 0.0, -0.383, -0.707, -0.924, 0.707),
    (0.854, 0.924, 0.854, 0.653, 0.354, 0.0, -0.354, -0.653, -0.854, 0.653),
    (0.653, 0.707, 0.653, 0.5, 0.271, 0.0, -0.271, -0.5, -0.653, 0.5),
    (0.354, 0.383, 0.354, 0.271, 0.146, 0.0, -0.146, -0.271, -0.354, 0.271),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
    (-0.354, -0.383, -0.354, -0.271, -0.146, 0.0, 0.146, 0.271, 0.354, -0.271),
    (-0.653, -0.707, -0.653, -0.5, -0.271, 0.0, 0.271, 0.5, 0.653, -0.5),
    (-0.854, -0.924, -0.854, -0.653, -0.354, 0.0, 0.354, 0.653, 0.854, -0.653),
    (0.653, 0.707, 0.653, 0.5, 0.271, 0.0, -0.271, -0.5, -0.653, 0.5),
)

PER_STATE_NN = (
    (0.146, 0.0, -0.146, -0.271, -0.354, -0.383, -0.354, -0.271, -0.146, 0.271),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
    (-0.146, 0.0, 0.146, 0.271, 0.354, 0.383, 0.354, 0.271, 0.146, -0.271),
    (-0.271, 0.0, 0.271, 0.5, 0.653, 0.707, 0.653, 0.5, 0.271, -0.5),
    (-0.354, 0.0, 0.354, 0.653, 0.854, 0.924, 0.854, 0.653, 0.354, -0.653),
    (-0.383, 0.0, 0.383, 0.707, 0.924, 1.0, 0.924, 0.707, 0.383, -0.707),
    (-0.354, 0.0, 0.354, 0.653, 0.854, 0.924, 0.854, 0.653, 0.354, -0.653),
    (-0.271, 0.0, 0.271, 0.5, 0.653, 0.707, 0.653, 0.5, 0.271, -0.5),
    (-0.146, 0.0, 0.146, 0.271, 0.354, 0.383, 0.354, 0.271, 0.146, -0.271),
    (0.271, 0.0, -0.271, -0.5, -0.653, -0.707, -0.653, -0.5, -0.271, 0.5),
)

PER_STATE_PN = (
    (-0.354, 0.0, 0.354, 0.653, 0.854, 0.924, 0.854, 0.653, 0.354, -0.653),
    (-0.383, 0.0, 0.383, 0.707, 0.924, 1.0, 0.924, 0.707, 0.383, -0.707),
    (-0.354, 0.0, 0.354, 0.653, 0.854, 0.924, 0.854, 0.653, 0.354, -0.653),
    (-0.271, 0.0, 0.271, 0.5, 0.653, 0.707, 0.653, 0.5, 0.271, -0.5),
    (-0.146, 0.0, 0.146, 0.271, 0.354, 0.383, 0.354, 0.271, 0.146, -0.271),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
    (0.146, 0.0, -0.146, -0.271, -0.354, -0.383, -0.354, -0.271, -0.146, 0.271),
    (0.271, 0.0, -0.271, -0.5, -0.653, -0.707, -0.653, -0.5, -0.271, 0.5),
    (0.354, 0.0, -0.354, -0.653, -0.854, -0.924, -0.854, -0.653, -0.354, 0.653),
    (-0.271, 0.0, 0.271, 0.5, 0.653, 0.707, 0.653, 0.5, 0.271, -0.5),
)

PER_STATE_NP = (
    (-0.354, -0.383, -0.354, -0.271, -0.146, 0.0, 0.146, 0.271, 0.354, -0.271),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
    (0.354, 0.383, 0.354, 0.271, 0.146, 0.0, -0.146, -0.271, -0.354, 0.271),
    (0.653, 0.707, 0.653, 0.5, 0.271, 0.0, -0.271, -0.5, -0.653, 0.5),
    (0.854, 0.924, 0.854, 0.653, 0.354, 0.0, -0.354, -0.653, -0.854, 0.653),
    (0.924, 1.0, 0.924, 0.707, 0.383, 0.0, -0.383, -0.707, -0.924, 0.707),
    (0.854, 0.924, 0.854, 0.653, 0.354, 0.0, -0.354, -0.653, -0.854, 0.653),
    (0.653, 0.707, 0.653, 0.5, 0.271, 0.0, -0.271, -0.5, -0.653, 0.5),
    (0.354, 0.383, 0.354, 0.271, 0.146, 0.0, -0.146, -0.271, -0.354, 0.271),
    (-0.653, -0.707, -0.653, -0.5, -0.271, 0.0, 0.271, 0.5, 0.653, -0.5),
)

PER_STATE_E = (
    (0.854, 0.653, 0.354, 0.0, -0.354, -0.653, -0.854, -0.924, -0.854, 0.924),
    (0.653, 0.5, 0.271, 0.0, -0.271, -0.5, -0.653, -0.707, -0.653, 0.707),
    (0.354, 0.271, 0.146, 0.0, -0.146, -0.271, -0.354, -0.383, -0.354, 0.383),
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
    (-0.354, -0.271, -0.146, 0.0, 0.146, 0.271, 0.354, 0.383, 0.354, -0.383),
    (-0.653, -0.5, -0.271, 0.0, 0.271, 0.5, 0.653, 0.707, 0.653, -0.707),
    (-0.854, -0.653, -0.354, 0.0, 0.354, 0.653, 0.854, 0.924, 0.854, -0.924),
    (-0.924, -0.707, -0.383, 0.0, 0.383, 0.707, 0.924, 1.0, 0.924, -1.0),
    (-0.854, -0.653, -0.354, 0.0, 0.354, 0.653, 0.854, 0.924, 0.854, -0.924),
    (0.924, 0.707, 0.383, 0.0, -0.383, -0.707, -0.924, -1.0, -0.924, 1.0),
)

POPULATION_E = (
    (1.0, 0.913, 0.686, 0.356, -0.029, -0.41, -0.728, -0.935, -1.0, 0.935),
    (0.913, 0.976, 0.89, 0.669, 0.347, -0.029, -0.401, -0.711, -0.913, 0.711),
    (0.686, 0.89, 0.958, 0.881, 0.67, 0.356, -0.012, -0.378, -0.686, 0.378),
    (0.356, 0.669, 0.881, 0.958, 0.891, 0.686, 0.378, 0.012, -0.356, -0.012),
    (-0.029, 0.346, 0.669, 0.89, 0.976, 0.913, 0.711, 0.401, 0.029, -0.401),
    (-0.41, -0.029, 0.356, 0.686, 0.913, 1.0, 0.935, 0.728, 0.41, -0.728),
    (-0.728, -0.401, -0.012, 0.378, 0.711, 0.935, 1.0, 0.944, 0.728, -0.944),
    (-0.935, -0.711, -0.378, 0.012, 0.401, 0.728, 0.944, 1.0, 0.935, -1.0),
    (-1.0, -0.913, -0.686, -0.356, 0.03, 0.41, 0.728, 0.935, 1.0, -0.935),
    (0.935, 0.711, 0.378, -0.012, -0.401, -0.728, -0.944, -1.0, -0.935, 1.0),
)

PER_STATE_S = (
    (0.5412, 1.4142, 0.7654, -1.0000, -1.3066, -1.4142, -1.8478, -1.0000, -0.5412, -1.4142),
    (0.9239, 1.4142, 1.3066, -0.7071, -1.6892, -1.4142, -1.8478, -1.7071, -0.9239, -1.4142),
    (1.4651, 1.4142, 1.6892, 0.0000, -1.6892, -1.4142, -1.4651, -2.0000, -1.4651, -1.4142),
    (1.8478, 1.4142, 1.6892, 0.7071, -1.3066, -1.4142, -0.9239, -1.7071, -1.8478, -1.4142),
    (1.8478, 1.4142, 1.3066, 1.0000, -0.7654, -1.4142, -0.5412, -1.0000, -1.8478, -1.4142),
    (1.4651, 1.4142, 0.7654, 0.7071, -0.3827, -1.4142, -0.5412, -0.2929, -1.4651, -1.4142),
    (0.9239, 1.4142, 0.3827, 0.0000, -0.3827, -1.4142, -0.9239, 0.0000, -0.9239, -1.4142),
    (0.5412, 1.4142, 0.3827, -0.7071, -0.7654, -1.4142, -1.4651, -0.2929, -0.5412, -1.4142),
    (0.5412, 1.4142, 0.7654, -1.0000, -1.3066, -1.4142, -1.8478, -1.0000, -0.5412, -1.4142),
    (0.9239, 1.4142, 1.3066, -0.7071, -1.6892, -1.4142, -1.8478, -1.7071, -0.9239, -1.4142),
    (1.4651, 1.4142, 1.6892, 0.0000, -1.6892, -1.4142, -1.4651, -2.0000, -1.4651, -1.4142),
    (1.8478, 1.4142, 1.6892, 0.7071, -1.3066, -1.4142, -0.9239, -1.7071, -1.8478, -1.4142),
    (1.8478, 1.4142, 1.3066, 1.0000, -0.7654, -1.4142, -0.5412, -1.0000, -1.8478, -1.4142),
    (1.4650, 1.4142, 0.7655, 0.7069, -0.3829, -1.4142, -0.5414, -0.2931, -1.4650, -1.4142),
    (0.9239, 1.4142, 0.3827, 0.0000, -0.3827, -1.4142, -0.9239, 0.0000, -0.9239, -1.4142),
    (0.5412, 1.4142, 0.3827, -0.7071, -0.7654, -1.4142, -1.4651, -0.2929, -0.5412, -1.4142),
    (0.5412, 1.4142, 0.7654, -1.0000, -1.3066, -1.4142, -1.8478, -1.0000, -0.5412, -1.4142),
    (0.9239, 1.4142, 1.3066, -0.7071, -1.6892, -1.4142, -1.8478, -1.7071, -0.9239, -1.4142),
    (1.4651, 1.4142, 1.6892, 0.0024, -1.6892, -1.4142, -1.4651, -2.0000, -1.4651, -1.4142),
    (1.8478, 1.4142, 1.6892, 0.7071, -1.3066, -1.4142, -0.9239, -1.7071, -1.8478, -1.4142),
    (1.8478, 1.4142, 1.3066, 1.0000, -0.7654, -1.4142, -0.5412, -1.0000, -1.8478, -1.4142),
    (1.4651, 1.4142, 0.7654, 0.7071, -0.3827, -1.4142, -0.5412, -0.2929, -1.4651, -1.4142),
    (0.9239, 1.4142, 0.3827, 0.0000, -0.3827, -1.4142, -0.9239, 0.0000, -0.9239, -1.4142),
    (0.5412, 1.4142, 0.3827, -0.7071, -0.7654, -1.4142, -1.4651, -0.2929, -0.5412, -1.4142),
    (0.5412, 1.4142, 0.7654, -1.0000, -1.3066, -1.4142, -1.8478, -1.0000, -0.5412, -1.4142),
    (0.9239, 1.4142, 1.3066, -0.7071, -1.6892, -1.4142, -1.8478, -1.7071, -0.9239, -1.4142),
    (1.4651, 1.4142, 1.6892, 0.0000, -1.6892, -1.4142, -1.4651, -2.0000, -1.4651, -1.4142),
    (1.8478, 1.4142, 1.6892, 0.7071, -1.3066, -1.4142, -0.9239, -1.7071, -1.8478, -1.4142),
    (1.8478, 1.4142, 1.3066, 1.0000, -0.7654, -1.4142, -0.5412, -1.0000, -1.8478, -1.4142),
    (1.4651, 1.4142, 0.7654, 0.7071, -0.3827, -1.4142, -0.5412, -0.2929, -1.4651, -1.4142),
    (0.9239, 1.4142, 0.3827, 0.0000, -0.3827, -1.4142, -0.9239, 0.0000, -0.9239, -1.4142),
    (0.5412, 1.4142, 0.3827, -0.7071, -0.7654, -1.4142, -1.4651, -0.2929, -0.5412, -1.4142),
)

# Per-state S columns: equal-spacing theta = 11.25 * m, m = 1..10.
PER_STATE_S_THETAS = tuple(11.25 * m for m in range(1, 11))

# (test index, theta, printed S) for the ten population test cases.
POPULATION_S = (
    (1, 11.25, 2.3281),
    (2, 22.5, 2.7941),
    (3, 33.75, 2.0467),
    (4, 45.0, -0.0587),
    (5, 56.25, -2.0786),
    (6, 67.5, -2.7941),
    (7, 78.75, -2.4049),
    (8, 90.0, -2.0000),
    (9, 101.25, -2.3281),
    (10, 112.5, -2.7941),
)


@dataclass(frozen=True)
class BoundsRow:
    """One row of the individual-instance bounds table.

    ``per_theta`` holds one printed (min, max) per setup when the row lists
    them separately. ``union`` holds the single printed (min, max) covering
    every setup of the row when it does not.
    """

    thetas: tuple[float, ...]
    printed_label: str
    per_theta: tuple[tuple[float, float], ...] | None = None
    union: tuple[float, float] | None = None


# "78.25" in the printed label is read as the grid angle 78.75.
INDIVIDUAL_BOUNDS = (
    BoundsRow((11.25, 78.75), "11.25, 78.25", per_theta=((0.541, 1.848), (-1.848, -0.541))),
    BoundsRow((22.5, 67.5), "22.5, 67.5", per_theta=((1.414, 1.414), (-1.414, -1.414))),
    BoundsRow((33.75, 56.25), "33.75, 56.25", per_theta=((0.383, 1.689), (-1.689, -0.383))),
    BoundsRow((45.0, 135.0), "45, 135", union=(-1.0, 1.0)),
    BoundsRow((90.0, 180.0), "90, 180", union=(-2.0, 2.0)),
)

# Population comparison columns, mapped to the first three population tests.
COMPARISON_THETAS = (11.25, 22.5, 33.75)
COMPARISON_HV = (2.328, 2.794, 2.047)
COMPARISON_QM = (2.389, 2.828, 2.072)


@dataclass(frozen=True)
class ReferenceExperiment:
    name: str
    citation: str
    s: float
    s_uncertainty: float | None = None
    e_ab: float | None = None
    e_abp: float | None = None
    e_apb: float | None = None
    e_apbp: float | None = None
    theta: float | None = None

    @property
    def components(self) -> tuple[float | None, ...]:
        return (self.e_ab, self.e_abp, self.e_apb, self.e_apbp)

    def has_components(self) -> bool:
        return all(c is not None for c in self.components)

    def recombined_s(self) -> float:
        e_ab, e_abp, e_apb, e_apbp = self.components
        return e_ab - e_abp + e_apb + e_apbp

    @property
    def printed_s(self) -> str:
        """S as printed: three decimals, with the uncertainty when known."""
        if self.s_uncertainty is None:
            return f"{self.s:.3f}"
        return f"{self.s:.3f} \u00b1 {self.s_uncertainty:.3f}"

    @property
    def printed_row(self) -> str:
        values = [c for c in self.components if c is not None] + [self.s]
        return " ".join(f"{v:.3f}" for v in values)


ASPECT = ReferenceExperiment(
    name="Aspect",
    citation="Aspect, Grangier, Roger, Phys. Rev. Lett. 49, 91 (1982)",
    s=2.697,
    s_uncertainty=0.015,
    theta=22.5,
)
COSMIC_BELL = ReferenceExperiment(
    name="Cosmic Bell",
    citation="Cosmic Bell test (Zeilinger group)",
    s=2.674,
    e_ab=0.670,
    e_abp=-0.739,
    e_apb=0.637,
    e_apbp=0.628,
)
LASER = ReferenceExperiment(
    name="Laser Entangled Photons",
    citation="Laser entangled-photon Bell test (documentary demonstration)",
    s=2.530,
    e_ab=0.559,
    e_abp=-0.591,
    e_apb=0.560,
    e_apbp=0.820,
)
REFERENCE_EXPERIMENTS = (ASPECT, COSMIC_BELL, LASER)

# Printed hidden-variable breakdown row at theta = 22.5: four E components and S.
BREAKDOWN_HV = (0.686, -0.728, 0.669, 0.711, 2.794)
BREAKDOWN_QM_S = 2.828

# Diffraction: d = 0.01 mm, screen at 2.0 m; (J, nm, colour, theta deg, y cm).
DIFFRACTION_SLIT_SPACING_M = 0.01e-3
DIFFRACTION_SCREEN_DISTANCE_M = 2.0
DIFFRACTION_ROWS = (
    (1, 485.0, "blue", 2.78, 9.71),
    (1, 565.0, "green", 3.24, 11.32),
    (1, 750.0, "red", 4.30, 15.04),
    (2, 485.0, "blue", 5.57, 19.49),
    (2, 565.0, "green", 6.49, 22.75),
    (2, 750.0, "red", 8.63, 30.34),
)

# Completion-time summary by age group: (group, (N, mean, sd, median) men, ... women).
COMPLETION_TIMES = (
    ("18-39", (5285, 196.50, 42.50, 179.60), (4884, 227.91, 42.76, 212.38)),
    ("40-44", (2241, 203.00, 39.15, 189.28), (1878, 230.76, 37.57, 219.21)),
    ("45-49", (2252, 210.26, 37.09, 198.97), (1817, 235.87, 33.18, 227.17)),
    ("50-54", (2052, 221.32, 40.38, 207.39), (1207, 244.61, 35.03, 233.92)),
    ("55-59", (1422, 228.29, 37.27, 217.36), (815, 253.28, 35.01, 244.13)),
    ("60-64", (1110, 239.82, 36.79, 229.95), (527, 258.90, 31.50, 252.77)),
    ("65-69", (549, 252.95, 37.06, 242.58), (221, 272.10, 30.34, 267.75)),
)
