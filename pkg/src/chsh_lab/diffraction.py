"""Grating / double-slit maxima positions.

SI units inside (meters, radians); angles are returned in degrees and
screen positions in centimeters, the units the comparison table uses.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from . import reference_data as ref
from .core import DomainError
from .report import Row, Table


class EvanescentOrderError(DomainError):
    """Raised when J * wavelength / d exceeds 1, so no propagating maximum exists."""


@dataclass(frozen=True)
class DiffractionSetup:
    slit_spacing: float
    screen_distance: float
    wavelengths: tuple[tuple[str, float], ...]
    max_order: int = 2

    def __post_init__(self) -> None:
        if not self.slit_spacing > 0 or not self.screen_distance > 0:
            raise DomainError("slit spacing and screen distance must be positive")
        for label, wl in self.wavelengths:
            if not wl > 0:
                raise DomainError(f"wavelength {label!r} must be positive")
        if int(self.max_order) != self.max_order or self.max_order < 0:
            raise DomainError(f"max_order must be a non-negative integer, got {self.max_order!r}")


DEFAULT_SETUP = DiffractionSetup(
    slit_spacing=ref.DIFFRACTION_SLIT_SPACING_M,
    screen_distance=ref.DIFFRACTION_SCREEN_DISTANCE_M,
    wavelengths=(("blue", 485e-9), ("green", 565e-9), ("red", 750e-9)),
    max_order=2,
)


def diffraction_angle(order: int, wavelength: float, d: float) -> float:
    """Angle in degrees of maximum ``order``: ``arcsin(order * wavelength / d)``."""
    ratio = order * wavelength / d
    if abs(ratio) > 1.0:
        raise EvanescentOrderError(
            f"order {order} at {wavelength:g} m with d={d:g} m has no propagating maximum "
            f"(J*lambda/d = {ratio:.6g} > 1)"
        )
    return math.degrees(math.asin(ratio))


def screen_position(theta_deg: float, x: float) -> float:
    """Screen offset ``x * tan(theta)`` in centimeters for ``x`` in meters."""
    if not abs(theta_deg) < 90.0:
        raise DomainError(f"|theta| must be below 90 degrees, got {theta_deg}")
    return 100.0 * x * math.tan(math.radians(theta_deg))


@dataclass(frozen=True)
class SpectrumRow:
    label: str
    order: int
    wavelength: float
    theta: float
    y: float


def spectrum(setup: DiffractionSetup) -> list[SpectrumRow]:
    """Maxima for every wavelength and order 1..max_order, sorted by (order, wavelength).

    Orders without a propagating maximum are left out. ``max_order = 0``
    yields the zeroth order only.
    """
    orders = range(1, setup.max_order + 1) if setup.max_order > 0 else (0,)
    rows = []
    for order in orders:
        for label, wl in setup.wavelengths:
            try:
                theta = diffraction_angle(order, wl, setup.slit_spacing)
            except EvanescentOrderError:
                continue
            rows.append(SpectrumRow(label, order, wl, theta, screen_position(theta, setup.screen_distance)))
    rows.sort(key=lambda r: (r.order, r.wavelength))
    return rows


def spectrum_table(setup: DiffractionSetup, rows: list[SpectrumRow]) -> Table:
    printed = {(j, nm): (theta, y) for j, nm, _, theta, y in ref.DIFFRACTION_ROWS}
    same_geometry = (
        math.isclose(setup.slit_spacing, ref.DIFFRACTION_SLIT_SPACING_M, rel_tol=1e-12)
        and math.isclose(setup.screen_distance, ref.DIFFRACTION_SCREEN_DISTANCE_M, rel_tol=1e-12)
    )
    out = []
    for r in rows:
        nm = round(r.wavelength * 1e9, 6)
        paper = None
        if same_geometry and (r.order, nm) in printed:
            theta, y = printed[(r.order, nm)]
            paper = {"theta_deg": theta, "y_cm": y}
        out.append(
            Row(
                id=f"J={r.order},{r.label}",
                computed={"theta_deg": r.theta, "y_cm": r.y},
                paper=paper,
                info={"order": r.order, "wavelength_nm": nm},
            )
        )
    return Table(
        id="diffraction",
        caption="Grating maxima: angle and screen position per order and wavelength",
        rows=out,
        notes=[f"d = {setup.slit_spacing:g} m, x = {setup.screen_distance:g} m"],
    )


_UNITS = {"nm": 1e-9, "um": 1e-6, "µm": 1e-6, "mm": 1e-3, "cm": 1e-2, "m": 1.0}
_QUANTITY = re.compile(r"^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*([a-zµ]*)\s*$")


def parse_length(text: str, default_unit: str | None = None) -> float:
    """Parse ``"0.01mm"``, ``"2.0 m"`` or ``"485nm"`` into meters."""
    match = _QUANTITY.match(text)
    if not match:
        raise ValueError(f"cannot parse length {text!r}")
    unit = match.group(2) or default_unit
    if unit is None:
        raise ValueError(f"length {text!r} needs a unit (nm, um, mm, cm, m)")
    if unit not in _UNITS:
        raise ValueError(f"unknown unit {unit!r} in {text!r}")
    return float(match.group(1)) * _UNITS[unit]


def parse_wavelengths(text: str) -> tuple[tuple[str, float], ...]:
    """Parse ``"485,565,750nm"``; a trailing unit applies to items without one."""
    items = [t.strip() for t in text.split(",") if t.strip()]
    if not items:
        raise ValueError("no wavelengths given")
    tail = _QUANTITY.match(items[-1])
    default_unit = tail.group(2) if tail and tail.group(2) else "nm"
    out = []
    for item in items:
        meters = parse_length(item, default_unit)
        out.append((f"{meters * 1e9:g}nm", meters))
    return tuple(out)
