"""Closed-form quantum-mechanics predictions for the two-photon system.

Only pass/pass and block/block are given in closed form,
``pp = cos^2(a - b) / 2`` and ``nn = sin^2(a - b) / 2``. The correlator is
completed as ``E = 2 (pp - nn) = cos(2 (a - b))``, which is the standard
two-channel correlator, so ``E(a, a) = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ChshSetting, chsh_combine
from .hv_model import _out


@dataclass(frozen=True)
class QmJoint:
    pp: float
    nn: float


def qm_joint(a, b) -> QmJoint:
    rel = np.radians(np.asarray(a, dtype=float) - np.asarray(b, dtype=float))
    return QmJoint(_out(0.5 * np.cos(rel) ** 2), _out(0.5 * np.sin(rel) ** 2))


def qm_expected_value(a, b):
    joint = qm_joint(a, b)
    return _out(2.0 * (np.asarray(joint.pp) - np.asarray(joint.nn)))


def qm_chsh(setting: ChshSetting) -> float:
    values = [qm_expected_value(x, y) for x, y in setting.pairs()]
    return float(chsh_combine(*values))
