"""CHSH quantities for a polarization hidden-variable model and the QM closed form."""

__version__ = "0.1.0"

from .core import (
    ChshSetting,
    DomainError,
    JointQuantities,
    PolarizationGrid,
    equal_spacing_setting,
    make_grid,
    normalize_angle,
)
from .hv_model import (
    chsh_population,
    chsh_single,
    ensemble_joint,
    expected_value_population,
    expected_value_single,
    joint_quantities,
    mc_expected_value,
    pass_projection,
)
from .qm_model import qm_chsh, qm_expected_value, qm_joint
