"""Accretive and sectorial matrix toolkit with an executable inequality registry."""

__version__ = "0.1.0"

from .blocks import Block2x2, is_apt, is_block_accretive, is_ppt, partial_transpose
from .core import (
    DEFAULT_TOL,
    Tolerance,
    is_pd,
    is_psd,
    ky_fan_norm,
    ky_fan_norms,
    loewner_leq,
    polar_decomposition,
    singular_values,
)
from .functions import Omf, apply_omf, principal_power
from .means import adjoint_mean, arithmetic_mean, geometric_mean, mean_sigma
from .sectorial import is_accretive, is_strictly_accretive, sector_angle

__all__ = [
    "Block2x2",
    "DEFAULT_TOL",
    "Omf",
    "Tolerance",
    "adjoint_mean",
    "apply_omf",
    "arithmetic_mean",
    "geometric_mean",
    "is_accretive",
    "is_apt",
    "is_block_accretive",
    "is_pd",
    "is_ppt",
    "is_psd",
    "is_strictly_accretive",
    "ky_fan_norm",
    "ky_fan_norms",
    "loewner_leq",
    "mean_sigma",
    "partial_transpose",
    "polar_decomposition",
    "principal_power",
    "sector_angle",
    "singular_values",
]
