"""Exact truncated cohomology-ring engine."""
from ._backend import BACKEND
from .chern import ChernData, c_to_ch, ch_to_c, chern_character, chern_class
from .ring import (
    DEFAULT_TRUNCATION,
    GradedClass,
    RingSpec,
    Rule,
    curve_ring,
    default_truncation,
    fibration_ring,
    section_ring,
)
from .series import P, exp, inverse, ratio_coefficients, series_ratio

__all__ = [
    "BACKEND", "ChernData", "c_to_ch", "ch_to_c", "chern_character", "chern_class",
    "DEFAULT_TRUNCATION", "GradedClass", "RingSpec", "Rule", "curve_ring",
    "default_truncation", "fibration_ring", "section_ring",
    "P", "exp", "inverse", "ratio_coefficients", "series_ratio",
]
