"""Hom-Lie-Rinehart computer algebra over exact rationals."""

from _homlr import (
    InputError,
    MathError,
    bv_check,
    center,
    check,
    coboundary_matrix,
    cohomology_dim,
    extension_roundtrip,
    gerstenhaber_check,
    kaehler,
    poisson_hom_lr,
)

__all__ = [
    "InputError",
    "MathError",
    "bv_check",
    "center",
    "check",
    "coboundary_matrix",
    "cohomology_dim",
    "extension_roundtrip",
    "gerstenhaber_check",
    "kaehler",
    "poisson_hom_lr",
]
