"""Generators, isobaric polynomials and the graded algebra of forms for Γ₀(T)."""

from .carlitz import CarlitzPoly, carlitz_poly, u_scaled
from .generators import GENERATOR_NAMES, GeneratorCache, default_cache, false_eisenstein, gen_gd, gen_series
from .graded import (
    GRADED_NAMES,
    GradedForm,
    b_coefficients,
    cT,
    dimension,
    equality_bound,
    from_series,
    gd_form,
    graded_mul,
    named_form,
    partial,
    partial_series,
    to_series,
    victor_miller,
)
from .isobaric import IsobaricPoly, phi_d, psi_d

__all__ = [
    "CarlitzPoly",
    "GENERATOR_NAMES",
    "GRADED_NAMES",
    "GeneratorCache",
    "GradedForm",
    "IsobaricPoly",
    "b_coefficients",
    "cT",
    "carlitz_poly",
    "default_cache",
    "dimension",
    "equality_bound",
    "false_eisenstein",
    "from_series",
    "gd_form",
    "gen_gd",
    "gen_series",
    "graded_mul",
    "named_form",
    "partial",
    "partial_series",
    "phi_d",
    "psi_d",
    "to_series",
    "u_scaled",
    "victor_miller",
]
