"""Exact arithmetic for F_q, A = F_q[T], K = F_q(T) and residue fields A/𝔭."""

from .apoly import APoly, format_apoly, format_fq
from .finite_field import FieldCtx, FqElem, make_field_ctx
from .kfrac import KFrac
from .primes import PrimeSpec, ResidueCtx, is_irreducible, monic_polys, residue_map, validate_prime, vp
from .rings import CoefficientRing, FractionField, PolynomialRing, ResidueField, ring_from_tag

__all__ = [
    "APoly",
    "CoefficientRing",
    "FieldCtx",
    "FqElem",
    "FractionField",
    "KFrac",
    "PolynomialRing",
    "PrimeSpec",
    "ResidueCtx",
    "ResidueField",
    "apoly_arith",
    "format_apoly",
    "format_fq",
    "is_irreducible",
    "make_field_ctx",
    "monic_polys",
    "residue_map",
    "ring_from_tag",
    "validate_prime",
    "vp",
]


def apoly_arith(kind: str, a: APoly, b: APoly):
    """Dispatch one of add|mul|divrem|gcd|exact_div on two polynomials."""
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "divrem":
        return a.divrem(b)
    if kind == "gcd":
        return a.gcd(b)
    if kind == "exact_div":
        return a.exact_div(b)
    raise ValueError(f"unknown polynomial operation {kind!r}")
