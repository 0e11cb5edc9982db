"""Reduction modulo a prime 𝔭 = (π) ≠ (T): φ̄_d, filtration, congruences."""

from .filtration import (
    MINUS_INFINITY,
    CongruenceEvidence,
    FiltrationResult,
    congruence_evidence,
    congruent,
    filtration,
    verify_E_congruence,
    verify_Ep_congruence,
)
from .reduction import (
    ResidueIso,
    coprime_with_phi,
    iso_coprime,
    iso_divides,
    iso_reduce,
    phi_bar,
    phi_minus_one_irreducible,
    squarefree,
)

__all__ = [
    "MINUS_INFINITY",
    "CongruenceEvidence",
    "FiltrationResult",
    "ResidueIso",
    "congruence_evidence",
    "congruent",
    "coprime_with_phi",
    "filtration",
    "iso_coprime",
    "iso_divides",
    "iso_reduce",
    "phi_bar",
    "phi_minus_one_irreducible",
    "squarefree",
    "verify_E_congruence",
    "verify_Ep_congruence",
]
