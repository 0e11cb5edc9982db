"""Weight filtration and congruence of forms modulo a prime 𝔭."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, Optional, Union

from src.arith.primes import PrimeSpec
from src.forms.generators import GeneratorCache, default_cache
from src.forms.graded import GradedForm, gd_form, partial, to_series
from src.modp.reduction import ResidueIso, iso_divides, iso_reduce, phi_bar
from src.series.useries import series_reduce

logger = logging.getLogger(__name__)

MINUS_INFINITY = -math.inf


@dataclass(frozen=True)
class FiltrationResult:
    value: Union[int, float]
    steps: int
    witness: ResidueIso

    @property
    def is_minus_infinity(self) -> bool:
        return self.value == MINUS_INFINITY

    def to_json(self) -> Dict[str, Any]:
        return {
            "w": "-inf" if self.is_minus_infinity else int(self.value),
            "steps": self.steps,
            "witness": self.witness.to_json(),
        }


def filtration(f: GradedForm, prime: PrimeSpec) -> FiltrationResult:
    """w(f̄): strip factors of φ̄_d (d = deg π) from the reduction of f."""
    reduced = iso_reduce(f.iso, prime)
    if reduced.is_zero():
        return FiltrationResult(MINUS_INFINITY, 0, reduced)
    ctx = prime.ctx
    d = prime.d
    phi = phi_bar(ctx, d, prime)
    step = ctx.q**d - 1
    current, m = reduced, 0
    while True:
        quot = iso_divides(phi, current)
        if quot is None:
            break
        current, m = quot, m + 1
        logger.debug("filtration: divided by phi_%d, step %d, weight %d", d, m, f.k - m * step)
    return FiltrationResult(f.k - m * step, m, current)


@dataclass(frozen=True)
class CongruenceEvidence:
    congruent: bool
    same_type: bool
    m: Optional[int]
    reason: str

    def to_json(self) -> Dict[str, Any]:
        return {
            "congruent": self.congruent,
            "same_type": self.same_type,
            "m": self.m,
            "reason": self.reason,
        }


def congruence_evidence(f: GradedForm, g: GradedForm, prime: PrimeSpec) -> CongruenceEvidence:
    """Decide f ≡ g (mod 𝔭) via φ̄_f = φ̄_g φ̄_d^m, m = (k_f - k_g)/(q^d - 1)."""
    same_type = f.l == g.l
    red_f, red_g = iso_reduce(f.iso, prime), iso_reduce(g.iso, prime)
    if red_f.is_zero() and red_g.is_zero():
        return CongruenceEvidence(True, same_type, None, "both forms reduce to zero")
    if not same_type:
        return CongruenceEvidence(False, False, None, f"types {f.l} and {g.l} differ")
    if red_f.is_zero() or red_g.is_zero():
        return CongruenceEvidence(False, True, None, "exactly one form reduces to zero")
    step = prime.ctx.q**prime.d - 1
    if (f.k - g.k) % step:
        return CongruenceEvidence(
            False, True, None, f"weights {f.k} and {g.k} differ modulo {step}"
        )
    if f.k < g.k:
        red_f, red_g = red_g, red_f
    m = abs(f.k - g.k) // step
    phi = phi_bar(prime.ctx, prime.d, prime)
    if red_f == red_g * phi**m:
        return CongruenceEvidence(True, True, m, f"reductions differ by phi_{prime.d}^{m}")
    return CongruenceEvidence(False, True, m, f"reductions do not differ by phi_{prime.d}^{m}")


def congruent(f: GradedForm, g: GradedForm, prime: PrimeSpec) -> bool:
    return congruence_evidence(f, g, prime).congruent


def verify_E_congruence(
    prime: PrimeSpec, prec: int, cache: Optional[GeneratorCache] = None
) -> bool:
    """E ≡ -∂(g_d) (mod 𝔭) up to u^prec, d = deg π.

    With ∂_k = Θ + kE and k = q^d - 1 ≡ -1, g_d ≡ 1 gives ∂(g_d) ≡ -E.
    """
    ctx = prime.ctx
    cache = cache or default_cache(ctx)
    lhs = series_reduce(cache.series("E", prec), prime)
    rhs = series_reduce(to_series(partial(gd_form(ctx, prime.d)), prec, cache), prime)
    return lhs == -rhs


def verify_Ep_congruence(
    prime: PrimeSpec, prec: int, cache: Optional[GeneratorCache] = None
) -> bool:
    """E_𝔭 = E - π E(πz) ≡ E (mod 𝔭) up to u^prec."""
    cache = cache or default_cache(prime.ctx)
    ep = series_reduce(cache.series("Ep", prec, prime), prime)
    return ep == series_reduce(cache.series("E", prec), prime)
