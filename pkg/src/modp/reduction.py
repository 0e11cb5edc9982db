"""Isobaric polynomials modulo a prime 𝔭 and the univariate tests on them."""

from __future__ import annotations

import logging
from typing import Any, Optional, Sequence

from src.arith import univariate as uni
from src.arith.finite_field import FieldCtx
from src.arith.primes import PrimeSpec
from src.arith.rings import ResidueField
from src.errors import NotPIntegral, RingMismatch, ZeroDivisor, ZeroPolynomial
from src.forms.isobaric import IsobaricPoly, phi_d, psi_d

logger = logging.getLogger(__name__)


class ResidueIso(IsobaricPoly):
    """An isobaric polynomial with coefficients in F_𝔭."""

    __slots__ = ()

    def __init__(self, ring: ResidueField, weight: int, coeffs: Sequence[Any] = ()) -> None:
        if not isinstance(ring, ResidueField):
            raise RingMismatch(f"ResidueIso needs a residue field, got {ring!r}")
        super().__init__(ring, weight, coeffs)

    @property
    def prime(self) -> PrimeSpec:
        return self.ring.prime  # type: ignore[attr-defined]


def iso_reduce(phi: IsobaricPoly, prime: PrimeSpec) -> ResidueIso:
    """Coefficientwise reduction mod 𝔭."""
    field = ResidueField(prime)
    if isinstance(phi, ResidueIso):
        if phi.ring != field:
            raise RingMismatch("already reduced modulo a different prime")
        return phi
    try:
        coeffs = [field.coerce_from(phi.ring, c) for c in phi.coeffs]
    except NotPIntegral as e:
        raise NotPIntegral(f"isobaric polynomial is not {prime}-integral") from e
    return ResidueIso(field, phi.weight, coeffs)


def phi_bar(ctx: FieldCtx, d: int, prime: PrimeSpec) -> ResidueIso:
    return iso_reduce(phi_d(ctx, d), prime)


def iso_divides(a: ResidueIso, b: ResidueIso) -> Optional[ResidueIso]:
    """Quotient b / a as isobaric polynomials, or None if a does not divide b.

    In the univariate picture a | b exactly when p_a | p_b and the quotient has
    degree at most w_b - w_a.
    """
    if a.ring != b.ring:
        raise RingMismatch("isobaric polynomials reduced modulo different primes")
    if a.is_zero():
        raise ZeroDivisor("division by the zero isobaric polynomial")
    if b.w < a.w:
        return None
    ring, w = a.ring, b.w - a.w
    if b.is_zero():
        return ResidueIso(ring, b.weight - a.weight)
    quot, rem = uni.divrem(ring, b.univariate, a.univariate)
    if rem or len(quot) - 1 > w:
        return None
    return ResidueIso(ring, b.weight - a.weight, quot)


def squarefree(a: ResidueIso) -> bool:
    """No repeated factor: U and V at most once each and gcd(p, p') = 1 on the rest."""
    if a.is_zero():
        raise ZeroPolynomial("square-freeness of the zero polynomial")
    if a.u_exponent() > 1 or a.v_exponent() > 1:
        return False
    ring = a.ring
    core = a.univariate[a.v_exponent():]
    if len(core) <= 2:
        return True
    deriv = uni.strip(ring, uni.derivative(ring, core))
    if not deriv:
        return False
    return len(uni.gcd(ring, core, deriv)) == 1


def iso_coprime(a: ResidueIso, b: ResidueIso) -> bool:
    """True when a and b share no nonconstant isobaric factor."""
    if a.is_zero() or b.is_zero():
        return False
    if a.u_exponent() > 0 and b.u_exponent() > 0:
        return False
    return len(uni.gcd(a.ring, a.univariate, b.univariate)) == 1


def coprime_with_phi(d: int, prime: PrimeSpec) -> bool:
    """gcd(ψ̄_d, φ̄_d) = 1."""
    ctx = prime.ctx
    psi = iso_reduce(psi_d(ctx, d), prime)
    phi = phi_bar(ctx, d, prime)
    result = iso_coprime(psi, phi)
    logger.debug("psi_%d and phi_%d coprime modulo %s: %s", d, d, prime, result)
    return result


def phi_minus_one_irreducible(prime: PrimeSpec) -> bool:
    """Irreducibility of φ̄_d - 1 for d = deg π; only d = 1 is decided."""
    if prime.d == 1:
        # φ̄_1 - 1 = U + cV - 1 has total degree 1
        return True
    raise NotImplementedError(f"irreducibility of phi_{prime.d} - 1 is only decided for d = 1")
