"""The Carlitz module C_T = TX + X^q and the expansions u(az) it drives."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from src.arith.apoly import APoly
from src.arith.rings import PolynomialRing
from src.errors import NotMonic, ZeroMultiplier
from src.series.useries import USeries


@dataclass(frozen=True)
class CarlitzPoly:
    """C_a(X) = sum_i coeffs[i] * X^(q^i)."""

    a: APoly
    coeffs: Tuple[APoly, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def compose_T(self) -> "CarlitzPoly":
        """C_{Ta} = C_T o C_a = T*C_a + C_a^q."""
        ctx = self.a.ctx
        T = APoly.T(ctx)
        out: List[APoly] = [T * c for c in self.coeffs] + [APoly.zero(ctx)]
        for i, c in enumerate(self.coeffs):
            out[i + 1] = out[i + 1] + c ** ctx.q
        return CarlitzPoly(T * self.a, tuple(out))


def carlitz_poly(a: APoly) -> CarlitzPoly:
    """C_a by Horner's rule in C_T, using F_q-linearity."""
    if a.is_zero():
        raise ZeroMultiplier("the Carlitz action of 0 is the zero map")
    ctx = a.ctx
    coeffs = a.coeffs()
    poly = CarlitzPoly(APoly.constant(ctx, coeffs[-1]), (APoly.constant(ctx, coeffs[-1]),))
    for c in reversed(coeffs[:-1]):
        poly = poly.compose_T()
        head = poly.coeffs[0] + APoly.constant(ctx, c)
        poly = CarlitzPoly(poly.a + APoly.constant(ctx, c), (head,) + poly.coeffs[1:])
    return poly


def u_unit_part(a: APoly, prec: int) -> USeries:
    """The unit 1/(1 + sum_{i<n} c_i u^(q^n - q^i)) with u(az) = u^(q^n) times it."""
    if not a.is_monic():
        raise NotMonic(f"u(az) is only built for monic a, got {a}")
    ring = PolynomialRing(a.ctx)
    q = a.ctx.q
    C = carlitz_poly(a)
    n = C.degree
    terms = {q**n - q**i: C.coeffs[i] for i in range(n)}
    terms[0] = ring.one
    return USeries(ring, prec, terms).inverse()


def u_scaled(a: APoly, prec: int) -> USeries:
    """u(az) for monic a, known modulo u^prec."""
    if not a.is_monic():
        raise NotMonic(f"u(az) is only built for monic a, got {a}")
    ring = PolynomialRing(a.ctx)
    lead = a.ctx.q ** a.degree
    if lead >= prec:
        return USeries.zero(ring, prec)
    return u_unit_part(a, prec - lead).shift(lead)


def u_scaled_power(a: APoly, e: int, prec: int) -> USeries:
    """u(az)^e, powering only the unit part."""
    if not a.is_monic():
        raise NotMonic(f"u(az) is only built for monic a, got {a}")
    ring = PolynomialRing(a.ctx)
    lead = e * a.ctx.q ** a.degree
    if lead >= prec:
        return USeries.zero(ring, prec)
    return (u_unit_part(a, prec - lead) ** e).shift(lead)
