"""Primes 𝔭 = (π) of A, 𝔭-adic valuations and the residue field A/𝔭."""

from __future__ import annotations

import itertools
import logging
import math
import random
from dataclasses import dataclass
from typing import Iterator, Union

from src.arith.apoly import APoly
from src.arith.finite_field import FieldCtx
from src.arith.kfrac import KFrac
from src.errors import DivisionByZero, NotMonic, NotPIntegral, PrimeIsT, Reducible

logger = logging.getLogger(__name__)

Valuation = Union[int, float]  # float only for math.inf


@dataclass(frozen=True)
class PrimeSpec:
    pi: APoly
    d: int

    @property
    def ctx(self) -> FieldCtx:
        return self.pi.ctx

    def __str__(self) -> str:
        return str(self.pi)


def monic_polys(ctx: FieldCtx, degree: int) -> Iterator[APoly]:
    """All q^degree monic polynomials of the given degree."""
    elems = list(ctx.elements())
    for tail in itertools.product(elems, repeat=degree):
        yield APoly.from_coeffs(ctx, list(tail) + [ctx.one])


def is_irreducible(pi: APoly) -> bool:
    """Root search for degree <= 2, trial division by monic factors otherwise."""
    d = pi.degree
    if d < 1:
        return False
    if d == 1:
        return True
    if d == 2:
        return all(not pi(x).is_zero() for x in pi.ctx.elements())
    for k in range(1, d // 2 + 1):
        for factor in monic_polys(pi.ctx, k):
            if (pi % factor).is_zero():
                return False
    return True


def validate_prime(pi: APoly) -> PrimeSpec:
    """Check that π is monic, irreducible and different from T.

    Raises:
        NotMonic, Reducible, PrimeIsT
    """
    if pi.is_zero():
        raise Reducible("the zero polynomial does not generate a prime")
    if not pi.is_monic():
        raise NotMonic(f"prime generator {pi} is not monic")
    if pi == APoly.T(pi.ctx):
        raise PrimeIsT("the prime (T) is excluded: phi_1 reduces to U modulo T")
    if not is_irreducible(pi):
        raise Reducible(f"{pi} is reducible over F_{pi.ctx.q}")
    logger.debug("Validated prime %s of degree %d", pi, pi.degree)
    return PrimeSpec(pi=pi, d=pi.degree)


def vp(x: APoly | KFrac, prime: PrimeSpec) -> Valuation:
    """π-adic valuation; math.inf for zero."""
    if isinstance(x, KFrac):
        if x.is_zero():
            return math.inf
        return vp(x.num, prime) - vp(x.den, prime)
    if x.is_zero():
        return math.inf
    n = 0
    while True:
        quot, rem = x.divrem(prime.pi)
        if not rem.is_zero():
            return n
        x, n = quot, n + 1


class ResidueCtx:
    """The residue field F_𝔭 = A/(π) ≅ F_{q^d}; elements are APoly of degree < d."""

    def __init__(self, prime: PrimeSpec) -> None:
        self.prime = prime

    @property
    def ctx(self) -> FieldCtx:
        return self.prime.ctx

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ResidueCtx) and self.prime == other.prime

    def __hash__(self) -> int:
        return hash(("ResidueCtx", self.prime))

    def reduce(self, a: APoly) -> APoly:
        if a.degree < self.prime.d:
            return a
        return a % self.prime.pi

    def add(self, a: APoly, b: APoly) -> APoly:
        return a + b

    def mul(self, a: APoly, b: APoly) -> APoly:
        return self.reduce(a * b)

    def inverse(self, a: APoly) -> APoly:
        if self.reduce(a).is_zero():
            raise DivisionByZero("inverse of zero in the residue field")
        g, s, _ = a.gcdext(self.prime.pi)
        if g.degree != 0:
            raise DivisionByZero(f"{a} is not invertible modulo {self.prime.pi}")
        return self.reduce(s)

    def elements(self) -> Iterator[APoly]:
        elems = list(self.ctx.elements())
        for coeffs in itertools.product(elems, repeat=self.prime.d):
            yield APoly.from_coeffs(self.ctx, coeffs)

    def random_element(self, rng: random.Random) -> APoly:
        return APoly.random(self.ctx, rng, self.prime.d - 1)


def residue_map(x: APoly | KFrac, prime: PrimeSpec) -> APoly:
    """Image of a 𝔭-integral element in F_𝔭, as its representative of degree < d."""
    field = ResidueCtx(prime)
    if isinstance(x, APoly):
        return field.reduce(x)
    if x.is_zero():
        return APoly.zero(x.ctx)
    if vp(x, prime) < 0:
        raise NotPIntegral(f"{x} has negative {prime}-adic valuation")
    return field.mul(field.reduce(x.num), field.inverse(x.den))
