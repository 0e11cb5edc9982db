"""Coefficient rings for u-series and isobaric polynomials: A, K and F_𝔭.

Series and isobaric polynomials are generic over one of these three rings.
Each ring object owns the operations on its elements, so residue-field
elements (plain APoly representatives) are reduced where they need to be.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from typing import Any, Literal

from src.arith.apoly import APoly
from src.arith.finite_field import FieldCtx
from src.arith.kfrac import KFrac
from src.arith.primes import PrimeSpec, ResidueCtx, residue_map
from src.errors import DivisionByZero, InexactDivision, RingMismatch

RingTag = Literal["A", "K", "Fpd"]


class CoefficientRing(ABC):
    tag: RingTag

    def __init__(self, ctx: FieldCtx) -> None:
        self.ctx = ctx

    # --- element factory -------------------------------------------------------

    @property
    @abstractmethod
    def zero(self) -> Any: ...

    @property
    @abstractmethod
    def one(self) -> Any: ...

    @abstractmethod
    def from_apoly(self, a: APoly) -> Any: ...

    # --- arithmetic ---------------------------------------------------------------

    def add(self, a: Any, b: Any) -> Any:
        return a + b

    def sub(self, a: Any, b: Any) -> Any:
        return a - b

    def neg(self, a: Any) -> Any:
        return -a

    def mul(self, a: Any, b: Any) -> Any:
        return a * b

    def scale(self, a: Any, n: int) -> Any:
        """Multiply by the integer n, read in the prime field."""
        return a * (n % self.ctx.p)

    def is_zero(self, a: Any) -> bool:
        return a.is_zero()

    def eq(self, a: Any, b: Any) -> bool:
        return a == b

    @abstractmethod
    def is_unit(self, a: Any) -> bool: ...

    @abstractmethod
    def inverse(self, a: Any) -> Any: ...

    @abstractmethod
    def exact_div(self, a: Any, b: Any) -> Any: ...

    def power(self, a: Any, n: int) -> Any:
        result, base = self.one, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    # --- wire format --------------------------------------------------------------

    @abstractmethod
    def encode(self, a: Any) -> Any: ...

    @abstractmethod
    def decode(self, data: Any) -> Any: ...

    @abstractmethod
    def random_element(self, rng: random.Random, max_degree: int) -> Any: ...

    def coerce_from(self, other: "CoefficientRing", a: Any) -> Any:
        """Map an element of `other` into this ring (A -> K, A/K -> F_𝔭)."""
        if other == self:
            return a
        raise RingMismatch(f"no map from ring {other.tag} to ring {self.tag}")

    def __eq__(self, other: object) -> bool:
        return type(other) is type(self) and self._key() == other._key()  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash(self._key())

    def _key(self) -> tuple:
        return (self.tag, self.ctx)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(q={self.ctx.q})"


class PolynomialRing(CoefficientRing):
    """A = F_q[T]."""

    tag: RingTag = "A"

    @property
    def zero(self) -> APoly:
        return APoly.zero(self.ctx)

    @property
    def one(self) -> APoly:
        return APoly.one(self.ctx)

    @property
    def T(self) -> APoly:
        return APoly.T(self.ctx)

    def from_apoly(self, a: APoly) -> APoly:
        return a

    def is_unit(self, a: APoly) -> bool:
        return a.degree == 0

    def inverse(self, a: APoly) -> APoly:
        if not self.is_unit(a):
            raise DivisionByZero(f"{a} is not a unit of A")
        return APoly.constant(self.ctx, a.leading.inverse())

    def exact_div(self, a: APoly, b: APoly) -> APoly:
        return a.exact_div(b)

    def encode(self, a: APoly) -> Any:
        return a.to_json()

    def decode(self, data: Any) -> APoly:
        return APoly.from_json(self.ctx, data)

    def random_element(self, rng: random.Random, max_degree: int) -> APoly:
        return APoly.random(self.ctx, rng, max_degree)


class FractionField(CoefficientRing):
    """K = F_q(T)."""

    tag: RingTag = "K"

    @property
    def zero(self) -> KFrac:
        return KFrac(APoly.zero(self.ctx))

    @property
    def one(self) -> KFrac:
        return KFrac(APoly.one(self.ctx))

    def from_apoly(self, a: APoly) -> KFrac:
        return KFrac(a)

    def is_unit(self, a: KFrac) -> bool:
        return not a.is_zero()

    def inverse(self, a: KFrac) -> KFrac:
        return a.inverse()

    def exact_div(self, a: KFrac, b: KFrac) -> KFrac:
        return a / b

    def encode(self, a: KFrac) -> Any:
        return a.to_json()

    def decode(self, data: Any) -> KFrac:
        if isinstance(data, dict):
            return KFrac.from_json(self.ctx, data)
        return KFrac(APoly.from_json(self.ctx, data))

    def random_element(self, rng: random.Random, max_degree: int) -> KFrac:
        den = APoly.zero(self.ctx)
        while den.is_zero():
            den = APoly.random(self.ctx, rng, max_degree)
        return KFrac(APoly.random(self.ctx, rng, max_degree), den)

    def coerce_from(self, other: CoefficientRing, a: Any) -> KFrac:
        if isinstance(other, PolynomialRing) and other.ctx == self.ctx:
            return KFrac(a)
        return super().coerce_from(other, a)


class ResidueField(CoefficientRing):
    """F_𝔭 = A/(π); elements are APoly representatives of degree < d."""

    tag: RingTag = "Fpd"

    def __init__(self, prime: PrimeSpec) -> None:
        super().__init__(prime.ctx)
        self.prime = prime
        self.residue = ResidueCtx(prime)

    def _key(self) -> tuple:
        return (self.tag, self.ctx, self.prime)

    @property
    def zero(self) -> APoly:
        return APoly.zero(self.ctx)

    @property
    def one(self) -> APoly:
        return APoly.one(self.ctx)

    def from_apoly(self, a: APoly) -> APoly:
        return self.residue.reduce(a)

    def mul(self, a: APoly, b: APoly) -> APoly:
        return self.residue.mul(a, b)

    def is_unit(self, a: APoly) -> bool:
        return not a.is_zero()

    def inverse(self, a: APoly) -> APoly:
        return self.residue.inverse(a)

    def exact_div(self, a: APoly, b: APoly) -> APoly:
        if b.is_zero():
            raise InexactDivision("division by zero in the residue field")
        return self.residue.mul(a, self.residue.inverse(b))

    def encode(self, a: APoly) -> Any:
        return a.to_json()

    def decode(self, data: Any) -> APoly:
        return self.residue.reduce(APoly.from_json(self.ctx, data))

    def random_element(self, rng: random.Random, max_degree: int) -> APoly:
        return self.residue.random_element(rng)

    def coerce_from(self, other: CoefficientRing, a: Any) -> APoly:
        if isinstance(other, (PolynomialRing, FractionField)) and other.ctx == self.ctx:
            return residue_map(a, self.prime)
        return super().coerce_from(other, a)

    def __repr__(self) -> str:
        return f"ResidueField(q={self.ctx.q}, pi={self.prime.pi})"


def ring_from_tag(tag: str, ctx: FieldCtx, prime: PrimeSpec | None = None) -> CoefficientRing:
    if tag == "A":
        return PolynomialRing(ctx)
    if tag == "K":
        return FractionField(ctx)
    if tag == "Fpd":
        if prime is None:
            raise RingMismatch("ring 'Fpd' needs a prime")
        return ResidueField(prime)
    raise RingMismatch(f"unknown ring tag {tag!r}")
