"""Truncated u-power series over A, K or F_𝔭.

A USeries is known modulo u^prec. Terms are stored sparsely: expansions of
forms of type l live on exponents congruent to l mod q-1, so most slots are
structurally zero.
"""

from __future__ import annotations

import logging
import math
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple, Union

from src.arith.apoly import APoly
from src.arith.finite_field import FieldCtx
from src.arith.primes import PrimeSpec, vp
from src.arith.rings import CoefficientRing, ResidueField, ring_from_tag
from src.errors import (
    InexactDivision,
    InexactSeriesDivision,
    InnerValuationZero,
    NonUnitConstantTerm,
    NotPIntegral,
    PrecisionTooLow,
    RingMismatch,
)

logger = logging.getLogger(__name__)

Terms = Dict[int, Any]


class USeries:
    __slots__ = ("ring", "prec", "_terms")

    def __init__(
        self,
        ring: CoefficientRing,
        prec: int,
        terms: Union[Mapping[int, Any], Iterable[Tuple[int, Any]]] = (),
    ) -> None:
        if prec < 0:
            raise PrecisionTooLow(f"negative precision {prec}")
        self.ring = ring
        self.prec = prec
        items = terms.items() if isinstance(terms, Mapping) else terms
        self._terms: Terms = {
            int(n): c for n, c in items if 0 <= n < prec and not ring.is_zero(c)
        }

    # --- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, ring: CoefficientRing, prec: int) -> "USeries":
        return cls(ring, prec)

    @classmethod
    def constant(cls, ring: CoefficientRing, c: Any, prec: int) -> "USeries":
        return cls(ring, prec, {0: c})

    @classmethod
    def one(cls, ring: CoefficientRing, prec: int) -> "USeries":
        return cls.constant(ring, ring.one, prec)

    @classmethod
    def monomial(cls, ring: CoefficientRing, n: int, prec: int, c: Any = None) -> "USeries":
        return cls(ring, prec, {n: ring.one if c is None else c})

    @classmethod
    def from_json(
        cls, data: Mapping[str, Any], ctx: FieldCtx, prime: Optional[PrimeSpec] = None
    ) -> "USeries":
        ring = ring_from_tag(data["ring"], ctx, prime)
        terms = [(int(n), ring.decode(c)) for n, c in data["terms"]]
        return cls(ring, int(data["prec"]), terms)

    def to_json(self) -> Dict[str, Any]:
        return {
            "ring": self.ring.tag,
            "prec": self.prec,
            "terms": [[n, self.ring.encode(c)] for n, c in self.terms],
        }

    # --- inspection --------------------------------------------------------------

    @property
    def terms(self) -> List[Tuple[int, Any]]:
        return sorted(self._terms.items())

    def __getitem__(self, n: int) -> Any:
        if n >= self.prec:
            raise PrecisionTooLow(f"coefficient of u^{n} is beyond precision {self.prec}")
        return self._terms.get(n, self.ring.zero)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def valuation(self) -> Union[int, float]:
        """u-adic valuation of the stored truncation (math.inf for zero)."""
        return min(self._terms) if self._terms else math.inf

    def truncate(self, prec: int) -> "USeries":
        if prec >= self.prec:
            return self
        return USeries(self.ring, prec, self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, USeries):
            return NotImplemented
        if self.ring != other.ring:
            return False
        n = min(self.prec, other.prec)
        a = {k: v for k, v in self._terms.items() if k < n}
        b = {k: v for k, v in other._terms.items() if k < n}
        if a.keys() != b.keys():
            return False
        return all(self.ring.eq(a[k], b[k]) for k in a)

    __hash__ = None  # type: ignore[assignment]

    def first_difference(self, other: "USeries") -> Optional[int]:
        """Smallest exponent below the common precision where the two differ."""
        n = min(self.prec, other.prec)
        for k in sorted(set(self._terms) | set(other._terms)):
            if k >= n:
                break
            if not self.ring.eq(self[k], other[k]):
                return k
        return None

    def __repr__(self) -> str:
        shown = ", ".join(f"{c}*u^{n}" for n, c in self.terms[:4])
        more = ", ..." if len(self._terms) > 4 else ""
        return f"USeries({self.ring.tag}, prec={self.prec}: {shown}{more})"

    # --- arithmetic ----------------------------------------------------------------

    def _check(self, other: "USeries") -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"series over {self.ring!r} and {other.ring!r}")

    def __add__(self, other: "USeries") -> "USeries":
        self._check(other)
        ring = self.ring
        prec = min(self.prec, other.prec)
        out = {n: c for n, c in self._terms.items() if n < prec}
        for n, c in other._terms.items():
            if n >= prec:
                continue
            out[n] = ring.add(out[n], c) if n in out else c
        return USeries(ring, prec, out)

    def __neg__(self) -> "USeries":
        return USeries(self.ring, self.prec, {n: self.ring.neg(c) for n, c in self._terms.items()})

    def __sub__(self, other: "USeries") -> "USeries":
        return self + (-other)

    def __mul__(self, other: Union["USeries", int]) -> "USeries":
        if isinstance(other, int):
            return self.scale_int(other)
        self._check(other)
        prec = min(self.prec, other.prec)
        return USeries(self.ring, prec, _mul_terms(self.ring, self._terms, other._terms, prec))

    __rmul__ = __mul__

    def scale(self, c: Any) -> "USeries":
        ring = self.ring
        return USeries(ring, self.prec, {n: ring.mul(c, a) for n, a in self._terms.items()})

    def scale_int(self, n: int) -> "USeries":
        ring = self.ring
        return USeries(ring, self.prec, {k: ring.scale(a, n) for k, a in self._terms.items()})

    def shift(self, k: int) -> "USeries":
        """Multiply by u^k (k >= 0); the known precision grows by k."""
        return USeries(self.ring, self.prec + k, {n + k: c for n, c in self._terms.items()})

    def frobenius(self) -> "USeries":
        """f^p, using (Σ a_n u^n)^p = Σ a_n^p u^(np) in characteristic p."""
        ring, p = self.ring, self.ring.ctx.p
        return USeries(
            ring, self.prec * p, {n * p: ring.power(c, p) for n, c in self._terms.items()}
        )

    def __pow__(self, n: int) -> "USeries":
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return USeries.one(self.ring, self.prec)
        p = self.ring.ctx.p
        if n % p == 0:
            return (self ** (n // p)).frobenius().truncate(self.prec)
        result: Optional[USeries] = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        assert result is not None
        return result

    def inverse(self) -> "USeries":
        """Multiplicative inverse; the constant term must be a unit."""
        ring = self.ring
        a0 = self._terms.get(0)
        if a0 is None or not ring.is_unit(a0):
            raise NonUnitConstantTerm(f"constant term {a0} is not a unit")
        inv0 = ring.inverse(a0)
        tail = [(k, c) for k, c in self.terms if k > 0]
        out: Terms = {0: inv0}
        for n in range(1, self.prec):
            acc = None
            for k, c in tail:
                if k > n:
                    break
                b = out.get(n - k)
                if b is None:
                    continue
                prod = ring.mul(c, b)
                acc = prod if acc is None else ring.add(acc, prod)
            if acc is not None and not ring.is_zero(acc):
                out[n] = ring.neg(ring.mul(acc, inv0))
        return USeries(ring, self.prec, out)

    def exact_div_scalar(self, c: Any) -> "USeries":
        ring = self.ring
        try:
            return USeries(ring, self.prec, {n: ring.exact_div(a, c) for n, a in self._terms.items()})
        except InexactDivision as e:
            raise InexactSeriesDivision(f"series coefficients are not divisible by {c}") from e

    def exact_div(self, other: "USeries") -> "USeries":
        """Quotient f/g when g divides f to working precision."""
        self._check(other)
        ring = self.ring
        if other.is_zero():
            raise InexactSeriesDivision("division by the zero series")
        v = int(other.valuation)
        prec = min(self.prec, other.prec) - v
        if self.is_zero():
            return USeries.zero(ring, max(prec, 0))
        if self.valuation < v:
            raise InexactSeriesDivision(
                f"valuation {self.valuation} of dividend is below divisor valuation {v}"
            )
        num = {n - v: c for n, c in self._terms.items()}
        den = sorted((n - v, c) for n, c in other._terms.items())
        lead = den[0][1]
        out: Terms = {}
        try:
            for n in range(prec):
                acc = num.get(n)
                for k, c in den[1:]:
                    if k > n:
                        break
                    b = out.get(n - k)
                    if b is None:
                        continue
                    prod = ring.mul(c, b)
                    acc = ring.neg(prod) if acc is None else ring.sub(acc, prod)
                if acc is not None and not ring.is_zero(acc):
                    out[n] = ring.exact_div(acc, lead)
        except InexactDivision as e:
            raise InexactSeriesDivision(f"division leaves a remainder at u^{n + v}") from e
        return USeries(ring, prec, out)

    def compose(self, inner: "USeries") -> "USeries":
        """outer(inner(u)) for inner of u-valuation >= 1.

        With v = val(inner), the result is known modulo
        u^min(prec_outer * v, prec_inner + (n_min - 1) * v), where n_min is the
        smallest positive exponent carried by the outer series.
        """
        self._check(inner)
        if inner.is_zero():
            raise InnerValuationZero("cannot compose with the zero series")
        v = int(inner.valuation)
        if v < 1:
            raise InnerValuationZero("inner series must have u-valuation >= 1")
        ring = self.ring
        positive = [n for n in self._terms if n > 0]
        prec = self.prec * v
        if positive:
            prec = min(prec, inner.prec + (min(positive) - 1) * v)
        out: Terms = {}
        if 0 in self._terms:
            out[0] = self._terms[0]
        power: Terms = {0: ring.one}
        for n in range(1, self.prec):
            if n * v >= prec:
                break
            power = _mul_terms(ring, power, inner._terms, prec)
            a = self._terms.get(n)
            if a is None:
                continue
            for k, c in power.items():
                term = ring.mul(a, c)
                out[k] = ring.add(out[k], term) if k in out else term
        return USeries(ring, prec, out)

    def theta(self) -> "USeries":
        """Θ = -u^2 d/du, keeping the input precision."""
        ring = self.ring
        out = {n + 1: ring.scale(c, -n) for n, c in self._terms.items()}
        return USeries(ring, self.prec, out)

    def change_ring(self, target: CoefficientRing) -> "USeries":
        terms = {n: target.coerce_from(self.ring, c) for n, c in self._terms.items()}
        return USeries(target, self.prec, terms)


def _mul_terms(ring: CoefficientRing, a: Terms, b: Terms, prec: int) -> Terms:
    if len(a) > len(b):
        a, b = b, a
    b_items = sorted(b.items())
    out: Terms = {}
    for i, ai in a.items():
        for j, bj in b_items:
            n = i + j
            if n >= prec:
                break
            prod = ring.mul(ai, bj)
            out[n] = ring.add(out[n], prod) if n in out else prod
    return out


# --- operation-level entry points --------------------------------------------


def series_arith(kind: str, f: USeries, g: Union[USeries, Any]) -> USeries:
    """add | sub | mul | scale."""
    if kind == "scale":
        if isinstance(g, int):
            return f.scale_int(g)
        return f.scale(g)
    if not isinstance(g, USeries):
        raise RingMismatch(f"operation {kind!r} needs two series")
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    raise ValueError(f"unknown series operation {kind!r}")


def series_inv(f: USeries) -> USeries:
    return f.inverse()


def series_exact_div(f: USeries, g: Union[USeries, Any]) -> USeries:
    if isinstance(g, USeries):
        return f.exact_div(g)
    return f.exact_div_scalar(g)


def series_compose(outer: USeries, inner: USeries) -> USeries:
    return outer.compose(inner)


def theta(f: USeries) -> USeries:
    return f.theta()


def series_vp(f: USeries, prime: PrimeSpec) -> Union[int, float]:
    """inf over stored terms of v_𝔭(a_f(n)).

    The answer is relative to the truncation: terms at or beyond f.prec are
    unknown, so for the underlying form it is only an upper bound.
    """
    if f.ring.tag == "Fpd":
        raise RingMismatch("valuations are defined for series over A or K")
    if f.is_zero():
        return math.inf
    return min(vp(c, prime) for _, c in f.terms)


def series_reduce(f: USeries, prime: PrimeSpec) -> USeries:
    """Coefficientwise reduction modulo 𝔭."""
    if f.ring.tag == "Fpd":
        return f
    if f.ring.tag == "K":
        low = series_vp(f, prime)
        if low < 0:
            raise NotPIntegral(f"series has {prime}-adic valuation {low} < 0")
    return f.change_ring(ResidueField(prime))


def apoly_series(ring: CoefficientRing, coeffs: Mapping[int, APoly], prec: int) -> USeries:
    """Build a series from A-coefficients, mapped into `ring`."""
    return USeries(ring, prec, {n: ring.from_apoly(c) for n, c in coeffs.items()})
