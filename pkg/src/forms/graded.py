"""Drinfeld modular forms for Γ₀(T) as (weight, type, isobaric polynomial).

A GradedForm (k, l, φ) stands for φ(Δ_W, Δ_T) * E_T^l. Types are kept in
0 <= l <= q-2; an overflow of the type is folded back with Z^(q-1) = UV.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Union

from src.arith.finite_field import FieldCtx
from src.arith.primes import PrimeSpec
from src.arith.rings import CoefficientRing, PolynomialRing
from src.errors import EmptySpace, NotModular, PrecisionTooLow, RingMismatch, TypeMismatch, UsageError
from src.forms.generators import GeneratorCache, default_cache
from src.forms.isobaric import IsobaricPoly, phi_d
from src.series.useries import USeries

logger = logging.getLogger(__name__)

GRADED_NAMES = ("one", "deltaW", "deltaT", "ET", "h", "delta", "g1")


def _check_type(q: int, k: int, l: int) -> int:
    """Return r_{k,l} = (k-2l)/(q-1), or raise TypeMismatch."""
    if not 0 <= l <= q - 2:
        raise TypeMismatch(f"type {l} is outside 0..{q - 2}")
    if k < 2 * l or (k - 2 * l) % (q - 1):
        raise TypeMismatch(f"no forms of weight {k} and type {l} for q={q}")
    return (k - 2 * l) // (q - 1)


@dataclass(frozen=True, eq=False)
class GradedForm:
    k: int
    l: int
    iso: IsobaricPoly

    def __post_init__(self) -> None:
        q = self.q
        if not 0 <= self.l <= q - 2:
            raise TypeMismatch(f"type {self.l} is outside 0..{q - 2}")
        if self.iso.weight != self.k - 2 * self.l:
            raise TypeMismatch(
                f"isobaric weight {self.iso.weight} does not match k - 2l = {self.k - 2 * self.l}"
            )

    @classmethod
    def unit(cls, ring: CoefficientRing) -> "GradedForm":
        return cls(0, 0, IsobaricPoly.one(ring))

    @classmethod
    def from_coeffs(cls, ring: CoefficientRing, k: int, l: int, coeffs: List[Any]) -> "GradedForm":
        return cls(k, l, IsobaricPoly(ring, k - 2 * l, coeffs))

    @classmethod
    def from_json(
        cls,
        data: Mapping[str, Any],
        ctx: FieldCtx,
        ring: Optional[CoefficientRing] = None,
        prime: Optional[PrimeSpec] = None,
    ) -> "GradedForm":
        iso = IsobaricPoly.from_json(data["iso"], ctx, ring, prime)
        return cls(int(data["k"]), int(data["l"]), iso)

    def to_json(self) -> Dict[str, Any]:
        return {"k": self.k, "l": self.l, "iso": self.iso.to_json()}

    @property
    def ring(self) -> CoefficientRing:
        return self.iso.ring

    @property
    def q(self) -> int:
        return self.iso.ring.ctx.q

    @property
    def r(self) -> int:
        return self.iso.w

    def is_zero(self) -> bool:
        return self.iso.is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedForm):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return self.ring == other.ring and self.iso.weight == other.iso.weight
        return self.k == other.k and self.l == other.l and self.iso == other.iso

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "GradedForm") -> "GradedForm":
        if (self.k, self.l) != (other.k, other.l):
            raise TypeMismatch(f"cannot add forms of (k, l) = {(self.k, self.l)} and {(other.k, other.l)}")
        return GradedForm(self.k, self.l, self.iso + other.iso)

    def __neg__(self) -> "GradedForm":
        return GradedForm(self.k, self.l, -self.iso)

    def __sub__(self, other: "GradedForm") -> "GradedForm":
        return self + (-other)

    def __mul__(self, other: "GradedForm") -> "GradedForm":
        return graded_mul(self, other)

    def __pow__(self, n: int) -> "GradedForm":
        result = GradedForm.unit(self.ring)
        for _ in range(n):
            result = graded_mul(result, self)
        return result

    def scale(self, c: Any) -> "GradedForm":
        return GradedForm(self.k, self.l, self.iso.scale(c))

    def change_ring(self, target: CoefficientRing) -> "GradedForm":
        return GradedForm(self.k, self.l, self.iso.change_ring(target))

    # --- cusps ---------------------------------------------------------------------

    def order_at_infinity(self) -> Union[int, float]:
        support = self.iso.support()
        if not support:
            return math.inf
        return support[0] * (self.q - 1) + self.l

    def order_at_zero(self) -> Union[int, float]:
        support = self.iso.support()
        if not support:
            return math.inf
        return (self.r - support[-1]) * (self.q - 1) + self.l

    def is_cuspidal(self) -> bool:
        return self.order_at_infinity() >= 1 and self.order_at_zero() >= 1

    def is_doubly_cuspidal(self) -> bool:
        return self.order_at_infinity() >= 2 and self.order_at_zero() >= 2

    def __repr__(self) -> str:
        return f"GradedForm(k={self.k}, l={self.l}, {self.iso!r})"


# --- named forms -----------------------------------------------------------------


def named_form(ctx: FieldCtx, name: str) -> GradedForm:
    """GradedForm of a named generator over A."""
    ring = PolynomialRing(ctx)
    q = ctx.q
    one = ring.one
    if name == "one":
        return GradedForm.unit(ring)
    if name == "deltaW":
        return GradedForm.from_coeffs(ring, q - 1, 0, [one])
    if name == "deltaT":
        return GradedForm.from_coeffs(ring, q - 1, 0, [ring.zero, one])
    if name == "ET":
        return GradedForm.from_coeffs(ring, 2, 1, [one])
    if name == "h":
        return GradedForm.from_coeffs(ring, q + 1, 1, [ring.neg(one), ring.zero])
    if name == "delta":
        coeffs = [ring.zero] * (q + 2)
        coeffs[1] = ring.neg(one)
        return GradedForm.from_coeffs(ring, q * q - 1, 0, coeffs)
    if name == "g1":
        return gd_form(ctx, 1)
    if name.startswith("gd:"):
        return gd_form(ctx, int(name[3:]))
    raise UsageError(f"no graded form named {name!r}; choose from {', '.join(GRADED_NAMES)} or gd:<d>")


def gd_form(ctx: FieldCtx, d: int) -> GradedForm:
    return GradedForm(ctx.q**d - 1, 0, phi_d(ctx, d))


# --- operations ------------------------------------------------------------------


def dimension(q: int, k: int, l: int) -> int:
    """dim M_{k,l}(Γ₀(T)) = 1 + r_{k,l}, or 0 when the space is empty."""
    if k < 2 * l or (k - 2 * l) % (q - 1):
        return 0
    return 1 + (k - 2 * l) // (q - 1)


def equality_bound(q: int, k: int, l: int) -> int:
    """B = r_{k,l}(q-1) + l: forms agreeing at u^0..u^B are equal."""
    return _check_type(q, k, l) * (q - 1) + l


def _normalize(k: int, l: int, iso: IsobaricPoly) -> GradedForm:
    q = iso.ring.ctx.q
    if l >= q - 1:
        return GradedForm(k, l - (q - 1), iso.times_uv())
    return GradedForm(k, l, iso)


def graded_mul(f: GradedForm, g: GradedForm) -> GradedForm:
    if f.ring != g.ring:
        raise RingMismatch(f"forms over {f.ring!r} and {g.ring!r}")
    return _normalize(f.k + g.k, f.l + g.l, f.iso * g.iso)


def partial(f: GradedForm) -> GradedForm:
    """The derivation ∂U = -UZ, ∂V = 0, ∂Z = Z^2 applied to φ(U,V) Z^l."""
    ring, w, l = f.ring, f.r, f.l
    coeffs = [ring.scale(c, l - (w - j)) for j, c in enumerate(f.iso.coeffs)]
    return _normalize(f.k + 2, l + 1, IsobaricPoly(ring, f.iso.weight, coeffs))


def cT(f: GradedForm) -> GradedForm:
    """f / E_T^l, of weight k - 2l and type 0."""
    return GradedForm(f.k - 2 * f.l, 0, f.iso)


def to_series(f: GradedForm, prec: int, cache: Optional[GeneratorCache] = None) -> USeries:
    """sum_j c_j Δ_W^(w-j) Δ_T^j E_T^l over the ring of f."""
    ring = f.ring
    cache = cache or default_cache(ring.ctx)
    total = USeries.zero(ring, prec)
    for j in f.iso.support():
        basis = cache.basis(f.r, j, f.l, prec, ring)
        total = total + basis.scale(f.iso.coeffs[j])
    return total


def from_series(
    k: int, l: int, s: USeries, cache: Optional[GeneratorCache] = None
) -> GradedForm:
    """Unique (k, l, φ) whose expansion is s, by a triangular solve.

    Only the slots u^(j(q-1)+l) are read to find φ, but the residual is checked
    against the whole of s. For a series not known to be modular this is a
    necessary condition only.
    """
    ring = s.ring
    q = ring.ctx.q
    w = _check_type(q, k, l)
    bound = w * (q - 1) + l
    if s.prec <= bound:
        raise PrecisionTooLow(f"need precision > {bound} for weight {k}, type {l}; got {s.prec}")
    cache = cache or default_cache(ring.ctx)
    residual = s
    coeffs = [ring.zero] * (w + 1)
    for j in range(w + 1):
        c = residual[j * (q - 1) + l]
        if ring.is_zero(c):
            continue
        coeffs[j] = c
        residual = residual - cache.basis(w, j, l, s.prec, ring).scale(c)
    if not residual.is_zero():
        n = int(residual.valuation)
        raise NotModular(f"series is not of weight {k} and type {l}: residual at u^{n}", exponent=n)
    logger.debug("Decomposed a series of precision %d at weight %d, type %d", s.prec, k, l)
    return GradedForm(k, l, IsobaricPoly(ring, k - 2 * l, coeffs))


def b_coefficients(s: USeries, q: int, l: int, count: int) -> List[Any]:
    """b(i) = a(i(q-1)+l) for 0 <= i < count."""
    return [s[i * (q - 1) + l] for i in range(count)]


def victor_miller(
    ctx: FieldCtx,
    k: int,
    l: int,
    ring: Optional[CoefficientRing] = None,
    cache: Optional[GeneratorCache] = None,
) -> List[GradedForm]:
    """Basis f_0..f_r of M_{k,l} with b_{f_j}(i) = δ_ij."""
    q = ctx.q
    ring = ring or PolynomialRing(ctx)
    if not 0 <= l <= q - 2 or dimension(q, k, l) == 0:
        raise EmptySpace(f"M_{{{k},{l}}}(Γ₀(T)) is zero for q={q}")
    cache = cache or default_cache(ctx)
    w = (k - 2 * l) // (q - 1)
    prec = w * (q - 1) + l + 1
    rows = [b_coefficients(cache.basis(w, j, l, prec, ring), q, l, w + 1) for j in range(w + 1)]
    vecs: Dict[int, List[Any]] = {}
    reduced: Dict[int, List[Any]] = {}
    for j in range(w, -1, -1):
        vec = [ring.zero] * (w + 1)
        vec[j] = ring.one
        row = list(rows[j])
        for i in range(j + 1, w + 1):
            c = row[i]
            if ring.is_zero(c):
                continue
            vec = [ring.sub(a, ring.mul(c, b)) for a, b in zip(vec, vecs[i])]
            row = [ring.sub(a, ring.mul(c, b)) for a, b in zip(row, reduced[i])]
        vecs[j], reduced[j] = vec, row
    return [GradedForm.from_coeffs(ring, k, l, vecs[j]) for j in range(w + 1)]


def partial_series(s: USeries, k: int, cache: Optional[GeneratorCache] = None) -> USeries:
    """∂_k s = Θs + k E s, for s over A."""
    cache = cache or default_cache(s.ring.ctx)
    E = cache.in_ring("E", s.prec, s.ring)
    return s.theta() + (E * s).scale_int(k)
