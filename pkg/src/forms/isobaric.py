"""Isobaric polynomials in U, V (each of weight q-1).

A polynomial of weight k0 = w(q-1) is stored as c_0..c_w, with c_j the
coefficient of U^(w-j) V^j. Its univariate representative is
p(x) = sum_j c_j x^j; products, divisibility and gcds are computed there.
"""

from __future__ import annotations

from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from src.arith import univariate as uni
from src.arith.apoly import APoly
from src.arith.finite_field import FieldCtx
from src.arith.primes import PrimeSpec
from src.arith.rings import CoefficientRing, PolynomialRing, ring_from_tag
from src.errors import RingMismatch, TypeMismatch


class IsobaricPoly:
    __slots__ = ("ring", "weight", "coeffs")

    def __init__(self, ring: CoefficientRing, weight: int, coeffs: Sequence[Any] = ()) -> None:
        step = ring.ctx.q - 1
        if weight < 0 or weight % step:
            raise TypeMismatch(f"isobaric weight {weight} is not a nonnegative multiple of {step}")
        w = weight // step
        coeffs = list(coeffs)
        if len(coeffs) > w + 1:
            if any(not ring.is_zero(c) for c in coeffs[w + 1 :]):
                raise TypeMismatch(f"{len(coeffs)} coefficients do not fit weight {weight}")
            coeffs = coeffs[: w + 1]
        coeffs += [ring.zero] * (w + 1 - len(coeffs))
        self.ring = ring
        self.weight = weight
        self.coeffs: Tuple[Any, ...] = tuple(coeffs)

    # --- constructors -------------------------------------------------------------

    @classmethod
    def zero(cls, ring: CoefficientRing, weight: int) -> "IsobaricPoly":
        return cls(ring, weight)

    @classmethod
    def one(cls, ring: CoefficientRing) -> "IsobaricPoly":
        return cls(ring, 0, [ring.one])

    @classmethod
    def monomial(cls, ring: CoefficientRing, w: int, j: int, c: Any = None) -> "IsobaricPoly":
        """c * U^(w-j) V^j."""
        coeffs = [ring.zero] * (w + 1)
        coeffs[j] = ring.one if c is None else c
        return cls(ring, w * (ring.ctx.q - 1), coeffs)

    @classmethod
    def from_univariate(cls, ring: CoefficientRing, w: int, p: Sequence[Any]) -> "IsobaricPoly":
        return cls(ring, w * (ring.ctx.q - 1), p)

    @classmethod
    def from_json(
        cls,
        data: Mapping[str, Any],
        ctx: FieldCtx,
        ring: Optional[CoefficientRing] = None,
        prime: Optional[PrimeSpec] = None,
    ) -> "IsobaricPoly":
        if ring is None:
            ring = ring_from_tag(data.get("ring", "A"), ctx, prime)
        return cls(ring, int(data["weight"]), [ring.decode(c) for c in data["coeffs"]])

    def to_json(self) -> Dict[str, Any]:
        return {
            "ring": self.ring.tag,
            "weight": self.weight,
            "coeffs": [self.ring.encode(c) for c in self.coeffs],
        }

    def _new(self, weight: int, coeffs: Sequence[Any]) -> "IsobaricPoly":
        return type(self)(self.ring, weight, coeffs)

    # --- inspection ---------------------------------------------------------------

    @property
    def w(self) -> int:
        return self.weight // (self.ring.ctx.q - 1)

    @property
    def univariate(self) -> uni.Poly:
        return uni.strip(self.ring, self.coeffs)

    def is_zero(self) -> bool:
        return not self.univariate

    def support(self) -> List[int]:
        return [j for j, c in enumerate(self.coeffs) if not self.ring.is_zero(c)]

    def u_exponent(self) -> int:
        """Largest e with U^e dividing the polynomial (w - deg p)."""
        return self.w - (len(self.univariate) - 1)

    def v_exponent(self) -> int:
        """Largest e with V^e dividing the polynomial."""
        return uni.valuation(self.ring, self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IsobaricPoly):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.weight == other.weight
            and all(self.ring.eq(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"IsobaricPoly(weight={self.weight}, {format_isobaric(self)})"

    # --- arithmetic ---------------------------------------------------------------

    def _check(self, other: "IsobaricPoly") -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"isobaric polynomials over {self.ring!r} and {other.ring!r}")

    def __add__(self, other: "IsobaricPoly") -> "IsobaricPoly":
        self._check(other)
        if self.weight != other.weight:
            raise TypeMismatch(f"cannot add weights {self.weight} and {other.weight}")
        return self._new(self.weight, uni.add(self.ring, self.coeffs, other.coeffs))

    def __neg__(self) -> "IsobaricPoly":
        return self._new(self.weight, [self.ring.neg(c) for c in self.coeffs])

    def __sub__(self, other: "IsobaricPoly") -> "IsobaricPoly":
        return self + (-other)

    def __mul__(self, other: "IsobaricPoly") -> "IsobaricPoly":
        self._check(other)
        prod = uni.mul(self.ring, self.coeffs, other.coeffs)
        return self._new(self.weight + other.weight, prod)

    def __pow__(self, n: int) -> "IsobaricPoly":
        return self._new(self.weight * n, uni.power(self.ring, self.coeffs, n))

    def scale(self, c: Any) -> "IsobaricPoly":
        return self._new(self.weight, [self.ring.mul(c, a) for a in self.coeffs])

    def times_uv(self) -> "IsobaricPoly":
        """Multiply by UV: weight grows by 2(q-1), coefficients shift by one slot."""
        step = self.ring.ctx.q - 1
        return self._new(self.weight + 2 * step, (self.ring.zero,) + self.coeffs + (self.ring.zero,))

    def change_ring(self, target: CoefficientRing) -> "IsobaricPoly":
        return IsobaricPoly(target, self.weight, [target.coerce_from(self.ring, c) for c in self.coeffs])


def phi_d(ctx: FieldCtx, d: int) -> IsobaricPoly:
    """φ_d over A.

    φ_0 = 1, φ_1 = U - T^q V and
    φ_d = φ_{d-1} (U - T^q V)^(q^(d-1)) + (T^(q^(d-1)) - T) φ_{d-2} (U^q V)^(q^(d-2)).
    """
    if d < 0:
        raise ValueError(f"phi_d needs d >= 0, got {d}")
    ring = PolynomialRing(ctx)
    q = ctx.q
    T = APoly.T(ctx)
    phi_1 = IsobaricPoly(ring, q - 1, [ring.one, -(T**q)])
    prev, cur = IsobaricPoly.one(ring), phi_1
    if d == 0:
        return prev
    for n in range(2, d + 1):
        u_q_v = IsobaricPoly.monomial(ring, q + 1, 1) ** (q ** (n - 2))
        nxt = cur * phi_1 ** (q ** (n - 1)) + (prev * u_q_v).scale(T ** (q ** (n - 1)) - T)
        prev, cur = cur, nxt
    return cur


def psi_d(ctx: FieldCtx, d: int) -> IsobaricPoly:
    """Isobaric part of c_T(∂ g_d): ψ_d = -sum_j (w-j) c_j U^(w-j) V^j."""
    if d < 1:
        raise ValueError(f"psi_d needs d >= 1, got {d}")
    phi = phi_d(ctx, d)
    ring, w = phi.ring, phi.w
    return IsobaricPoly(ring, phi.weight, [ring.scale(c, -(w - j)) for j, c in enumerate(phi.coeffs)])


def format_isobaric(f: IsobaricPoly) -> str:
    parts = []
    w = f.w
    for j, c in enumerate(f.coeffs):
        if f.ring.is_zero(c):
            continue
        mono = "".join(
            s for s in (_power("U", w - j), _power("V", j)) if s
        )
        parts.append(f"({c})*{mono}" if mono else f"({c})")
    return " + ".join(parts) or "0"


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"
