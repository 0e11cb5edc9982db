"""u-expansions of the named forms of level Γ₀(T).

Everything is bootstrapped from the Carlitz module:

    E(bz) = sum_{a monic} a * u(abz)
    g1    = 1 - (T^q - T) * sum_{a monic} u(az)^(q-1)
    g1T   = 1 - (T^q - T) * sum_{a monic} u(aTz)^(q-1)

and the remaining generators are exact A-linear combinations of these.
Sums run over monic a with q^deg(ab) < N; the other terms vanish mod u^N.
"""

from __future__ import annotations

import logging
import threading
from functools import lru_cache
from typing import Callable, Dict, Hashable, Iterator, Optional

from src.arith.apoly import APoly
from src.arith.finite_field import FieldCtx
from src.arith.primes import PrimeSpec, monic_polys
from src.arith.rings import CoefficientRing, PolynomialRing
from src.errors import UsageError
from src.forms.carlitz import u_scaled, u_scaled_power
from src.series.useries import USeries

logger = logging.getLogger(__name__)

GENERATOR_NAMES = ("E", "ET", "g1", "g1T", "deltaT", "deltaW", "h", "delta", "Ep")


def _monic_up_to(ctx: FieldCtx, b: APoly, prec: int) -> Iterator[APoly]:
    """Monic a with q^deg(ab) < prec."""
    deg = 0
    while ctx.q ** (deg + b.degree) < prec:
        yield from monic_polys(ctx, deg)
        deg += 1


def false_eisenstein(b: APoly, prec: int) -> USeries:
    """E(bz) = sum_{a monic} a * u(abz) for monic b."""
    ctx = b.ctx
    ring = PolynomialRing(ctx)
    total = USeries.zero(ring, prec)
    count = 0
    for a in _monic_up_to(ctx, b, prec):
        total = total + u_scaled(a * b, prec).scale(a)
        count += 1
    logger.debug("E(bz) for b=%s summed %d monic terms at precision %d", b, count, prec)
    return total


def _g1_sum(b: APoly, prec: int) -> USeries:
    ctx = b.ctx
    ring = PolynomialRing(ctx)
    total = USeries.zero(ring, prec)
    for a in _monic_up_to(ctx, b, prec):
        total = total + u_scaled_power(a * b, ctx.q - 1, prec)
    return total


def _tq_minus_t(ctx: FieldCtx) -> APoly:
    T = APoly.T(ctx)
    return T ** ctx.q - T


class GeneratorCache:
    """Write-once memo of generator expansions for one field context.

    An entry is only ever replaced by the same series at higher precision; a
    request below the stored precision is served by truncation.
    """

    def __init__(self, ctx: FieldCtx) -> None:
        self.ctx = ctx
        self.ring = PolynomialRing(ctx)
        self._store: Dict[Hashable, USeries] = {}
        self._lock = threading.Lock()

    def _memo(self, key: Hashable, prec: int, build: Callable[[], USeries]) -> USeries:
        with self._lock:
            hit = self._store.get(key)
        if hit is not None and hit.prec >= prec:
            return hit.truncate(prec)
        series = build()
        with self._lock:
            current = self._store.get(key)
            if current is None or current.prec < series.prec:
                self._store[key] = series
        logger.debug("Cached %s at precision %d", key, series.prec)
        return series.truncate(prec)

    def __len__(self) -> int:
        return len(self._store)

    # --- named generators over A -------------------------------------------------

    def series(self, name: str, prec: int, prime: Optional[PrimeSpec] = None) -> USeries:
        if prec < 1:
            raise UsageError(f"precision must be at least 1, got {prec}")
        if name.startswith("gd:"):
            return self.gd(int(name[3:]), prec)
        if name not in GENERATOR_NAMES:
            raise UsageError(f"unknown generator {name!r}")
        if name == "Ep":
            if prime is None:
                raise UsageError("generator 'Ep' needs a prime")
            return self._memo(("Ep", prime), prec, lambda: self._build_ep(prime, prec))
        build = getattr(self, f"_build_{name}")
        return self._memo(name, prec, lambda: build(prec))

    def _build_E(self, prec: int) -> USeries:
        return false_eisenstein(APoly.one(self.ctx), prec)

    def _build_ET(self, prec: int) -> USeries:
        T = APoly.T(self.ctx)
        e_tz = self._memo("E(Tz)", prec, lambda: false_eisenstein(T, prec))
        return self.series("E", prec) - e_tz.scale(T)

    def _build_ep(self, prime: PrimeSpec, prec: int) -> USeries:
        return self.series("E", prec) - false_eisenstein(prime.pi, prec).scale(prime.pi)

    def _build_g1(self, prec: int) -> USeries:
        one = USeries.one(self.ring, prec)
        return one - _g1_sum(APoly.one(self.ctx), prec).scale(_tq_minus_t(self.ctx))

    def _build_g1T(self, prec: int) -> USeries:
        one = USeries.one(self.ring, prec)
        return one - _g1_sum(APoly.T(self.ctx), prec).scale(_tq_minus_t(self.ctx))

    def _build_deltaT(self, prec: int) -> USeries:
        diff = self.series("g1T", prec) - self.series("g1", prec)
        return diff.exact_div_scalar(_tq_minus_t(self.ctx))

    def _build_deltaW(self, prec: int) -> USeries:
        T = APoly.T(self.ctx)
        num = self.series("g1T", prec).scale(T ** self.ctx.q) - self.series("g1", prec).scale(T)
        return num.exact_div_scalar(_tq_minus_t(self.ctx))

    def _build_h(self, prec: int) -> USeries:
        return -(self.series("deltaW", prec) * self.series("ET", prec))

    def _build_delta(self, prec: int) -> USeries:
        dw_q = self.series("deltaW", prec) ** self.ctx.q
        return -(dw_q * self.series("deltaT", prec))

    # --- g_d -----------------------------------------------------------------------

    def gd(self, d: int, prec: int) -> USeries:
        """g_d = g_{d-1} g1^(q^(d-1)) - (T^(q^(d-1)) - T) g_{d-2} Δ^(q^(d-2))."""
        if d < 0:
            raise UsageError(f"g_d needs d >= 0, got {d}")
        if d == 0:
            return USeries.one(self.ring, prec)
        if d == 1:
            return self.series("g1", prec)
        return self._memo(("gd", d), prec, lambda: self._build_gd(d, prec))

    def _build_gd(self, d: int, prec: int) -> USeries:
        q = self.ctx.q
        T = APoly.T(self.ctx)
        head = self.gd(d - 1, prec) * (self.series("g1", prec) ** (q ** (d - 1)))
        tail = self.gd(d - 2, prec) * (self.series("delta", prec) ** (q ** (d - 2)))
        return head - tail.scale(T ** (q ** (d - 1)) - T)

    # --- generators and their powers in other coefficient rings ---------------------

    def in_ring(self, name: str, prec: int, ring: CoefficientRing) -> USeries:
        if ring == self.ring:
            return self.series(name, prec)
        return self._memo(
            (name, ring), prec, lambda: self.series(name, prec).change_ring(ring)
        )

    def power(self, name: str, e: int, prec: int) -> USeries:
        """name^e over A, memoized along the chain of exponents."""
        if e == 0:
            return USeries.one(self.ring, prec)
        if e == 1:
            return self.series(name, prec)
        return self._memo(
            ("pow", name, e),
            prec,
            lambda: self.power(name, e - 1, prec) * self.series(name, prec),
        )

    def basis(self, w: int, j: int, l: int, prec: int, ring: Optional[CoefficientRing] = None) -> USeries:
        """Δ_W^(w-j) Δ_T^j E_T^l = u^(j(q-1)+l) + higher, computed over A."""
        if ring is not None and ring != self.ring:
            return self._memo(
                ("basis", w, j, l, ring),
                prec,
                lambda: self.basis(w, j, l, prec).change_ring(ring),
            )
        return self._memo(
            ("basis", w, j, l),
            prec,
            lambda: self.power("deltaW", w - j, prec)
            * self.power("deltaT", j, prec)
            * self.power("ET", l, prec),
        )


@lru_cache(maxsize=None)
def default_cache(ctx: FieldCtx) -> GeneratorCache:
    return GeneratorCache(ctx)


def gen_series(
    ctx: FieldCtx,
    name: str,
    prec: int,
    prime: Optional[PrimeSpec] = None,
    cache: Optional[GeneratorCache] = None,
) -> USeries:
    """u-expansion over A of one of GENERATOR_NAMES (or 'gd:<d>')."""
    cache = cache or default_cache(ctx)
    series = cache.series(name, prec, prime)
    logger.info("Built %s at precision %d (%d terms)", name, prec, len(series.terms))
    return series


def gen_gd(ctx: FieldCtx, d: int, prec: int, cache: Optional[GeneratorCache] = None) -> USeries:
    return (cache or default_cache(ctx)).gd(d, prec)
