"""Dense univariate polynomials over a CoefficientRing, as coefficient tuples.

Used for the dehomogenised representatives p(x) of isobaric polynomials, so
everything here is small (degree = isobaric weight / (q-1)).
"""

from __future__ import annotations

from typing import Any, Sequence, Tuple

from src.arith.rings import CoefficientRing
from src.errors import DivisionByZero

Poly = Tuple[Any, ...]


def strip(ring: CoefficientRing, a: Sequence[Any]) -> Poly:
    n = len(a)
    while n and ring.is_zero(a[n - 1]):
        n -= 1
    return tuple(a[:n])


def degree(ring: CoefficientRing, a: Sequence[Any]) -> int:
    return len(strip(ring, a)) - 1


def valuation(ring: CoefficientRing, a: Sequence[Any]) -> int:
    """Index of the first nonzero coefficient; -1 for zero."""
    for i, c in enumerate(a):
        if not ring.is_zero(c):
            return i
    return -1


def add(ring: CoefficientRing, a: Sequence[Any], b: Sequence[Any]) -> Poly:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        if i >= len(a):
            out.append(b[i])
        elif i >= len(b):
            out.append(a[i])
        else:
            out.append(ring.add(a[i], b[i]))
    return tuple(out)


def sub(ring: CoefficientRing, a: Sequence[Any], b: Sequence[Any]) -> Poly:
    return add(ring, a, tuple(ring.neg(c) for c in b))


def mul(ring: CoefficientRing, a: Sequence[Any], b: Sequence[Any]) -> Poly:
    if not a or not b:
        return ()
    out = [ring.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ring.is_zero(ai):
            continue
        for j, bj in enumerate(b):
            if ring.is_zero(bj):
                continue
            out[i + j] = ring.add(out[i + j], ring.mul(ai, bj))
    return tuple(out)


def power(ring: CoefficientRing, a: Sequence[Any], n: int) -> Poly:
    result: Poly = (ring.one,)
    base: Poly = tuple(a)
    while n:
        if n & 1:
            result = mul(ring, result, base)
        n >>= 1
        if n:
            base = mul(ring, base, base)
    return result


def derivative(ring: CoefficientRing, a: Sequence[Any]) -> Poly:
    return tuple(ring.scale(a[i], i) for i in range(1, len(a)))


def divrem(ring: CoefficientRing, a: Sequence[Any], b: Sequence[Any]) -> Tuple[Poly, Poly]:
    """Division with remainder; the leading coefficient of b must be a unit."""
    b = strip(ring, b)
    if not b:
        raise DivisionByZero("division by the zero polynomial")
    r = list(strip(ring, a))
    nb = len(b)
    if len(r) < nb:
        return (), tuple(r)
    lc_inv = ring.inverse(b[-1])
    quot = [ring.zero] * (len(r) - nb + 1)
    for i in range(len(r) - nb, -1, -1):
        lead = r[i + nb - 1]
        if ring.is_zero(lead):
            continue
        q_i = ring.mul(lead, lc_inv)
        quot[i] = q_i
        for j in range(nb):
            r[i + j] = ring.sub(r[i + j], ring.mul(q_i, b[j]))
    return strip(ring, quot), strip(ring, r[: nb - 1])


def monic(ring: CoefficientRing, a: Sequence[Any]) -> Poly:
    a = strip(ring, a)
    if not a:
        return a
    inv = ring.inverse(a[-1])
    return tuple(ring.mul(c, inv) for c in a)


def gcd(ring: CoefficientRing, a: Sequence[Any], b: Sequence[Any]) -> Poly:
    """Monic gcd over a field; gcd(a, 0) = monic(a)."""
    a, b = strip(ring, a), strip(ring, b)
    while b:
        a, b = b, divrem(ring, a, b)[1]
    return monic(ring, a)
