"""Prime fields F_p and their extensions F_q = F_p[x]/(m(x)).

Elements are stored as coordinate vectors against the powers of x; the
context precomputes the small matrices needed to multiply and reduce those
vectors with numpy.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np
from sympy import isprime

from src.errors import BadModulus, DivisionByZero, EvenCharacteristic, NotPrime

logger = logging.getLogger(__name__)


def _fp_strip(a: List[int]) -> List[int]:
    while a and not a[-1]:
        a.pop()
    return a


def _fp_mod(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    """Remainder of a by b over F_p (ascending coefficient lists, b nonzero)."""
    r = _fp_strip([c % p for c in a])
    n = len(b)
    b1 = pow(b[-1], p - 2, p)
    for i in range(len(r) - n, -1, -1):
        if len(r) >= i + n:
            q_i = (r[-1] * b1) % p
            for j in range(n):
                r[i + j] = (r[i + j] - q_i * b[j]) % p
            _fp_strip(r)
    return r


def _fp_is_irreducible(m: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(m)/2."""
    deg = len(m) - 1
    if deg < 1:
        return False
    for k in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=k):
            if not _fp_mod(m, list(tail) + [1], p):
                return False
    return True


@dataclass(frozen=True)
class FieldCtx:
    """The coefficient field F_q, q = p^r, built as F_p[x]/(modulus)."""

    p: int
    r: int
    modulus: Tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.r

    @cached_property
    def reduction_matrix(self) -> np.ndarray:
        """Row j holds the coordinates of x^j mod m(x), for 0 <= j <= 2r-2."""
        rows = []
        x_pow = [1] + [0] * (self.r - 1)
        for _ in range(2 * self.r - 1):
            rows.append(list(x_pow))
            # multiply by x, then fold the x^r term back using m(x)
            top = x_pow[-1]
            shifted = [0] + x_pow[:-1]
            x_pow = [(c - top * m) % self.p for c, m in zip(shifted, self.modulus[:-1])]
        mat = np.array(rows, dtype=np.int64)
        mat.flags.writeable = False
        return mat

    def mul_coords(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.r == 1:
            return (a * b) % self.p
        prod = np.convolve(a, b) % self.p
        return (prod @ self.reduction_matrix[: len(prod)]) % self.p

    def scalar_matrix(self, coords: np.ndarray) -> np.ndarray:
        """Matrix M with v @ M = v * c for a coordinate row vector v."""
        rows = []
        basis = np.eye(self.r, dtype=np.int64)
        for j in range(self.r):
            rows.append(self.mul_coords(basis[j], coords))
        return np.array(rows, dtype=np.int64)

    # --- element constructors -------------------------------------------

    def element(self, coords: Sequence[int] | int) -> "FqElem":
        if isinstance(coords, (int, np.integer)):
            vec = [int(coords) % self.p] + [0] * (self.r - 1)
        else:
            vec = [int(c) % self.p for c in coords]
            if len(vec) != self.r:
                raise ValueError(
                    f"F_q element needs exactly {self.r} coordinates, got {len(vec)}"
                )
        return FqElem(self, tuple(vec))

    @property
    def zero(self) -> "FqElem":
        return self.element(0)

    @property
    def one(self) -> "FqElem":
        return self.element(1)

    @property
    def gen(self) -> "FqElem":
        """The class of x (equal to 0 when r = 1)."""
        if self.r == 1:
            return self.zero
        return self.element([0, 1] + [0] * (self.r - 2))

    def elements(self) -> Iterator["FqElem"]:
        for coords in itertools.product(range(self.p), repeat=self.r):
            yield FqElem(self, tuple(reversed(coords)))

    def random_element(self, rng: random.Random, nonzero: bool = False) -> "FqElem":
        while True:
            elem = self.element([rng.randrange(self.p) for _ in range(self.r)])
            if not nonzero or not elem.is_zero():
                return elem


@dataclass(frozen=True)
class FqElem:
    ctx: FieldCtx
    coords: Tuple[int, ...]

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coords, dtype=np.int64)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _coerce(self, other: object) -> Optional["FqElem"]:
        """other as an element of this field, or None for foreign operands."""
        if isinstance(other, FqElem):
            if other.ctx != self.ctx:
                raise ValueError("F_q elements from different fields")
            return other
        if isinstance(other, (int, np.integer)):
            return self.ctx.element(int(other))
        return None

    def __add__(self, other: "FqElem | int") -> "FqElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.ctx.p
        return FqElem(self.ctx, tuple((a + b) % p for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self) -> "FqElem":
        p = self.ctx.p
        return FqElem(self.ctx, tuple((-a) % p for a in self.coords))

    def __sub__(self, other: "FqElem | int") -> "FqElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: "FqElem | int") -> "FqElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: "FqElem | int") -> "FqElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = self.ctx.mul_coords(self.array, o.array)
        return FqElem(self.ctx, tuple(int(c) for c in prod))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "FqElem":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.ctx.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "FqElem":
        if self.is_zero():
            raise DivisionByZero("inverse of zero in F_q")
        return self ** (self.ctx.q - 2)

    def __truediv__(self, other: "FqElem | int") -> "FqElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def to_json(self) -> List[int]:
        return list(self.coords)

    def __repr__(self) -> str:
        if self.ctx.r == 1:
            return f"FqElem({self.coords[0]})"
        return f"FqElem({list(self.coords)})"


def make_field_ctx(p: int, r: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldCtx:
    """Validate (p, r, modulus) and build the field context.

    Raises:
        EvenCharacteristic: p = 2 (q must be odd).
        NotPrime: p is not a prime number.
        BadModulus: wrong degree, not monic, reducible, or missing when r > 1.
    """
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is excluded: q must be odd")
    if p < 2 or not isprime(p):
        raise NotPrime(f"p={p} is not prime")
    if r < 1:
        raise BadModulus(f"extension degree r={r} must be positive")

    if modulus is None:
        if r > 1:
            raise BadModulus(f"a degree-{r} modulus is required when r > 1")
        mod = (0, 1)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != r + 1:
            raise BadModulus(f"modulus must have {r + 1} coefficients, got {len(mod)}")
        if mod[-1] != 1:
            raise BadModulus("modulus must be monic")
        if r > 1 and not _fp_is_irreducible(mod, p):
            raise BadModulus(f"modulus {list(mod)} is reducible over F_{p}")
        if r == 1:
            # any monic linear modulus gives F_p; the coordinate is the constant term
            mod = (0, 1)

    ctx = FieldCtx(p=p, r=r, modulus=mod)
    logger.debug("Built field context q=%d (p=%d, r=%d, modulus=%s)", ctx.q, p, r, list(mod))
    return ctx
