"""Polynomials in A = F_q[T].

A polynomial is an (n, r) integer array: row i holds the F_p coordinates of
the coefficient of T^i. Products go through a single numpy convolution
(Kronecker substitution T -> y^(2r-1)) followed by one matrix reduction of
the x-part, so series arithmetic over A stays fast enough at desk scale.
"""

from __future__ import annotations

import logging
import random
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from src.arith.finite_field import FieldCtx, FqElem
from src.errors import DivisionByZero, InexactDivision

logger = logging.getLogger(__name__)

Scalar = Union[int, FqElem]


def _strip(arr: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(arr.any(axis=1))
    n = int(nz[-1]) + 1 if nz.size else 0
    out = arr[:n]
    out.flags.writeable = False
    return out


class APoly:
    """An element of F_q[T] with canonical (trailing-zero-free) storage."""

    __slots__ = ("ctx", "_rows", "_hash")

    def __init__(self, ctx: FieldCtx, rows: np.ndarray, *, canonical: bool = False) -> None:
        self.ctx = ctx
        if not canonical:
            rows = np.asarray(rows, dtype=np.int64).reshape(-1, ctx.r) % ctx.p
            rows = _strip(rows)
        self._rows = rows
        self._hash = None

    # --- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "APoly":
        return cls(ctx, np.zeros((0, ctx.r), dtype=np.int64), canonical=True)

    @classmethod
    def constant(cls, ctx: FieldCtx, c: Scalar) -> "APoly":
        elem = c if isinstance(c, FqElem) else ctx.element(c)
        return cls(ctx, np.array([elem.coords], dtype=np.int64))

    @classmethod
    def one(cls, ctx: FieldCtx) -> "APoly":
        return cls.constant(ctx, 1)

    @classmethod
    def T(cls, ctx: FieldCtx) -> "APoly":
        return cls.monomial(ctx, 1)

    @classmethod
    def monomial(cls, ctx: FieldCtx, n: int, c: Scalar = 1) -> "APoly":
        elem = c if isinstance(c, FqElem) else ctx.element(c)
        rows = np.zeros((n + 1, ctx.r), dtype=np.int64)
        rows[n] = elem.coords
        return cls(ctx, rows)

    @classmethod
    def from_coeffs(cls, ctx: FieldCtx, coeffs: Iterable[Scalar]) -> "APoly":
        rows = []
        for c in coeffs:
            elem = c if isinstance(c, FqElem) else ctx.element(c)
            rows.append(elem.coords)
        if not rows:
            return cls.zero(ctx)
        return cls(ctx, np.array(rows, dtype=np.int64))

    @classmethod
    def from_json(cls, ctx: FieldCtx, data: Sequence[Sequence[int]]) -> "APoly":
        return cls.from_coeffs(ctx, (ctx.element(list(c)) for c in data))

    @classmethod
    def random(cls, ctx: FieldCtx, rng: random.Random, max_degree: int) -> "APoly":
        rows = [[rng.randrange(ctx.p) for _ in range(ctx.r)] for _ in range(max_degree + 1)]
        return cls(ctx, np.array(rows, dtype=np.int64))

    # --- inspection -----------------------------------------------------------

    @property
    def rows(self) -> np.ndarray:
        return self._rows

    @property
    def degree(self) -> int:
        """Degree in T; -1 for the zero polynomial."""
        return len(self._rows) - 1

    def is_zero(self) -> bool:
        return len(self._rows) == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def coeff(self, i: int) -> FqElem:
        if 0 <= i < len(self._rows):
            return FqElem(self.ctx, tuple(int(c) for c in self._rows[i]))
        return self.ctx.zero

    def coeffs(self) -> List[FqElem]:
        return [self.coeff(i) for i in range(len(self._rows))]

    @property
    def leading(self) -> FqElem:
        return self.coeff(self.degree)

    def is_monic(self) -> bool:
        return not self.is_zero() and self.leading == self.ctx.one

    def monic(self) -> "APoly":
        if self.is_zero():
            return self
        return self.scale(self.leading.inverse())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = APoly.constant(self.ctx, other)
        if not isinstance(other, APoly):
            return NotImplemented
        return self.ctx == other.ctx and np.array_equal(self._rows, other._rows)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ctx, self._rows.shape, self._rows.tobytes()))
        return self._hash

    # --- ring operations ---------------------------------------------------------

    def _coerce(self, other: "APoly | Scalar") -> "APoly":
        if isinstance(other, APoly):
            if other.ctx != self.ctx:
                raise ValueError("polynomials over different fields")
            return other
        return APoly.constant(self.ctx, other)

    def __add__(self, other: "APoly | Scalar") -> "APoly":
        o = self._coerce(other)
        a, b = self._rows, o._rows
        if len(a) < len(b):
            a, b = b, a
        out = a.copy()
        out[: len(b)] += b
        return APoly(self.ctx, out % self.ctx.p, canonical=False)

    __radd__ = __add__

    def __neg__(self) -> "APoly":
        return APoly(self.ctx, (-self._rows) % self.ctx.p, canonical=True)

    def __sub__(self, other: "APoly | Scalar") -> "APoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "APoly | Scalar") -> "APoly":
        return self._coerce(other) - self

    def __mul__(self, other: "APoly | Scalar") -> "APoly":
        if isinstance(other, (int, np.integer)):
            return APoly(self.ctx, self._rows * (int(other) % self.ctx.p), canonical=False)
        if isinstance(other, FqElem):
            return self.scale(other)
        if not isinstance(other, APoly):
            return NotImplemented
        return APoly(self.ctx, _mul_rows(self.ctx, self._rows, other._rows), canonical=False)

    __rmul__ = __mul__

    def scale(self, c: FqElem) -> "APoly":
        if self.ctx.r == 1:
            return APoly(self.ctx, self._rows * c.coords[0], canonical=False)
        mat = self.ctx.scalar_matrix(c.array)
        return APoly(self.ctx, (self._rows @ mat) % self.ctx.p, canonical=False)

    def __pow__(self, n: int) -> "APoly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = APoly.one(self.ctx), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, n: int) -> "APoly":
        """Multiply by T^n."""
        if self.is_zero() or n == 0:
            return self
        pad = np.zeros((n, self.ctx.r), dtype=np.int64)
        return APoly(self.ctx, np.vstack([pad, self._rows]), canonical=True)

    def __call__(self, x: FqElem) -> FqElem:
        acc = self.ctx.zero
        for c in reversed(self.coeffs()):
            acc = acc * x + c
        return acc

    # --- division -----------------------------------------------------------------

    def divrem(self, other: "APoly") -> Tuple["APoly", "APoly"]:
        """Schoolbook division: self = q*other + r with deg r < deg other."""
        b = self._coerce(other)
        if b.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        ctx, p = self.ctx, self.ctx.p
        na, nb = len(self._rows), len(b._rows)
        if na < nb:
            return APoly.zero(ctx), self
        lc_inv = b.leading.inverse()
        work = self._rows.copy()
        quot = np.zeros((na - nb + 1, ctx.r), dtype=np.int64)
        b_rows = b._rows
        for i in range(na - nb, -1, -1):
            lead = work[i + nb - 1]
            if not lead.any():
                continue
            q_i = ctx.mul_coords(lead, lc_inv.array)
            quot[i] = q_i
            if ctx.r == 1:
                work[i : i + nb] = (work[i : i + nb] - b_rows * q_i[0]) % p
            else:
                mat = ctx.scalar_matrix(q_i)
                work[i : i + nb] = (work[i : i + nb] - b_rows @ mat) % p
        return APoly(ctx, quot), APoly(ctx, work[: nb - 1])

    def __floordiv__(self, other: "APoly") -> "APoly":
        return self.divrem(other)[0]

    def __mod__(self, other: "APoly") -> "APoly":
        return self.divrem(other)[1]

    def __divmod__(self, other: "APoly") -> Tuple["APoly", "APoly"]:
        return self.divrem(other)

    def exact_div(self, other: "APoly") -> "APoly":
        quot, rem = self.divrem(other)
        if not rem.is_zero():
            raise InexactDivision(f"{other} does not divide {self}")
        return quot

    def gcd(self, other: "APoly") -> "APoly":
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def gcdext(self, other: "APoly") -> Tuple["APoly", "APoly", "APoly"]:
        """Return (g, s, t) with g = s*self + t*other and g monic."""
        ctx = self.ctx
        a, b = self, self._coerce(other)
        s, s1 = APoly.one(ctx), APoly.zero(ctx)
        t, t1 = APoly.zero(ctx), APoly.one(ctx)
        while not b.is_zero():
            quot, rem = a.divrem(b)
            a, b = b, rem
            s, s1 = s1, s - quot * s1
            t, t1 = t1, t - quot * t1
        if a.is_zero():
            return a, s, t
        inv = a.leading.inverse()
        return a.scale(inv), s.scale(inv), t.scale(inv)

    def to_json(self) -> List[List[int]]:
        return [[int(c) for c in row] for row in self._rows]

    def __repr__(self) -> str:
        return f"APoly({format_apoly(self)})"

    def __str__(self) -> str:
        return format_apoly(self)


def _mul_rows(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        return np.zeros((0, ctx.r), dtype=np.int64)
    p, r = ctx.p, ctx.r
    if r == 1:
        return (np.convolve(a[:, 0], b[:, 0]) % p).reshape(-1, 1)
    block = 2 * r - 1
    za = np.zeros((na, block), dtype=np.int64)
    zb = np.zeros((nb, block), dtype=np.int64)
    za[:, :r] = a
    zb[:, :r] = b
    flat = np.convolve(za.ravel(), zb.ravel()) % p
    n_out = na + nb - 1
    full = np.zeros(n_out * block, dtype=np.int64)
    full[: min(len(flat), n_out * block)] = flat[: n_out * block]
    return (full.reshape(n_out, block) @ ctx.reduction_matrix) % p


def format_fq(c: FqElem) -> str:
    """Human syntax for an F_q element, e.g. '2' or '(x+2)'."""
    if c.ctx.r == 1:
        return str(c.coords[0])
    parts = []
    for j, v in enumerate(c.coords):
        if not v:
            continue
        mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
        if not mono:
            parts.append(str(v))
        else:
            parts.append(mono if v == 1 else f"{v}*{mono}")
    body = "+".join(reversed(parts)) or "0"
    return body if len(parts) <= 1 else f"({body})"


def format_apoly(a: APoly) -> str:
    if a.is_zero():
        return "0"
    parts = []
    for i in range(a.degree, -1, -1):
        c = a.coeff(i)
        if c.is_zero():
            continue
        mono = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
        coeff = format_fq(c)
        if not mono:
            parts.append(coeff)
        elif coeff == "1":
            parts.append(mono)
        else:
            parts.append(f"{coeff}*{mono}")
    return "+".join(parts)
