"""Elements of K = F_q(T), kept reduced with a monic denominator."""

from __future__ import annotations

from typing import Any, Dict, Union

from src.arith.apoly import APoly
from src.arith.finite_field import FieldCtx, FqElem
from src.errors import DivisionByZero

Operand = Union["KFrac", APoly, int, FqElem]


class KFrac:
    __slots__ = ("num", "den")

    def __init__(self, num: APoly, den: APoly | None = None) -> None:
        ctx = num.ctx
        if den is None:
            den = APoly.one(ctx)
        if den.is_zero():
            raise DivisionByZero("fraction with zero denominator")
        if num.is_zero():
            num, den = num, APoly.one(ctx)
        else:
            g = num.gcd(den)
            if not (g.degree == 0):
                num, den = num.exact_div(g), den.exact_div(g)
            lc_inv = den.leading.inverse()
            num, den = num.scale(lc_inv), den.scale(lc_inv)
        self.num = num
        self.den = den

    @property
    def ctx(self) -> FieldCtx:
        return self.num.ctx

    @classmethod
    def from_json(cls, ctx: FieldCtx, data: Dict[str, Any]) -> "KFrac":
        return cls(APoly.from_json(ctx, data["num"]), APoly.from_json(ctx, data["den"]))

    def to_json(self) -> Dict[str, Any]:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def _coerce(self, other: Operand) -> "KFrac":
        if isinstance(other, KFrac):
            return other
        if isinstance(other, APoly):
            return KFrac(other)
        return KFrac(APoly.constant(self.ctx, other))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (APoly, int, FqElem)):
            other = self._coerce(other)
        if not isinstance(other, KFrac):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other: Operand) -> "KFrac":
        o = self._coerce(other)
        if self.den == o.den:
            return KFrac(self.num + o.num, self.den)
        return KFrac(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "KFrac":
        return KFrac(-self.num, self.den)

    def __sub__(self, other: Operand) -> "KFrac":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Operand) -> "KFrac":
        return self._coerce(other) - self

    def __mul__(self, other: Operand) -> "KFrac":
        o = self._coerce(other)
        return KFrac(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "KFrac":
        if self.is_zero():
            raise DivisionByZero("inverse of zero in K")
        return KFrac(self.den, self.num)

    def __truediv__(self, other: Operand) -> "KFrac":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: Operand) -> "KFrac":
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "KFrac":
        if n < 0:
            return self.inverse() ** (-n)
        return KFrac(self.num ** n, self.den ** n)

    def __repr__(self) -> str:
        if self.is_polynomial():
            return f"KFrac({self.num})"
        return f"KFrac(({self.num})/({self.den}))"
