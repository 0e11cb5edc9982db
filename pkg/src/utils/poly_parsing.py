from __future__ import annotations

import json
from typing import List

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from src.arith.apoly import APoly
from src.arith.finite_field import FieldCtx
from src.errors import UsageError

_T, _X = sympy.symbols("T x")
_TRANSFORMS = standard_transformations + (convert_xor,)


def _parse(text: str) -> sympy.Expr:
    """Parse human polynomial syntax ("T^3+2*T+1", "T+x", "x^2+1")."""
    if not text or not text.strip():
        raise UsageError("empty polynomial")
    try:
        expr = parse_expr(text.strip(), local_dict={"T": _T, "x": _X}, transformations=_TRANSFORMS)
    except (SyntaxError, TypeError, sympy.SympifyError) as e:
        raise UsageError(f"cannot parse polynomial {text!r}: {e}") from e
    stray = expr.free_symbols - {_T, _X}
    if stray:
        raise UsageError(f"unknown symbols {sorted(map(str, stray))} in {text!r}")
    return sympy.expand(expr)


def _integer_terms(expr: sympy.Expr, *gens: sympy.Symbol) -> List[tuple]:
    poly = sympy.Poly(expr, *gens)
    terms = []
    for monom, coeff in poly.terms():
        if not coeff.is_integer:
            raise UsageError(f"non-integer coefficient {coeff} in {expr}")
        terms.append((monom, int(coeff)))
    return terms


def parse_modulus(text: str, p: int) -> List[int]:
    """F_p coefficients of a modulus in x, ascending: 'x^2+1' -> [1, 0, 1]."""
    expr = _parse(text)
    if _T in expr.free_symbols:
        raise UsageError(f"modulus {text!r} must be a polynomial in x only")
    terms = _integer_terms(expr, _X)
    degree = max(m[0] for m, _ in terms)
    out = [0] * (degree + 1)
    for (j,), c in terms:
        out[j] = c % p
    return out


def parse_apoly(text: str, ctx: FieldCtx) -> APoly:
    """An element of F_q[T] from human syntax or from its JSON encoding."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            return APoly.from_json(ctx, json.loads(stripped))
        except (ValueError, TypeError) as e:
            raise UsageError(f"bad polynomial JSON {text!r}: {e}") from e
    expr = _parse(stripped)
    if _X in expr.free_symbols and ctx.r == 1:
        raise UsageError(f"{text!r} uses x but F_{ctx.q} is a prime field")
    terms = _integer_terms(expr, _T, _X)
    degree = max(m[0] for m, _ in terms)
    coeffs = [ctx.zero] * (degree + 1)
    for (i, j), c in terms:
        coeffs[i] = coeffs[i] + ctx.gen**j * c
    return APoly.from_coeffs(ctx, coeffs)
