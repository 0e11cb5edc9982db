"""Wire models for the JSON read from stdin and written to stdout.

Coefficients travel in the field-arith encodings; on input an A-coefficient
may also be given as polynomial text ("T^3+2*T+1").
"""

from __future__ import annotations

import json
from typing import Any, List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, ValidationError

from src.arith.apoly import format_apoly
from src.arith.finite_field import FieldCtx
from src.arith.kfrac import KFrac
from src.arith.primes import PrimeSpec
from src.errors import UsageError
from src.forms.graded import GRADED_NAMES, GradedForm, named_form
from src.forms.isobaric import IsobaricPoly, format_isobaric
from src.series.useries import USeries
from src.utils.poly_parsing import parse_apoly

RingTag = Literal["A", "K", "Fpd"]


class SeriesPayload(BaseModel):
    ring: RingTag = "A"
    prec: int = Field(..., ge=1, description="Terms are known modulo u^prec.")
    terms: List[Tuple[int, Any]] = Field(default_factory=list)


class IsobaricPayload(BaseModel):
    ring: RingTag = "A"
    weight: int = Field(..., ge=0, description="Isobaric weight k - 2l.")
    coeffs: List[Any] = Field(default_factory=list, description="c_j of U^(w-j) V^j.")


class FormPayload(BaseModel):
    k: int = Field(..., ge=0)
    l: int = Field(..., ge=0)
    iso: IsobaricPayload


class ErrorPayload(BaseModel):
    error: str
    detail: str


def _coeff(value: Any, ring: str, ctx: FieldCtx) -> Any:
    if isinstance(value, str) and ring in ("A", "Fpd"):
        return parse_apoly(value, ctx).to_json()
    return value


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"input is not valid JSON: {e}") from e


def parse_series(text: str, ctx: FieldCtx, prime: Optional[PrimeSpec] = None) -> USeries:
    try:
        payload = SeriesPayload.model_validate(_load(text))
    except ValidationError as e:
        raise UsageError(f"bad series JSON: {e}") from e
    data = payload.model_dump()
    data["terms"] = [[n, _coeff(c, payload.ring, ctx)] for n, c in payload.terms]
    return USeries.from_json(data, ctx, prime)


def form_from_data(data: Any, ctx: FieldCtx, prime: Optional[PrimeSpec] = None) -> GradedForm:
    """A GradedForm from its JSON, or from a named form such as "deltaT" or "gd:2"."""
    if isinstance(data, str):
        if data in GRADED_NAMES or data.startswith("gd:"):
            return named_form(ctx, data)
        data = _load(data)
    try:
        payload = FormPayload.model_validate(data)
    except ValidationError as e:
        raise UsageError(f"bad form JSON: {e}") from e
    raw = payload.model_dump()
    raw["iso"]["coeffs"] = [_coeff(c, payload.iso.ring, ctx) for c in payload.iso.coeffs]
    return GradedForm.from_json(raw, ctx, prime=prime)


def parse_form(text: str, ctx: FieldCtx, prime: Optional[PrimeSpec] = None) -> GradedForm:
    stripped = text.strip()
    if stripped.startswith("{"):
        return form_from_data(_load(stripped), ctx, prime)
    return form_from_data(stripped, ctx, prime)


def parse_form_pair(
    texts: Sequence[str], stdin: str, ctx: FieldCtx, prime: Optional[PrimeSpec] = None
) -> Tuple[GradedForm, GradedForm]:
    """Two forms from the command line, or a JSON array of two on stdin."""
    if len(texts) == 2:
        return parse_form(texts[0], ctx, prime), parse_form(texts[1], ctx, prime)
    if texts:
        raise UsageError(f"expected two forms, got {len(texts)}")
    data = _load(stdin)
    if not isinstance(data, list) or len(data) != 2:
        raise UsageError("stdin must hold a JSON array of two forms")
    return form_from_data(data[0], ctx, prime), form_from_data(data[1], ctx, prime)


# --- output ------------------------------------------------------------------------


def dumps(data: Any) -> str:
    return json.dumps(data, ensure_ascii=False, separators=(", ", ": "))


def error_json(kind: str, detail: str) -> str:
    return dumps(ErrorPayload(error=kind, detail=detail).model_dump())


def _format_coeff(c: Any) -> str:
    if isinstance(c, KFrac):
        return str(c)
    return format_apoly(c)


def format_series(s: USeries) -> str:
    body = " + ".join(f"({_format_coeff(c)})*u^{n}" for n, c in s.terms)
    return f"{body or '0'} + O(u^{s.prec})"


def format_form(f: GradedForm) -> str:
    return f"k={f.k} l={f.l}: ({format_isobaric(f.iso)}) * E_T^{f.l}"


def render(value: Any, fmt: str) -> str:
    """One output document in the requested format."""
    if fmt == "text":
        if isinstance(value, USeries):
            return format_series(value)
        if isinstance(value, GradedForm):
            return format_form(value)
        if isinstance(value, IsobaricPoly):
            return format_isobaric(value)
        if isinstance(value, list):
            return "\n".join(render(v, fmt) for v in value)
    if isinstance(value, list):
        return dumps([v.to_json() if hasattr(v, "to_json") else v for v in value])
    if hasattr(value, "to_json"):
        return dumps(value.to_json())
    if isinstance(value, BaseModel):
        return dumps(value.model_dump())
    return dumps(value)
