from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, model_validator

from src.arith.finite_field import FieldCtx, make_field_ctx
from src.arith.primes import PrimeSpec, validate_prime
from src.errors import PrecisionOutOfRange, UsageError
from src.utils.poly_parsing import parse_apoly, parse_modulus

load_dotenv()

logger = logging.getLogger(__name__)

CONFIG_FILE_PATH = Path(__file__).parent / "config.yaml"
PREC_CAP_ENV = "DMOD_PREC_CAP"


class FieldConfig(BaseModel):
    p: int = Field(3, description="Characteristic (odd prime).")
    r: int = Field(1, ge=1, description="Degree of F_q over F_p.")
    modulus: Optional[str | List[int]] = Field(
        default=None, description="Monic irreducible modulus in x, required when r > 1."
    )


class Config(BaseModel):
    field: FieldConfig = Field(default_factory=FieldConfig)
    pi: Optional[str] = None
    prec: int = Field(60, ge=1)
    prec_cap: int = Field(10000, ge=1)
    format: Literal["json", "text"] = "json"
    log_level: str = "WARNING"
    workers: int = Field(1, ge=1)

    @model_validator(mode="after")
    def _check_prec(self) -> "Config":
        if self.prec > self.prec_cap:
            raise ValueError(f"precision {self.prec} exceeds the hard cap {self.prec_cap}")
        return self

    @property
    def q(self) -> int:
        return self.field.p**self.field.r

    def field_ctx(self) -> FieldCtx:
        modulus = self.field.modulus
        if isinstance(modulus, str):
            modulus = parse_modulus(modulus, self.field.p)
        return make_field_ctx(self.field.p, self.field.r, modulus)

    def prime(self, ctx: FieldCtx) -> Optional[PrimeSpec]:
        if self.pi is None:
            return None
        return validate_prime(parse_apoly(self.pi, ctx))

    def require_prime(self, ctx: FieldCtx) -> PrimeSpec:
        prime = self.prime(ctx)
        if prime is None:
            raise UsageError("this command needs a prime: pass --pi")
        return prime


def read_config_file(config_path: Path | str) -> Dict[str, Any]:
    """Read one dmod YAML layer: a mapping over the keys of `Config`.

    An empty file is an empty layer. Unknown top-level keys are rejected so a
    misspelt `prec_cap` cannot silently fall back to the packaged default.

    Raises:
        UsageError: the file is missing, is not valid YAML, is not a mapping,
            or names a key dmod does not know.
    """
    path = Path(config_path)
    if not path.is_file():
        raise UsageError(f"configuration file not found: {path}")
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except yaml.YAMLError as e:
        raise UsageError(f"{path} is not valid YAML: {e}") from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise UsageError(f"{path} must hold a mapping of settings, not {type(data).__name__}")
    unknown = sorted(set(data) - set(Config.model_fields))
    if unknown:
        raise UsageError(f"{path}: unknown settings {unknown}; expected some of {sorted(Config.model_fields)}")
    logger.debug("Read %d settings from %s", len(data), path)
    return data


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    out = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(out.get(key), dict):
            out[key] = _merge(out[key], value)
        else:
            out[key] = value
    return out


def build_config(
    overrides: Optional[Dict[str, Any]] = None, config_path: Optional[Path | str] = None
) -> Config:
    """Packaged YAML < --config file < DMOD_PREC_CAP < command-line overrides."""
    data = read_config_file(CONFIG_FILE_PATH)
    if config_path is not None:
        data = _merge(data, read_config_file(config_path))
    cap = os.getenv(PREC_CAP_ENV)
    if cap:
        try:
            data["prec_cap"] = int(cap)
        except ValueError as e:
            raise UsageError(f"{PREC_CAP_ENV} must be an integer, got {cap!r}") from e
        logger.info("Precision cap overridden from %s: %s", PREC_CAP_ENV, cap)
    data = _merge(data, overrides or {})
    try:
        return Config.model_validate(data)
    except ValidationError as e:
        for err in e.errors():
            if err.get("loc", ())[:1] == ("prec",) or "hard cap" in str(err.get("msg", "")):
                raise PrecisionOutOfRange(f"invalid precision: {err.get('msg')}") from e
        raise UsageError(f"invalid configuration: {e}") from e
