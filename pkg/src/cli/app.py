"""dmod: command-line front end.

    dmod <gen|decompose|series|vm|phi|filtration|congruent|verify> [flags]

Results go to stdout as JSON (or text with --format text); logs go to stderr.
Exit codes: 0 success, 1 mathematical failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, Optional

import sympy

from src.arith.finite_field import FieldCtx
from src.arith.rings import ring_from_tag
from src.cli.config import Config, build_config
from src.cli.schemas import dumps, error_json, parse_form, parse_form_pair, parse_series, render
from src.errors import DmodError, NotPrime, UsageError
from src.forms.generators import GeneratorCache, gen_series
from src.forms.graded import from_series, to_series, victor_miller
from src.forms.isobaric import phi_d
from src.modp.filtration import congruence_evidence, filtration
from src.modp.reduction import phi_bar
from src.verify.checks import SUITES, run_suite

logger = logging.getLogger("dmod")

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s - %(message)s"


def _field_from_q(q: int) -> Dict[str, int]:
    """--q 9 -> {"p": 3, "r": 2}."""
    if sympy.isprime(q):
        return {"p": q, "r": 1}
    power = sympy.perfect_power(q)
    if not power or not sympy.isprime(power[0]):
        raise NotPrime(f"q = {q} is not a prime power")
    return {"p": int(power[0]), "r": int(power[1])}


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    field: Dict[str, Any] = {}
    if args.q is not None:
        field.update(_field_from_q(args.q))
    if args.p is not None:
        field["p"] = args.p
    if args.r is not None:
        field["r"] = args.r
    if args.modulus is not None:
        field["modulus"] = args.modulus
    out: Dict[str, Any] = {"field": field} if field else {}
    for key in ("pi", "prec", "format", "log_level", "workers"):
        value = getattr(args, key, None)
        if value is not None:
            out[key] = value
    return out


def _read_stdin() -> str:
    text = sys.stdin.read()
    if not text.strip():
        raise UsageError("expected JSON on stdin")
    return text


# --- subcommands -----------------------------------------------------------------


def cmd_gen(args: argparse.Namespace, cfg: Config, ctx: FieldCtx) -> Any:
    return gen_series(ctx, args.name, cfg.prec, cfg.prime(ctx))


def cmd_decompose(args: argparse.Namespace, cfg: Config, ctx: FieldCtx) -> Any:
    series = parse_series(_read_stdin(), ctx, cfg.prime(ctx))
    return from_series(args.weight, args.type, series)


def cmd_series(args: argparse.Namespace, cfg: Config, ctx: FieldCtx) -> Any:
    text = args.form if args.form is not None else _read_stdin()
    return to_series(parse_form(text, ctx, cfg.prime(ctx)), cfg.prec)


def cmd_vm(args: argparse.Namespace, cfg: Config, ctx: FieldCtx) -> Any:
    prime = cfg.require_prime(ctx) if args.ring == "Fpd" else cfg.prime(ctx)
    ring = ring_from_tag(args.ring, ctx, prime)
    return victor_miller(ctx, args.weight, args.type, ring)


def cmd_phi(args: argparse.Namespace, cfg: Config, ctx: FieldCtx) -> Any:
    if args.d < 0:
        raise UsageError(f"--d must be >= 0, got {args.d}")
    if args.reduce:
        return phi_bar(ctx, args.d, cfg.require_prime(ctx))
    return phi_d(ctx, args.d)


def cmd_filtration(args: argparse.Namespace, cfg: Config, ctx: FieldCtx) -> Any:
    prime = cfg.require_prime(ctx)
    text = args.form if args.form is not None else _read_stdin()
    return filtration(parse_form(text, ctx), prime)


def cmd_congruent(args: argparse.Namespace, cfg: Config, ctx: FieldCtx) -> Any:
    prime = cfg.require_prime(ctx)
    stdin = "" if len(args.forms) == 2 else _read_stdin()
    f, g = parse_form_pair(args.forms, stdin, ctx)
    return congruence_evidence(f, g, prime)


def cmd_verify(args: argparse.Namespace, cfg: Config, ctx: FieldCtx) -> Any:
    return run_suite(
        args.suite,
        ctx,
        cfg.prec,
        prime=cfg.prime(ctx),
        cache=GeneratorCache(ctx),
        workers=cfg.workers,
        seed=args.seed,
        samples=args.samples,
    )


def _render_verify(report: Any, fmt: str) -> str:
    if fmt != "text":
        return dumps(report.model_dump())
    lines = [
        f"{'PASS' if c.passed else 'FAIL'}  {c.id:<28} {c.anchor}  [{c.details}]" for c in report.checks
    ]
    lines.append(f"suite {report.suite}: {'pass' if report.passed else 'FAIL'}")
    return "\n".join(lines)


def _render_congruent(evidence: Any, fmt: str) -> str:
    if fmt != "text":
        return dumps(evidence.to_json())
    return f"{'true' if evidence.congruent else 'false'}  ({evidence.reason})"


# --- parser ----------------------------------------------------------------------


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, help="Field size; a prime, or a prime power with --modulus.")
    common.add_argument("--p", type=int, help="Characteristic (odd prime).")
    common.add_argument("--r", type=int, help="Degree of F_q over F_p.")
    common.add_argument("--modulus", help="Irreducible modulus in x for r > 1, e.g. 'x^2+1'.")
    common.add_argument("--pi", help="Monic irreducible π in A, e.g. 'T+1'.")
    common.add_argument("--prec", type=int, help="Series precision N (terms mod u^N).")
    common.add_argument("--format", choices=("json", "text"), help="Output format.")
    common.add_argument("--config", help="YAML file overriding the packaged defaults.")
    common.add_argument("--log-level", dest="log_level", help="DEBUG, INFO, WARNING, ERROR.")
    common.add_argument("--workers", type=int, help="verify: checks run concurrently.")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="dmod", description="Drinfeld modular forms for Γ₀(T).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="u-expansion of a named generator.")
    p.add_argument("name", help="E, ET, g1, g1T, deltaT, deltaW, h, delta, Ep or gd:<d>.")
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("decompose", parents=[common], help="Series JSON on stdin -> graded form.")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--type", type=int, required=True)
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("series", parents=[common], help="Graded form -> series JSON.")
    p.add_argument("form", nargs="?", help="Form JSON or a name such as deltaT; default stdin.")
    p.set_defaults(handler=cmd_series)

    p = sub.add_parser("vm", parents=[common], help="Victor-Miller basis of M_{k,l}.")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--type", type=int, required=True)
    p.add_argument("--ring", choices=("A", "K", "Fpd"), default="A")
    p.set_defaults(handler=cmd_vm)

    p = sub.add_parser("phi", parents=[common], help="φ_d(U, V) over A.")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--reduce", action="store_true", help="Reduce modulo --pi.")
    p.set_defaults(handler=cmd_phi)

    p = sub.add_parser("filtration", parents=[common], help="Weight filtration w(f̄).")
    p.add_argument("form", nargs="?", help="Form JSON or a name; default stdin.")
    p.set_defaults(handler=cmd_filtration)

    p = sub.add_parser("congruent", parents=[common], help="Decide f ≡ g (mod π).")
    p.add_argument("forms", nargs="*", help="Two forms (JSON or names); default a JSON pair on stdin.")
    p.set_defaults(handler=cmd_congruent, render=_render_congruent)

    p = sub.add_parser("verify", parents=[common], help="Run a verification suite.")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--seed", type=int, default=0, help="Seed for the random samples.")
    p.add_argument("--samples", type=int, help="Random samples per sampled check.")
    p.set_defaults(handler=cmd_verify, render=_render_verify)
    return parser


def _configure_logging(level: str) -> None:
    numeric = getattr(logging, level.upper(), logging.WARNING)
    logging.basicConfig(level=numeric, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger().setLevel(numeric)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    _configure_logging(args.log_level or "WARNING")
    try:
        cfg = build_config(_overrides(args), args.config)
        _configure_logging(cfg.log_level)
        ctx = cfg.field_ctx()
        logger.info("command %s over F_%d", args.command, ctx.q)
        result = args.handler(args, cfg, ctx)
    except DmodError as e:
        logger.error("%s: %s", e.kind, e)
        print(error_json(e.kind, str(e)))
        return e.exit_code

    renderer: Callable[[Any, str], str] = getattr(args, "render", render)
    print(renderer(result, cfg.format))
    if args.command == "verify":
        return 0 if result.passed else 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
