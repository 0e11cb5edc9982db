"""Executable checks for the generator identities, the structure theorems and
the mod-𝔭 statements. Each check names the statement it certifies."""

from __future__ import annotations

import logging
import random
from typing import Any, List, Optional, Sequence, Tuple

from src.arith.apoly import APoly, format_apoly
from src.arith.finite_field import FieldCtx
from src.arith.primes import PrimeSpec
from src.arith.rings import PolynomialRing
from src.errors import UsageError
from src.forms.carlitz import u_scaled
from src.forms.generators import GeneratorCache
from src.forms.graded import (
    GradedForm,
    b_coefficients,
    cT,
    dimension,
    equality_bound,
    from_series,
    gd_form,
    named_form,
    partial,
    partial_series,
    to_series,
    victor_miller,
)
from src.forms.isobaric import phi_d
from src.modp.filtration import (
    congruence_evidence,
    filtration,
    verify_E_congruence,
    verify_Ep_congruence,
)
from src.modp.reduction import coprime_with_phi, phi_bar, phi_minus_one_irreducible, squarefree
from src.series.useries import USeries, series_compose, series_reduce
from src.verify.report import Check, Outcome, Report, run_checks

logger = logging.getLogger(__name__)

SUITES = ("identities", "structure", "modp", "all")


def _same(lhs: USeries, rhs: USeries) -> Outcome:
    n = lhs.first_difference(rhs)
    common = min(lhs.prec, rhs.prec)
    if n is None:
        return True, f"equal modulo u^{common}"
    return False, f"first difference at u^{n}: {lhs[n]} vs {rhs[n]}"


def _leading(series: USeries, expected: Sequence[Tuple[int, APoly]]) -> Outcome:
    """The terms of `series` up to the last expected exponent are exactly `expected`."""
    limit = min(max(n for n, _ in expected), series.prec - 1)
    want = [(n, c) for n, c in expected if n <= limit]
    got = [(n, c) for n, c in series.terms if n <= limit]
    note = "" if limit == max(n for n, _ in expected) else f" (truncated at u^{series.prec})"
    if got == want:
        return True, "matches " + " + ".join(f"({format_apoly(c)})u^{n}" for n, c in want) + note
    shown = " + ".join(f"({format_apoly(c)})u^{n}" for n, c in got[:4])
    return False, f"got {shown or '0'}{note}"


# --- generator identities ------------------------------------------------------------


def identity_checks(ctx: FieldCtx, prec: int, cache: GeneratorCache) -> List[Check]:
    q = ctx.q
    T = APoly.T(ctx)
    one = APoly.one(ctx)
    tq_t = T**q - T

    def g(name: str) -> USeries:
        return cache.series(name, prec)

    return [
        Check(
            "expansion.deltaT",
            "Δ_T = u^(q-1) - u^(q(q-1)) + ...",
            lambda: _leading(g("deltaT"), [(q - 1, one), (q * (q - 1), -one)]),
        ),
        Check(
            "expansion.deltaW",
            "Δ_W = 1 + T u^(q-1) - T^q u^(q(q-1)) + ...",
            lambda: _leading(g("deltaW"), [(0, one), (q - 1, T), (q * (q - 1), -(T**q))]),
        ),
        Check(
            "expansion.g1",
            "g_1 = 1 - (T^q-T) u^(q-1) - (T^q-T) u^((q^2-q+1)(q-1)) + ...",
            lambda: _leading(
                g("g1"), [(0, one), (q - 1, -tq_t), ((q * q - q + 1) * (q - 1), -tq_t)]
            ),
        ),
        Check("expansion.ET", "E_T = u - T u^q + ...", lambda: _leading(g("ET"), [(1, one), (q, -T)])),
        Check(
            "expansion.h",
            "h = -u - u^((q-1)^2+1) + ...",
            lambda: _leading(g("h"), [(1, -one), ((q - 1) ** 2 + 1, -one)]),
        ),
        Check("expansion.delta", "Δ = -u^(q-1) + ...", lambda: _leading(g("delta"), [(q - 1, -one)])),
        Check("expansion.uT", "u(Tz) = u^q + ...", lambda: _leading(u_scaled(T, prec), [(q, one)])),
        Check(
            "identity.g1",
            "g_1 = Δ_W - T^q Δ_T",
            lambda: _same(g("g1"), g("deltaW") - g("deltaT").scale(T**q)),
        ),
        Check("identity.ET_power", "E_T^(q-1) = Δ_W Δ_T", lambda: _same(g("ET") ** (q - 1), g("deltaW") * g("deltaT"))),
        Check(
            "identity.d_deltaW",
            "∂Δ_W = -Δ_W E_T",
            lambda: _same(partial_series(g("deltaW"), q - 1, cache), -(g("deltaW") * g("ET"))),
        ),
        Check(
            "identity.d_deltaT",
            "∂Δ_T = 0",
            lambda: _same(partial_series(g("deltaT"), q - 1, cache), USeries.zero(cache.ring, prec)),
        ),
        Check("identity.d_ET", "∂E_T = E_T^2", lambda: _same(partial_series(g("ET"), 2, cache), g("ET") * g("ET"))),
        Check("identity.h_from_g1", "h = ∂(g_1)", lambda: _same(g("h"), partial_series(g("g1"), q - 1, cache))),
        Check("identity.h_from_g1T", "h = ∂(g_1(Tz))", lambda: _same(g("h"), partial_series(g("g1T"), q - 1, cache))),
        Check("identity.h", "h = -Δ_W E_T", lambda: _same(g("h"), -(g("deltaW") * g("ET")))),
        Check("identity.delta", "Δ = -Δ_W^q Δ_T", lambda: _same(g("delta"), -((g("deltaW") ** q) * g("deltaT")))),
        Check("identity.h_power", "h^(q-1) = -Δ", lambda: _same(g("h") ** (q - 1), -g("delta"))),
        Check(
            "compose.g1T",
            "g_1(Tz) = g_1 composed with u(Tz)",
            lambda: _same(series_compose(g("g1"), u_scaled(T, prec)), g("g1T")),
        ),
    ]


# --- structure of the graded algebra --------------------------------------------------


def random_form(ctx: FieldCtx, rng: random.Random, max_r: int, max_degree: int = 10) -> GradedForm:
    q = ctx.q
    ring = PolynomialRing(ctx)
    l = rng.randrange(q - 1)
    w = rng.randrange(max_r + 1)
    coeffs = [ring.random_element(rng, max_degree) for _ in range(w + 1)]
    return GradedForm.from_coeffs(ring, w * (q - 1) + 2 * l, l, coeffs)


def admissible_pairs(q: int, count: int) -> List[Tuple[int, int]]:
    pairs = []
    w = 0
    while len(pairs) < count:
        for l in range(q - 1):
            pairs.append((w * (q - 1) + 2 * l, l))
        w += 1
    return pairs[:count]


def _roundtrip(forms: Sequence[GradedForm], cache: GeneratorCache) -> Outcome:
    for i, f in enumerate(forms):
        prec = equality_bound(f.q, f.k, f.l) + f.q
        back = from_series(f.k, f.l, to_series(f, prec, cache), cache)
        if back != f:
            return False, f"sample {i} ({f.k}, {f.l}) did not round-trip"
    return True, f"{len(forms)} forms"


def _mul_hom(forms: Sequence[GradedForm], prec: int, cache: GeneratorCache) -> Outcome:
    for i in range(len(forms) - 1):
        f, g = forms[i], forms[i + 1]
        ok, detail = _same(to_series(f * g, prec, cache), to_series(f, prec, cache) * to_series(g, prec, cache))
        if not ok:
            return False, f"pair {i}: {detail}"
    return True, f"{max(len(forms) - 1, 0)} products modulo u^{prec}"


def _partial_compat(forms: Sequence[GradedForm], prec: int, cache: GeneratorCache) -> Outcome:
    for i, f in enumerate(forms):
        lhs = to_series(partial(f), prec, cache)
        rhs = partial_series(to_series(f, prec, cache), f.k, cache)
        ok, detail = _same(lhs, rhs)
        if not ok:
            return False, f"sample {i} ({f.k}, {f.l}): {detail}"
    return True, f"{len(forms)} forms modulo u^{prec}"


def _leibniz(forms: Sequence[GradedForm]) -> Outcome:
    for i in range(len(forms) - 1):
        f, g = forms[i], forms[i + 1]
        if partial(f * g) != partial(f) * g + f * partial(g):
            return False, f"pair {i} breaks the product rule"
    return True, f"{max(len(forms) - 1, 0)} pairs"


def _cusp_orders(forms: Sequence[GradedForm], cache: GeneratorCache) -> Outcome:
    for i, f in enumerate(forms):
        if f.is_zero():
            continue
        prec = int(f.order_at_infinity()) + 1
        if to_series(f, prec, cache).valuation != f.order_at_infinity():
            return False, f"sample {i}: order at infinity disagrees with the expansion"
    return True, f"{len(forms)} forms"


def _victor_miller(ctx: FieldCtx, pairs: Sequence[Tuple[int, int]], cache: GeneratorCache) -> Outcome:
    q = ctx.q
    ring = PolynomialRing(ctx)
    for k, l in pairs:
        basis = victor_miller(ctx, k, l, cache=cache)
        dim = dimension(q, k, l)
        if len(basis) != dim or any(len(f.iso.coeffs) != dim for f in basis):
            return False, f"({k}, {l}): {len(basis)} basis forms, dimension {dim}"
        prec = equality_bound(q, k, l) + 1
        for j, f in enumerate(basis):
            b = b_coefficients(to_series(f, prec, cache), q, l, dim)
            want = [ring.one if i == j else ring.zero for i in range(dim)]
            if b != want:
                return False, f"({k}, {l}): b-coefficients of f_{j} are not δ_{j}i"
    return True, f"{len(pairs)} weight/type pairs"


def _phi_consistency(ctx: FieldCtx, d: int, prec: int, cache: GeneratorCache) -> Outcome:
    q = ctx.q
    n = max(prec, q**d + 1)
    form = from_series(q**d - 1, 0, cache.gd(d, n), cache)
    if form.iso != phi_d(ctx, d):
        return False, f"decomposition of g_{d} differs from phi_{d}"
    return True, f"g_{d} = phi_{d}(Δ_W, Δ_T) modulo u^{n}"


def structure_checks(
    ctx: FieldCtx,
    prec: int,
    cache: GeneratorCache,
    seed: int = 0,
    samples: int = 25,
    max_r: int = 20,
) -> List[Check]:
    q = ctx.q
    rng = random.Random(seed)
    forms = [random_form(ctx, rng, max_r) for _ in range(samples)]
    mul_prec = min(prec, 2 * max_r * (q - 1) + 2 * q)
    checks = [
        Check("structure.roundtrip", "M^0(Γ_0(T))_R = R[Δ_W, Δ_T], unique φ_f", lambda: _roundtrip(forms, cache)),
        Check("structure.product", "R[U,V,Z]/(UV-Z^(q-1)) ≅ M(Γ_0(T))_R", lambda: _mul_hom(forms, mul_prec, cache)),
        Check(
            "derivation.series",
            "ϑ(∂(φ_f Z^l)) = ∂_k f",
            lambda: _partial_compat(forms, min(prec, max_r * (q - 1) + 2 * q), cache),
        ),
        Check("derivation.leibniz", "∂ is a derivation", lambda: _leibniz(forms)),
        Check("cusps.infinity", "order at ∞ read off φ_f", lambda: _cusp_orders(forms, cache)),
        Check(
            "basis.victor_miller",
            "b_{f_j}(i) = δ_ij, basis size 1 + r_{k,l}",
            lambda: _victor_miller(ctx, admissible_pairs(q, 20), cache),
        ),
    ]
    for d in (1, 2, 3):
        if q**d > 125:
            break
        checks.append(
            Check(
                f"phi.g{d}",
                f"g_{d} = φ_{d}(Δ_W, Δ_T)",
                lambda d=d: _phi_consistency(ctx, d, prec, cache),
            )
        )
    return checks


# --- mod 𝔭 ------------------------------------------------------------------------


def _gd_is_one(prime: PrimeSpec, prec: int, cache: GeneratorCache) -> Outcome:
    reduced = series_reduce(cache.gd(prime.d, prec), prime)
    return _same(reduced, USeries.one(reduced.ring, prec))


def _phi_bar_edges(prime: PrimeSpec) -> Outcome:
    phi = phi_bar(prime.ctx, prime.d, prime)
    c0, cw = phi.coeffs[0], phi.coeffs[-1]
    if phi.ring.is_zero(c0) or phi.ring.is_zero(cw):
        return False, f"c_0 = {c0}, c_w = {cw}"
    return True, f"c_0 = {c0}, c_w = {cw}"


def _filtration_is(f: GradedForm, prime: PrimeSpec, expected: Any) -> Outcome:
    result = filtration(f, prime)
    got = result.to_json()["w"]
    return got == expected, f"w = {got}, {result.steps} divisions"


def _filtration_random(ctx: FieldCtx, prime: PrimeSpec, rng: random.Random, samples: int) -> Outcome:
    step = ctx.q**prime.d - 1
    gd = gd_form(ctx, prime.d)
    for i in range(samples):
        f = random_form(ctx, rng, max_r=6, max_degree=4)
        for _ in range(rng.randrange(3)):
            f = f * gd
        w = filtration(f, prime)
        if w.is_minus_infinity:
            continue
        if (w.value - f.k) % step:
            return False, f"sample {i}: w = {w.value} is not ≡ {f.k} mod {step}"
        if w.value != filtration(cT(f), prime).value + 2 * f.l:
            return False, f"sample {i}: w(f) != w(c_T f) + 2l"
    return True, f"{samples} forms"


def _congruent_pair(f: GradedForm, g: GradedForm, prime: PrimeSpec, expected: bool) -> Outcome:
    ev = congruence_evidence(f, g, prime)
    return ev.congruent == expected, ev.reason


def _series_oracle(
    f: GradedForm, g: GradedForm, prime: PrimeSpec, prec: int, cache: GeneratorCache
) -> Outcome:
    ev = congruence_evidence(f, g, prime)
    if not ev.congruent:
        return False, ev.reason
    return _same(
        series_reduce(to_series(f, prec, cache), prime), series_reduce(to_series(g, prec, cache), prime)
    )


def _congruence_random(
    ctx: FieldCtx, prime: PrimeSpec, rng: random.Random, samples: int, prec: int, cache: GeneratorCache
) -> Outcome:
    step = ctx.q**prime.d - 1
    gd = gd_form(ctx, prime.d)
    hits = 0
    for i in range(samples):
        f = random_form(ctx, rng, max_r=3, max_degree=3)
        if i % 2:
            g = f * gd
            noise = [g.ring.random_element(rng, 2) for _ in range(g.r + 1)]
            g = g + GradedForm.from_coeffs(g.ring, g.k, g.l, noise).scale(prime.pi)
        else:
            g = random_form(ctx, rng, max_r=3, max_degree=3)
        ev = congruence_evidence(f, g, prime)
        if not ev.congruent:
            continue
        hits += 1
        if (f.k - g.k) % step:
            return False, f"pair {i}: weights {f.k}, {g.k} not ≡ mod {step}"
        ok, detail = _same(
            series_reduce(to_series(f, prec, cache), prime), series_reduce(to_series(g, prec, cache), prime)
        )
        if not ok:
            return False, f"pair {i}: {detail}"
    return True, f"{hits} congruent pairs among {samples}"


def modp_checks(
    ctx: FieldCtx,
    prime: PrimeSpec,
    prec: int,
    cache: GeneratorCache,
    seed: int = 0,
    samples: int = 100,
) -> List[Check]:
    q, d = ctx.q, prime.d
    rng = random.Random(seed)
    gd = gd_form(ctx, d)
    delta_t = named_form(ctx, "deltaT")
    delta_w = named_form(ctx, "deltaW")
    one = named_form(ctx, "one")
    checks = [
        Check("modp.gd", "g_d ≡ 1 (mod 𝔭)", lambda: _gd_is_one(prime, prec, cache)),
        Check(
            "modp.squarefree",
            "φ̄_d(U,V) is square-free",
            lambda: (squarefree(phi_bar(ctx, d, prime)), f"phi_{d} mod {prime}"),
        ),
        Check("modp.uv", "U ∤ φ̄_d and V ∤ φ̄_d", lambda: _phi_bar_edges(prime)),
        Check(
            "modp.psi",
            "ψ̄_d and φ̄_d share no common factor",
            lambda: (coprime_with_phi(d, prime), f"d = {d}"),
        ),
        Check(
            "modp.E",
            "E ≡ -∂(g_d) (mod 𝔭)",
            lambda: (verify_E_congruence(prime, prec, cache), f"modulo u^{prec}"),
        ),
        Check(
            "modp.Ep",
            "E_𝔭 ≡ E (mod 𝔭)",
            lambda: (verify_Ep_congruence(prime, prec, cache), f"modulo u^{prec}"),
        ),
    ]
    for m in range(3):
        checks.append(
            Check(
                f"filtration.deltaT_gd{m}",
                "w(Δ_T g_d^m) = q-1",
                lambda m=m: _filtration_is(delta_t * gd**m, prime, q - 1),
            )
        )
    checks += [
        Check("filtration.deltaW_gd", "w(Δ_W g_d) = q-1", lambda: _filtration_is(delta_w * gd, prime, q - 1)),
        Check("filtration.ET", "w(E_T^l) = 2l", lambda: _filtration_is(named_form(ctx, "ET"), prime, 2)),
        Check(
            "filtration.zero",
            "w(f̄) = -∞ for f ≡ 0",
            lambda: _filtration_is(delta_t.scale(prime.pi), prime, "-inf"),
        ),
        Check(
            "filtration.random",
            "w(f̄) ≡ k (mod q^d-1) and w(f̄) = w(c_T(f)) + 2l",
            lambda: _filtration_random(ctx, prime, rng, samples),
        ),
        Check("congruence.gd", "g_d ≡ 1 (mod 𝔭)", lambda: _congruent_pair(gd, one, prime, True)),
        Check(
            "congruence.times_gd",
            "f ≡ f g_d (mod 𝔭)",
            lambda: _series_oracle(delta_t, delta_t * gd, prime, prec, cache),
        ),
        Check(
            "congruence.distinct",
            "Δ_T ≢ Δ_W (mod 𝔭)",
            lambda: _congruent_pair(delta_t, delta_w, prime, False),
        ),
        Check(
            "congruence.random",
            "k_1 ≡ k_2 (mod q^d-1) for congruent forms",
            lambda: _congruence_random(ctx, prime, random.Random(seed + 1), samples, prec, cache),
        ),
    ]
    if d == 1:
        checks.append(
            Check(
                "modp.phi_minus_one",
                "φ̄_d - 1 is irreducible",
                lambda: (phi_minus_one_irreducible(prime), "degree one"),
            )
        )
    return checks


def run_suite(
    suite: str,
    ctx: FieldCtx,
    prec: int,
    prime: Optional[PrimeSpec] = None,
    cache: Optional[GeneratorCache] = None,
    workers: int = 1,
    seed: int = 0,
    samples: Optional[int] = None,
) -> Report:
    cache = cache or GeneratorCache(ctx)
    checks: List[Check] = []
    if suite in ("identities", "all"):
        checks += identity_checks(ctx, prec, cache)
    if suite in ("structure", "all"):
        checks += structure_checks(ctx, prec, cache, seed, samples or 25)
    if suite in ("modp", "all"):
        if prime is None:
            if suite == "modp":
                raise UsageError("suite 'modp' needs --pi")
            logger.warning("no prime configured: skipping the mod-p checks")
        else:
            checks += modp_checks(ctx, prime, prec, cache, seed, samples or 100)
    if not checks:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    return run_checks(suite, checks, workers)
