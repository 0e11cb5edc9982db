"""Tests for reduction modulo 𝔭, the weight filtration and congruences."""
import pytest

from src.arith.apoly import APoly
from src.arith.kfrac import KFrac
from src.arith.rings import FractionField, PolynomialRing
from src.errors import NotPIntegral, RingMismatch, ZeroDivisor, ZeroPolynomial
from src.forms.graded import GradedForm, gd_form, named_form
from src.forms.isobaric import IsobaricPoly
from src.modp import (
    congruence_evidence,
    congruent,
    coprime_with_phi,
    filtration,
    iso_divides,
    iso_reduce,
    phi_bar,
    phi_minus_one_irreducible,
    squarefree,
    verify_E_congruence,
    verify_Ep_congruence,
)


def reduced_uv(ctx, prime):
    A = PolynomialRing(ctx)
    U = iso_reduce(IsobaricPoly.monomial(A, 1, 0), prime)
    V = iso_reduce(IsobaricPoly.monomial(A, 1, 1), prime)
    return U, V


# --- reduction ------------------------------------------------------------------


def test_phi_one_reduces_to_u_plus_v(f3, prime_t1):
    U, V = reduced_uv(f3, prime_t1)
    assert phi_bar(f3, 1, prime_t1) == U + V


def test_reduction_kills_multiples_of_pi(f3, prime_t1):
    A = PolynomialRing(f3)
    assert iso_reduce(IsobaricPoly.monomial(A, 1, 0, prime_t1.pi), prime_t1).is_zero()


def test_reduction_rejects_poles(f3, prime_t1):
    K = FractionField(f3)
    phi = IsobaricPoly(K, 0, [KFrac(APoly.one(f3), prime_t1.pi)])
    with pytest.raises(NotPIntegral):
        iso_reduce(phi, prime_t1)


def test_reduction_keeps_its_prime(f3, prime_t1, prime_t2_1):
    with pytest.raises(RingMismatch):
        iso_reduce(phi_bar(f3, 1, prime_t1), prime_t2_1)


def test_iso_divides(f3, prime_t1):
    U, V = reduced_uv(f3, prime_t1)
    phi = phi_bar(f3, 1, prime_t1)
    assert iso_divides(phi, phi * V) == V
    assert iso_divides(phi, U) is None
    assert iso_divides(phi * V, V) is None
    with pytest.raises(ZeroDivisor):
        iso_divides(U.scale(APoly.zero(f3)), phi)


def test_squarefree(f3, prime_t1):
    U, V = reduced_uv(f3, prime_t1)
    assert squarefree(phi_bar(f3, 1, prime_t1))
    assert not squarefree((U + V) ** 2)
    assert not squarefree(U * U * V)
    with pytest.raises(ZeroPolynomial):
        squarefree(U.scale(APoly.zero(f3)))


@pytest.mark.parametrize("which", ["prime_t1", "prime_t2_1", "prime_f5"])
def test_phi_bar_is_squarefree_and_coprime_to_psi(request, which):
    prime = request.getfixturevalue(which)
    phi = phi_bar(prime.ctx, prime.d, prime)
    assert squarefree(phi)
    assert phi.u_exponent() == 0
    assert phi.v_exponent() == 0
    assert coprime_with_phi(prime.d, prime)


def test_phi_minus_one_irreducible(prime_t1, prime_t2_1):
    assert phi_minus_one_irreducible(prime_t1)
    with pytest.raises(NotImplementedError):
        phi_minus_one_irreducible(prime_t2_1)


# --- filtration -----------------------------------------------------------------


def test_filtration_of_ET(f3, prime_t1):
    result = filtration(named_form(f3, "ET"), prime_t1)
    assert result.value == 2
    assert result.steps == 0


def test_filtration_strips_gd(f3, prime_t1, prime_t2_1):
    f = named_form(f3, "deltaT") * gd_form(f3, 1)
    result = filtration(f, prime_t1)
    assert result.value == f3.q - 1
    assert result.steps == 1
    g = named_form(f3, "deltaT") * gd_form(f3, 2)
    assert filtration(g, prime_t2_1).value == 2


def test_filtration_of_zero_reduction(f3, prime_t1):
    f = named_form(f3, "deltaT")
    f = GradedForm(f.k, f.l, f.iso.scale(prime_t1.pi))
    result = filtration(f, prime_t1)
    assert result.is_minus_infinity
    assert result.to_json()["w"] == "-inf"


def test_filtration_is_congruent_to_weight(f3, prime_t1):
    f = named_form(f3, "h") * gd_form(f3, 1) ** 3
    result = filtration(f, prime_t1)
    assert result.value <= f.k
    assert (f.k - result.value) % 2 == 0


# --- congruences ----------------------------------------------------------------


def test_gd_is_congruent_to_one(f3, prime_t1):
    evidence = congruence_evidence(gd_form(f3, 1), named_form(f3, "one"), prime_t1)
    assert evidence.congruent
    assert evidence.m == 1
    assert evidence.to_json()["same_type"] is True


def test_distinct_generators_are_not_congruent(f3, prime_t1):
    assert not congruent(named_form(f3, "deltaT"), named_form(f3, "deltaW"), prime_t1)


def test_types_must_agree(f3, prime_t1):
    evidence = congruence_evidence(named_form(f3, "ET"), named_form(f3, "one"), prime_t1)
    assert not evidence.congruent
    assert not evidence.same_type
    assert evidence.m is None


def test_weights_must_agree_modulo_step(f3, prime_t2_1):
    evidence = congruence_evidence(gd_form(f3, 1), named_form(f3, "one"), prime_t2_1)
    assert not evidence.congruent
    assert "modulo 8" in evidence.reason


def test_E_congruence_small(cache3, cache5, prime_t1, prime_t2_1, prime_f5):
    assert verify_E_congruence(prime_t1, 30, cache3)
    assert verify_E_congruence(prime_t2_1, 30, cache3)
    assert verify_E_congruence(prime_f5, 30, cache5)


@pytest.mark.slow
@pytest.mark.parametrize("which", ["prime_t1", "prime_t2_1", "prime_f5"])
def test_E_congruence_long(request, which):
    prime = request.getfixturevalue(which)
    assert verify_E_congruence(prime, 100)


def test_Ep_congruence(cache3, prime_t1, prime_t2_1):
    assert verify_Ep_congruence(prime_t1, 30, cache3)
    assert verify_Ep_congruence(prime_t2_1, 30, cache3)


def test_forms_reducing_to_zero_are_congruent_whatever_their_types(f3, prime_t1):
    f = named_form(f3, "ET").scale(prime_t1.pi)
    g = named_form(f3, "one").scale(prime_t1.pi)
    assert congruent(f, g, prime_t1)
    evidence = congruence_evidence(f, g, prime_t1)
    assert evidence.congruent
    assert not evidence.same_type
    assert evidence.m is None
    assert evidence.reason == "both forms reduce to zero"


def test_one_form_reducing_to_zero_is_not_congruent(f3, prime_t1):
    f = named_form(f3, "deltaT")
    evidence = congruence_evidence(f, f.scale(prime_t1.pi), prime_t1)
    assert not evidence.congruent
    assert evidence.same_type
