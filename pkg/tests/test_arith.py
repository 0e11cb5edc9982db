"""Tests for F_q, A = F_q[T], K = F_q(T), primes and residue fields."""
import math
import random

import pytest

from src.arith import apoly_arith
from src.arith.apoly import APoly, format_apoly
from src.arith.finite_field import make_field_ctx
from src.arith.kfrac import KFrac
from src.arith.primes import is_irreducible, monic_polys, residue_map, validate_prime, vp
from src.arith.rings import FractionField, PolynomialRing, ResidueField, ring_from_tag
from src.errors import (
    BadModulus,
    DivisionByZero,
    EvenCharacteristic,
    InexactDivision,
    NotMonic,
    NotPIntegral,
    NotPrime,
    PrimeIsT,
    Reducible,
    RingMismatch,
)
from src.utils.poly_parsing import parse_apoly


def test_prime_field_context(f3):
    assert f3.q == 3
    assert f3.element(4) == f3.element(1)


def test_extension_field_context(f9):
    assert f9.q == 9
    x = f9.gen
    assert x * x == f9.element(2)
    assert x * x.inverse() == f9.one
    assert len(list(f9.elements())) == 9


def test_even_characteristic_is_rejected():
    with pytest.raises(EvenCharacteristic):
        make_field_ctx(2, 1)


def test_composite_characteristic_is_rejected():
    with pytest.raises(NotPrime, match="not prime"):
        make_field_ctx(9, 1)


def test_bad_moduli():
    with pytest.raises(BadModulus, match="required"):
        make_field_ctx(3, 2)
    with pytest.raises(BadModulus, match="reducible"):
        make_field_ctx(3, 2, [2, 0, 1])
    with pytest.raises(BadModulus, match="monic"):
        make_field_ctx(3, 2, [1, 0, 2])


def test_zero_has_no_inverse(f3):
    with pytest.raises(DivisionByZero):
        f3.zero.inverse()


def test_gcd_is_monic(f3):
    a = parse_apoly("T^2-1", f3)
    b = parse_apoly("T-1", f3)
    assert apoly_arith("gcd", a, b) == parse_apoly("T+2", f3)


def test_exact_div(f3):
    a = parse_apoly("T^3-T", f3)
    assert apoly_arith("exact_div", a, APoly.T(f3)) == parse_apoly("T^2-1", f3)
    with pytest.raises(InexactDivision):
        apoly_arith("exact_div", a, parse_apoly("T^2+1", f3))


def test_divrem_schoolbook(f3):
    quot, rem = apoly_arith("divrem", parse_apoly("T^3", f3), parse_apoly("T+1", f3))
    assert quot == parse_apoly("T^2-T+1", f3)
    assert rem == parse_apoly("-1", f3)


def test_division_by_zero_polynomial(f3):
    with pytest.raises(DivisionByZero):
        APoly.T(f3).divrem(APoly.zero(f3))


def test_extension_field_products(f9):
    a = parse_apoly("T+x", f9)
    b = parse_apoly("T-x", f9)
    assert a * b == parse_apoly("T^2+1", f9)
    assert (a * b).exact_div(a) == b


def test_gcdext_bezout(f5):
    a = parse_apoly("T^3+2*T+1", f5)
    b = parse_apoly("T^2+3", f5)
    g, s, t = a.gcdext(b)
    assert g == s * a + t * b
    assert g.is_monic()


def test_format_apoly(f3, f9):
    assert format_apoly(parse_apoly("T^3+2*T+1", f3)) == "T^3+2*T+1"
    assert format_apoly(APoly.zero(f3)) == "0"
    assert format_apoly(parse_apoly("x*T+1", f9)) == "x*T+1"


def test_monic_polys_count(f3):
    polys = list(monic_polys(f3, 2))
    assert len(polys) == 9
    assert all(p.is_monic() and p.degree == 2 for p in polys)


def test_validate_prime(f3):
    assert validate_prime(parse_apoly("T+1", f3)).d == 1
    assert validate_prime(parse_apoly("T^2+1", f3)).d == 2


def test_validate_prime_failures(f3):
    with pytest.raises(PrimeIsT):
        validate_prime(APoly.T(f3))
    with pytest.raises(NotMonic):
        validate_prime(parse_apoly("2*T+1", f3))
    with pytest.raises(Reducible):
        validate_prime(parse_apoly("T^2-1", f3))


def test_is_irreducible_degree_three(f3):
    assert is_irreducible(parse_apoly("T^3-T+1", f3))
    assert not is_irreducible(parse_apoly("T^3-T", f3))


def test_valuations(f3, prime_t1):
    T = APoly.T(f3)
    pi = prime_t1.pi
    assert vp(pi * pi * T, prime_t1) == 2
    assert vp(APoly.zero(f3), prime_t1) == math.inf
    assert vp(KFrac(APoly.one(f3), pi), prime_t1) == -1


def test_residue_map(f3, prime_t1, prime_t2_1):
    T = APoly.T(f3)
    assert residue_map(T, prime_t1) == 2
    assert residue_map(T**3, prime_t2_1) == parse_apoly("2*T", f3)
    assert residue_map(KFrac(APoly.one(f3), parse_apoly("T+2", f3)), prime_t1) == 1


def test_residue_map_rejects_poles(f3, prime_t1):
    with pytest.raises(NotPIntegral):
        residue_map(KFrac(APoly.one(f3), prime_t1.pi), prime_t1)


def test_kfrac_is_reduced(f3):
    frac = KFrac(parse_apoly("T^2-1", f3), parse_apoly("2*T-2", f3))
    assert frac.den == 1
    assert frac == KFrac(parse_apoly("2*T+2", f3))
    with pytest.raises(DivisionByZero):
        KFrac(APoly.one(f3), APoly.zero(f3))


def test_kfrac_arithmetic(f3):
    T = APoly.T(f3)
    a = KFrac(APoly.one(f3), T)
    assert a + a == KFrac(parse_apoly("2", f3), T)
    assert a * T == 1
    assert (a / a) == 1


def test_rings_and_coercions(f3, prime_t1):
    A, K, F = PolynomialRing(f3), FractionField(f3), ResidueField(prime_t1)
    T = APoly.T(f3)
    assert K.coerce_from(A, T) == KFrac(T)
    assert F.coerce_from(A, T) == 2
    assert F.mul(T + 1, APoly.one(f3)) == 0
    assert ring_from_tag("K", f3) == K
    with pytest.raises(RingMismatch):
        A.coerce_from(K, KFrac(T))
    with pytest.raises(RingMismatch):
        ring_from_tag("Fpd", f3)


def test_residue_field_of_degree_two(prime_t2_1):
    F = ResidueField(prime_t2_1)
    assert len(list(F.residue.elements())) == 9
    for a in F.residue.elements():
        if not a.is_zero():
            assert F.mul(a, F.inverse(a)) == 1


def test_field_constants_act_on_polynomials_and_fractions(f3):
    two = f3.element(2)
    T = APoly.T(f3)
    assert two * T == T.scale(two)
    assert T * two == two * T
    assert two * KFrac(APoly.one(f3), T) == KFrac(parse_apoly("2", f3), T)
    assert ResidueField(validate_prime(T + 1)).mul(two, T) == 1


# --- randomized identities ----------------------------------------------------------


@pytest.mark.parametrize("which", ["f3", "f5", "f9"])
def test_field_axioms(request, which):
    ctx = request.getfixturevalue(which)
    rng = random.Random(11)
    for _ in range(60):
        a, b, c = (ctx.random_element(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a - a == ctx.zero
        if not a.is_zero():
            assert a * a.inverse() == ctx.one
            assert (b / a) * a == b


@pytest.mark.parametrize("which", ["f3", "f5", "f9"])
def test_division_identities(request, which):
    ctx = request.getfixturevalue(which)
    A = PolynomialRing(ctx)
    rng = random.Random(12)
    for _ in range(40):
        a = A.random_element(rng, 7)
        b = A.random_element(rng, 4)
        if b.is_zero():
            continue
        quot, rem = a.divrem(b)
        assert quot * b + rem == a
        assert rem.is_zero() or rem.degree < b.degree
        g = a.gcd(b)
        assert g.is_monic()
        assert (a % g).is_zero() and (b % g).is_zero()
        g2, s, t = a.gcdext(b)
        assert g2 == g
        assert s * a + t * b == g
        assert A.exact_div(a * b, b) == a


@pytest.mark.parametrize("which", ["prime_t1", "prime_t2_1", "prime_f5"])
def test_valuation_is_multiplicative_and_ultrametric(request, which):
    prime = request.getfixturevalue(which)
    A, K = PolynomialRing(prime.ctx), FractionField(prime.ctx)
    rng = random.Random(13)
    for _ in range(40):
        a = A.random_element(rng, 4) * prime.pi ** rng.randrange(3)
        b = A.random_element(rng, 4) * prime.pi ** rng.randrange(3)
        assert vp(a * b, prime) == vp(a, prime) + vp(b, prime)
        assert vp(a + b, prime) >= min(vp(a, prime), vp(b, prime))
        if vp(a, prime) != vp(b, prime):
            assert vp(a + b, prime) == min(vp(a, prime), vp(b, prime))
        x, y = K.random_element(rng, 3), K.random_element(rng, 3)
        assert vp(x * y, prime) == vp(x, prime) + vp(y, prime)
        assert vp(x + y, prime) >= min(vp(x, prime), vp(y, prime))


@pytest.mark.parametrize("which", ["prime_t1", "prime_t2_1", "prime_f5"])
def test_residue_map_is_a_ring_morphism(request, which):
    prime = request.getfixturevalue(which)
    A, K, F = PolynomialRing(prime.ctx), FractionField(prime.ctx), ResidueField(prime)
    rng = random.Random(14)
    integral = []
    while len(integral) < 40:
        x = K.random_element(rng, 3) if len(integral) % 2 else A.random_element(rng, 5)
        if vp(x, prime) >= 0:
            integral.append(x)
    for x, y in zip(integral, integral[1:]):
        assert residue_map(x * y, prime) == F.mul(residue_map(x, prime), residue_map(y, prime))
        assert residue_map(x + y, prime) == F.add(residue_map(x, prime), residue_map(y, prime))
    assert residue_map(A.one, prime) == F.one
    for _ in range(10):
        a = F.random_element(rng, 0)
        assert residue_map(a, prime) == a
        assert a.degree < prime.d
