"""Tests for the Carlitz module expansions and the named generators."""
import pytest

from src.arith.apoly import APoly
from src.errors import NotMonic, UsageError, ZeroMultiplier
from src.forms.carlitz import carlitz_poly, u_scaled, u_scaled_power
from src.forms.generators import GeneratorCache, false_eisenstein, gen_gd, gen_series
from src.series import series_compose, series_reduce
from src.utils.poly_parsing import parse_apoly


def leading(s, upto):
    return [(n, str(c)) for n, c in s.terms if n <= upto]


def test_carlitz_T(f3):
    T = APoly.T(f3)
    C = carlitz_poly(T)
    assert C.coeffs == (T, APoly.one(f3))


def test_carlitz_one_and_zero(f3):
    assert carlitz_poly(APoly.one(f3)).coeffs == (APoly.one(f3),)
    with pytest.raises(ZeroMultiplier):
        carlitz_poly(APoly.zero(f3))


def test_carlitz_T_squared(f3):
    T = APoly.T(f3)
    C = carlitz_poly(T * T)
    assert C.coeffs == (T * T, T + T**3, APoly.one(f3))


def test_carlitz_is_additive_in_a(f5):
    a = parse_apoly("T^2+3*T+1", f5)
    C = carlitz_poly(a)
    T = APoly.T(f5)
    assert C.degree == 2
    assert C.coeffs[0] == a
    assert C.coeffs[1] == T + T**5 + parse_apoly("3", f5)


def test_u_scaled(f3):
    assert leading(u_scaled(APoly.one(f3), 10), 9) == [(1, "1")]
    assert leading(u_scaled(APoly.T(f3), 10), 9) == [(3, "1"), (5, "2*T"), (7, "T^2"), (9, "2*T^3")]
    assert leading(u_scaled(parse_apoly("T+1", f3), 6), 5) == [(3, "1"), (5, "2*T+2")]


def test_u_scaled_power_matches_power(f3):
    a = parse_apoly("T^2+T+2", f3)
    assert u_scaled_power(a, 2, 40) == u_scaled(a, 40) ** 2


def test_u_scaled_needs_monic(f3):
    with pytest.raises(NotMonic):
        u_scaled(parse_apoly("2*T", f3), 10)


def test_u_scaled_beyond_precision(f3):
    assert u_scaled(parse_apoly("T^2", f3), 9).is_zero()


def test_false_eisenstein_leading_term(f3):
    E = false_eisenstein(APoly.one(f3), 20)
    assert leading(E, 2) == [(1, "1")]


def test_ET(f3):
    assert leading(gen_series(f3, "ET", 10, cache=GeneratorCache(f3)), 3) == [(1, "1"), (3, "2*T")]


def test_deltaT(f3, cache3):
    assert leading(cache3.series("deltaT", 20), 6) == [(2, "1"), (6, "2")]


def test_deltaW(f3, cache3):
    assert leading(cache3.series("deltaW", 20), 6) == [(0, "1"), (2, "T"), (6, "2*T^3")]


def test_g1(f3, cache3):
    tq_t = "2*T^3+T"
    assert leading(cache3.series("g1", 20), 14) == [(0, "1"), (2, tq_t), (14, tq_t)]


def test_h_and_delta(f3, cache3):
    assert leading(cache3.series("h", 20), 5) == [(1, "2"), (5, "2")]
    assert leading(cache3.series("delta", 20), 2) == [(2, "2")]


def test_deltaT_q5(f5, cache5):
    assert leading(cache5.series("deltaT", 21), 20) == [(4, "1"), (20, "4")]


@pytest.mark.slow
def test_deltaT_q9(f9):
    cache = GeneratorCache(f9)
    assert leading(cache.series("deltaT", 73), 72) == [(8, "1"), (72, "2")]


def test_g1T_is_g1_composed_with_uT(f3, cache3):
    g1 = cache3.series("g1", 40)
    assert series_compose(g1, u_scaled(APoly.T(f3), 40)) == cache3.series("g1T", 40)


def test_gd_constant_terms(f3, cache3):
    assert gen_gd(f3, 0, 5, cache3).terms == [(0, APoly.one(f3))]
    assert gen_gd(f3, 1, 10, cache3) == cache3.series("g1", 10)
    for d in (2, 3):
        assert gen_gd(f3, d, 5, cache3)[0] == 1


def test_Ep_reduces_to_E(f3, cache3, prime_t1):
    ep = cache3.series("Ep", 30, prime_t1)
    E = cache3.series("E", 30)
    assert ep != E
    assert series_reduce(ep, prime_t1) == series_reduce(E, prime_t1)


def test_cache_serves_lower_precision_by_truncation(f3):
    cache = GeneratorCache(f3)
    high = cache.series("deltaW", 30)
    size = len(cache)
    low = cache.series("deltaW", 10)
    assert low.prec == 10
    assert low == high
    assert len(cache) == size


def test_cache_rejects_bad_requests(f3, cache3):
    with pytest.raises(UsageError, match="unknown generator"):
        cache3.series("nope", 10)
    with pytest.raises(UsageError, match="precision"):
        cache3.series("g1", 0)
    with pytest.raises(UsageError, match="prime"):
        cache3.series("Ep", 10)
