import pytest

from src.arith.apoly import APoly
from src.arith.finite_field import make_field_ctx
from src.arith.primes import validate_prime
from src.forms.generators import GeneratorCache
from src.utils.poly_parsing import parse_apoly


@pytest.fixture(scope="session")
def f3():
    return make_field_ctx(3)


@pytest.fixture(scope="session")
def f5():
    return make_field_ctx(5)


@pytest.fixture(scope="session")
def f9():
    """F_9 = F_3[x]/(x^2+1)."""
    return make_field_ctx(3, 2, [1, 0, 1])


@pytest.fixture(scope="session")
def T3(f3):
    return APoly.T(f3)


@pytest.fixture(scope="session")
def prime_t1(f3):
    return validate_prime(parse_apoly("T+1", f3))


@pytest.fixture(scope="session")
def prime_t2_1(f3):
    return validate_prime(parse_apoly("T^2+1", f3))


@pytest.fixture(scope="session")
def prime_f5(f5):
    return validate_prime(parse_apoly("T+2", f5))


@pytest.fixture(scope="session")
def cache3(f3):
    return GeneratorCache(f3)


@pytest.fixture(scope="session")
def cache5(f5):
    return GeneratorCache(f5)