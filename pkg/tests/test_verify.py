"""Tests for the verification suites and their report."""
import random

import pytest

from src.arith.finite_field import make_field_ctx
from src.arith.primes import validate_prime
from src.errors import TypeMismatch, UsageError
from src.forms.generators import GeneratorCache
from src.utils.poly_parsing import parse_apoly
from src.verify import Check, run_checks, run_suite
from src.verify import checks as suite_checks


def failed(report):
    return [(c.id, c.details) for c in report.failures()]


def test_identities(f3, cache3):
    report = run_suite("identities", f3, 30, cache=cache3)
    assert report.passed, failed(report)
    assert {"identity.ET_power", "identity.delta", "compose.g1T"} <= {c.id for c in report.checks}


def test_structure(f3, cache3):
    report = run_suite("structure", f3, 40, cache=cache3, samples=4)
    assert report.passed, failed(report)
    assert "phi.g2" in {c.id for c in report.checks}


def test_modp(f3, cache3, prime_t1):
    report = run_suite("modp", f3, 30, prime=prime_t1, cache=cache3, samples=10)
    assert report.passed, failed(report)
    assert "modp.phi_minus_one" in {c.id for c in report.checks}


def test_modp_degree_two(f3, cache3, prime_t2_1):
    report = run_suite("modp", f3, 30, prime=prime_t2_1, cache=cache3, samples=10)
    assert report.passed, failed(report)
    assert "modp.phi_minus_one" not in {c.id for c in report.checks}


def test_modp_needs_a_prime(f3):
    with pytest.raises(UsageError, match="--pi"):
        run_suite("modp", f3, 30)


def test_all_without_prime_skips_modp(f3, cache3):
    report = run_suite("all", f3, 20, cache=cache3, samples=2)
    assert not any(c.id.startswith("modp.") for c in report.checks)


def test_unknown_suite(f3):
    with pytest.raises(UsageError, match="unknown suite"):
        run_suite("everything", f3, 20)


def test_report_records_failures():
    def boom():
        raise TypeMismatch("weights differ")

    checks = [
        Check("ok", "always holds", lambda: (True, "fine")),
        Check("no", "never holds", lambda: (False, "nope")),
        Check("raises", "throws", boom),
    ]
    report = run_checks("demo", checks)
    assert not report.passed
    assert failed(report) == [("no", "nope"), ("raises", "TypeMismatch: weights differ")]


def test_workers_keep_declaration_order():
    checks = [Check(f"c{i}", "holds", lambda i=i: (True, str(i))) for i in range(7)]
    report = run_checks("demo", checks, workers=3)
    assert [c.id for c in report.checks] == [f"c{i}" for i in range(7)]
    assert report.passed


@pytest.mark.slow
def test_identities_at_full_precision(f3):
    report = run_suite("identities", f3, 200)
    assert report.passed, failed(report)


@pytest.mark.slow
@pytest.mark.parametrize(("q", "pi"), [(3, "T+1"), (3, "T+2"), (3, "T^2+1"), (5, "T+1"), (5, "T+2")])
def test_modp_at_full_precision(q, pi):
    ctx = make_field_ctx(q)
    prime = validate_prime(parse_apoly(pi, ctx))
    report = run_suite("modp", ctx, 200, prime=prime, cache=GeneratorCache(ctx))
    assert report.passed, failed(report)


@pytest.mark.slow
def test_all_over_F9(f9):
    prime = validate_prime(parse_apoly("T+x", f9))
    report = run_suite("all", f9, 100, prime=prime, workers=2, samples=5)
    assert report.passed, failed(report)


def test_congruent_pairs_are_compared_at_the_requested_precision(f3, cache3, prime_t1, monkeypatch):
    seen = []
    real = suite_checks.to_series

    def recording(f, prec, cache=None):
        seen.append(prec)
        return real(f, prec, cache)

    monkeypatch.setattr(suite_checks, "to_series", recording)
    passed, details = suite_checks._congruence_random(f3, prime_t1, random.Random(1), 4, 75, cache3)
    assert passed, details
    assert seen
    assert set(seen) == {75}


@pytest.mark.slow
def test_structure_at_full_size(f3):
    report = run_suite("structure", f3, 200, samples=200)
    assert report.passed, failed(report)


@pytest.mark.slow
def test_identities_over_F5_at_full_precision(f5):
    report = run_suite("identities", f5, 150)
    assert report.passed, failed(report)


@pytest.mark.slow
def test_printed_expansions_over_F5(f5):
    report = run_suite("identities", f5, 120)
    expansions = [c for c in report.checks if c.id.startswith("expansion.")]
    assert len(expansions) == 7
    assert all(c.passed for c in expansions), failed(report)
