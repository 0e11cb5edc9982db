"""Verification suites: every identity and theorem as an executable check."""

from .checks import SUITES, identity_checks, modp_checks, run_suite, structure_checks
from .report import Check, CheckResult, Report, run_checks

__all__ = [
    "SUITES",
    "Check",
    "CheckResult",
    "Report",
    "identity_checks",
    "modp_checks",
    "run_checks",
    "run_suite",
    "structure_checks",
]
