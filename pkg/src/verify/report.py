from __future__ import annotations

import asyncio
import logging
import time
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

from pydantic import BaseModel, Field

from src.errors import DmodError

logger = logging.getLogger(__name__)

Outcome = Tuple[bool, str]


class CheckResult(BaseModel):
    id: str = Field(..., description="Stable identifier of the check.")
    anchor: str = Field(..., description="The statement the check certifies.")
    passed: bool
    details: str = ""


class Report(BaseModel):
    suite: str
    checks: List[CheckResult] = Field(default_factory=list)
    passed: bool = True

    @classmethod
    def from_checks(cls, suite: str, checks: Sequence[CheckResult]) -> "Report":
        return cls(suite=suite, checks=list(checks), passed=all(c.passed for c in checks))

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]


@dataclass(frozen=True)
class Check:
    id: str
    anchor: str
    run: Callable[[], Outcome]

    def execute(self) -> CheckResult:
        start = time.perf_counter()
        try:
            passed, details = self.run()
        except (DmodError, NotImplementedError) as e:
            passed, details = False, f"{type(e).__name__}: {e}"
        elapsed = time.perf_counter() - start
        if passed:
            logger.info("check %s passed in %.2fs", self.id, elapsed)
        else:
            logger.error("check %s failed after %.2fs: %s", self.id, elapsed, details)
        return CheckResult(id=self.id, anchor=self.anchor, passed=passed, details=details)


async def _run_concurrently(checks: Sequence[Check]) -> List[CheckResult]:
    return list(await asyncio.gather(*(asyncio.to_thread(c.execute) for c in checks)))


def run_checks(suite: str, checks: Sequence[Check], workers: int = 1) -> Report:
    """Run checks in declaration order; with workers > 1 they run in threads."""
    logger.info("suite %s: %d checks", suite, len(checks))
    if workers > 1 and len(checks) > 1:
        results: List[CheckResult] = []
        for i in range(0, len(checks), workers):
            results.extend(asyncio.run(_run_concurrently(checks[i : i + workers])))
    else:
        results = [c.execute() for c in checks]
    report = Report.from_checks(suite, results)
    logger.info("suite %s finished: %s", suite, "pass" if report.passed else "FAIL")
    return report
