# services/verify_runner.py
"""
Concurrent runner for named verification checks.

Each check is a pure function of (field, seed); checks run in worker threads
under a semaphore and verdicts come back ordered by check name.
"""
import asyncio
import fnmatch
import time
from collections.abc import Callable, Iterable
from dataclasses import dataclass

from loguru import logger

from algebra.errors import AlgebraError
from algebra.fields import FieldSpec
from services.report_messages import CheckStatus, CheckVerdict


@dataclass(frozen=True)
class CheckContext:
    field_spec: FieldSpec
    seed: int = 0


@dataclass(frozen=True)
class CheckOutcome:
    ok: bool
    observed: object = None
    expected: object = None

    @classmethod
    def equal(cls, observed, expected) -> "CheckOutcome":
        return cls(observed == expected, observed, expected)


@dataclass(frozen=True)
class Check:
    """A named check; needs_i marks checks that only make sense when -1 is a square."""

    name: str
    func: Callable[[CheckContext], CheckOutcome]
    description: str = ""
    needs_i: bool = False


class VerifyRunner:
    """
    Runs checks concurrently and collects verdicts.

    Usage:
        runner = VerifyRunner(FieldSpec.prime(), max_concurrent=4)
        verdicts = await runner.run(CHECKS.values(), pattern="tangent-*")
    """

    def __init__(self, field_spec: FieldSpec, max_concurrent: int = 4, seed: int = 0):
        if max_concurrent < 1:
            raise ValueError("max_concurrent must be at least 1")
        self._field = field_spec
        self._seed = seed
        self._semaphore = asyncio.Semaphore(max_concurrent)
        self._log = logger.bind(verify=True)

    @staticmethod
    def select(checks: Iterable[Check], pattern: str | None) -> list[Check]:
        """Checks whose name equals the pattern or matches it as a glob."""
        chosen = [c for c in checks if pattern is None or c.name == pattern or fnmatch.fnmatch(c.name, pattern)]
        return sorted(chosen, key=lambda c: c.name)

    async def run(self, checks: Iterable[Check], pattern: str | None = None) -> list[CheckVerdict]:
        selected = self.select(checks, pattern)
        self._log.info(f"verify: running {len(selected)} checks over {self._field}")
        verdicts = await asyncio.gather(*(self._run_one(c) for c in selected))
        return sorted(verdicts, key=lambda v: v.name)

    async def _run_one(self, check: Check) -> CheckVerdict:
        if check.needs_i and self._field.sqrt_minus_one() is None:
            verdict = CheckVerdict(name=check.name, status=CheckStatus.skipped, detail=f"needs i, absent in {self._field}")
            self._log.info(verdict.as_text())
            return verdict
        async with self._semaphore:
            start = time.perf_counter()
            context = CheckContext(self._field, self._seed)
            try:
                outcome = await asyncio.to_thread(check.func, context)
            except AlgebraError as e:
                verdict = CheckVerdict(
                    name=check.name,
                    status=CheckStatus.error,
                    detail=f"{type(e).__name__}: {e}",
                    seconds=time.perf_counter() - start,
                )
                self._log.error(verdict.as_text())
                return verdict
        verdict = CheckVerdict(
            name=check.name,
            status=CheckStatus.passed if outcome.ok else CheckStatus.failed,
            observed=str(outcome.observed),
            expected=str(outcome.expected),
            seconds=round(time.perf_counter() - start, 3),
        )
        log = self._log.info if outcome.ok else self._log.warning
        log(f"{verdict.as_text()} [{verdict.seconds:.2f}s]")
        return verdict
