# tests/test_verify_runner.py
"""Tests for services/verify_runner.py: selection, skipping, error capture."""
from dataclasses import fields

import pytest

from algebra.errors import ConstructionError
from algebra.fields import FieldSpec
from cli.checks import CHECKS
from services.report_messages import CheckStatus
from services.verify_runner import Check, CheckOutcome, VerifyRunner


def _ok(ctx):
    return CheckOutcome.equal(ctx.seed, ctx.seed)


def _fails(ctx):
    return CheckOutcome.equal(1, 2)


def _raises(ctx):
    raise ConstructionError("no such scheme")


SAMPLE = [
    Check("beta", _fails),
    Check("alpha", _ok),
    Check("gamma", _raises),
    Check("delta", _ok, needs_i=True),
]


class TestSelect:
    def test_glob(self):
        assert [c.name for c in VerifyRunner.select(CHECKS.values(), "tangent-g*")][:3] == [
            "tangent-g5",
            "tangent-g6",
            "tangent-g7",
        ]

    def test_exact_and_none(self):
        assert [c.name for c in VerifyRunner.select(SAMPLE, "beta")] == ["beta"]
        assert [c.name for c in VerifyRunner.select(SAMPLE, None)] == ["alpha", "beta", "delta", "gamma"]

    def test_concurrency_bound(self):
        with pytest.raises(ValueError):
            VerifyRunner(FieldSpec.prime(), max_concurrent=0)


class TestRun:
    async def test_statuses(self):
        verdicts = await VerifyRunner(FieldSpec.prime(), max_concurrent=2, seed=7).run(SAMPLE)
        statuses = {v.name: v.status for v in verdicts}
        assert [v.name for v in verdicts] == ["alpha", "beta", "delta", "gamma"]
        assert statuses == {
            "alpha": CheckStatus.passed,
            "beta": CheckStatus.failed,
            "delta": CheckStatus.passed,
            "gamma": CheckStatus.error,
        }
        assert verdicts[0].observed == "7"
        assert "ConstructionError" in verdicts[3].detail

    async def test_skips_without_i(self):
        # 65539 = 3 mod 4: -1 is not a square
        verdicts = await VerifyRunner(FieldSpec.prime(65539)).run(SAMPLE, "delta")
        assert verdicts[0].status is CheckStatus.skipped

    async def test_registered_check(self):
        verdicts = await VerifyRunner(FieldSpec.prime()).run(CHECKS.values(), "tangent-g5")
        assert verdicts[0].status is CheckStatus.passed
        assert verdicts[0].observed == "15"


class TestCheckRecord:
    def test_fields(self):
        assert [f.name for f in fields(Check)] == ["name", "func", "description", "needs_i"]
