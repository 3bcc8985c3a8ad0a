# services/report_messages.py
"""
Pydantic models for everything the CLI writes as JSON.

  command results: one value per subcommand (label, count, ideal, ...)
  reports:         SchemeReport / ArtinianReport payloads with provenance
  verify-paper:    one verdict per named check
"""
import hashlib
from datetime import datetime, timezone
from enum import Enum
from importlib.metadata import PackageNotFoundError, version
from typing import Any, Optional

from pydantic import BaseModel, Field, model_validator

from analysis.artinian import ArtinianReport
from analysis.geometry import SchemeReport

PACKAGE_NAME = "ag-points"


def _utc_now() -> datetime:
    return datetime.now(timezone.utc)


def tool_version() -> str:
    try:
        return version(PACKAGE_NAME)
    except PackageNotFoundError:
        return "0.0.0+local"


def input_digest(text: str) -> str:
    """sha256 of the raw input document."""
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


# ──────────────────────────────────────────────
# Single-command results
# ──────────────────────────────────────────────


class CommandResult(BaseModel):
    """Result of one subcommand, printed as text or JSON."""

    command: str = Field(..., description="Subcommand name (e.g., 'classify', 'tangent')")
    value: Any = Field(..., description="Result value: a number, a label, a list of generators, ...")
    ring: Optional[str] = Field(None, description="Ring the value lives in, when it is an ideal")

    def as_text(self) -> str:
        if isinstance(self.value, list):
            return "\n".join(str(v) for v in self.value)
        if isinstance(self.value, bool):
            return "true" if self.value else "false"
        return str(self.value)


# ──────────────────────────────────────────────
# verify-paper verdicts
# ──────────────────────────────────────────────


class CheckStatus(str, Enum):
    passed = "PASS"
    failed = "FAIL"
    skipped = "SKIP"
    error = "ERROR"


class CheckVerdict(BaseModel):
    """Outcome of one named check."""

    name: str = Field(..., description="Check name, e.g. 'tangent-g6'")
    status: CheckStatus
    expected: Optional[str] = Field(None, description="Expected value, rendered as text")
    observed: Optional[str] = Field(None, description="Observed value, rendered as text")
    detail: Optional[str] = Field(None, description="Skip reason or error message")
    seconds: float = Field(0.0, description="Wall time of the check")

    def as_text(self) -> str:
        line = f"{self.status.value:5} {self.name}"
        if self.expected is not None or self.observed is not None:
            line += f": observed {self.observed}, expected {self.expected}"
        if self.detail:
            line += f" ({self.detail})"
        return line


# ──────────────────────────────────────────────
# Report documents
# ──────────────────────────────────────────────


class ReportKind(str, Enum):
    scheme = "scheme"
    artinian = "artinian"
    verify = "verify"


class ReportDocument(BaseModel):
    """Top-level JSON document with provenance."""

    kind: ReportKind
    tool_version: str = Field(default_factory=tool_version)
    input_digest: Optional[str] = Field(None, description="sha256 of the input document")
    scheme: Optional[SchemeReport] = None
    artinian: Optional[ArtinianReport] = None
    verdicts: list[CheckVerdict] = Field(default_factory=list)
    created_at: datetime = Field(default_factory=_utc_now)

    @model_validator(mode="after")
    def check_payload(self):
        if self.kind is ReportKind.verify and not self.verdicts:
            raise ValueError("a verify report needs at least one verdict")
        if self.kind is ReportKind.scheme and self.scheme is None:
            raise ValueError("a scheme report needs a scheme payload")
        if self.kind is ReportKind.artinian and self.artinian is None:
            raise ValueError("an artinian report needs an artinian payload")
        return self

    @property
    def passed(self) -> bool:
        return all(v.status in (CheckStatus.passed, CheckStatus.skipped) for v in self.verdicts)
