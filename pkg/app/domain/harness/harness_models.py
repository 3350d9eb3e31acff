"""Harness domain models."""

from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, model_validator

from app.utils.app_errors import AppError, AppErrorCode


class FamilyCheck(BaseModel):
    """Membership of a certified instance in the family k >= chi(G) - 1 >= 1, chi_la = k + 1."""

    model_config = ConfigDict(frozen=True)

    pendant_count: int
    chromatic_number: int
    certified_chi_la: int | None = None
    member: bool
    reasons: list[str] = []


class BatchRow(BaseModel):
    """One experiment: a (graph file, labeling file) pair or an inline synthetic profile."""

    model_config = ConfigDict(frozen=True)

    graph: Path | None = None
    labeling: Path | None = None
    profile: dict[str, Any] | None = None
    i: int
    s: int
    label: str | None = None

    @model_validator(mode="after")
    def check_source(self) -> "BatchRow":
        has_files = self.graph is not None and self.labeling is not None
        if has_files == (self.profile is not None):
            raise AppError(
                errcode=AppErrorCode.E_INVALID_INPUT,
                errmesg="A batch row needs either graph+labeling files or a profile, not both",
            )
        return self
