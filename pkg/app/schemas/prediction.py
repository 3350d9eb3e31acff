"""Bound predictions and experiment reports."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, model_validator

from app.utils.app_errors import AppError, AppErrorCode


class PredictionCase(str, Enum):
    """Which clause of the augmentation bounds produced a prediction.

    NONPENDANT_*: target class holds a non-pendant vertex (1 <= i <= r).
    PENDANT_*: target class is a pendant singleton (r < i <= t).
    MINIMAL_*: the base already meets the pendant bound (t = k + 1).
    """

    NONPENDANT_BELOW_FIRST = "nonpendant.below_first"
    NONPENDANT_FIRST_GAP_LOWEST = "nonpendant.first_gap.lowest_class"
    NONPENDANT_FIRST_GAP = "nonpendant.first_gap"
    NONPENDANT_GAP_PENDANT_CLASS = "nonpendant.gap.pendant_class"
    NONPENDANT_GAP_PLAIN_CLASS = "nonpendant.gap.plain_class"
    NONPENDANT_GAP_UPPER_CLASS = "nonpendant.gap.upper_class"
    NONPENDANT_GAP_TIGHT = "nonpendant.gap.tight"
    PENDANT_BELOW_FIRST = "pendant.below_first"
    PENDANT_GAP = "pendant.gap"
    PENDANT_GAP_TIGHT = "pendant.gap.tight"
    MINIMAL_TOP_CLASS = "minimal.top_class"
    MINIMAL_OTHER_CLASS = "minimal.other_class"
    MINIMAL_STAR_LEAF = "minimal.star_leaf"

    def __str__(self) -> str:
        return self.value


class PredictedBounds(BaseModel):
    model_config = ConfigDict(frozen=True)

    lower: int = 0
    upper: int = 0
    exact: int | None = None
    case: PredictionCase | None = None
    applicable: bool = True
    failed_preconditions: list[str] = []
    # e + s*n_i hits the magnitude threshold exactly
    boundary: bool = False
    clause: str | None = None

    @model_validator(mode="after")
    def check_bounds(self) -> "PredictedBounds":
        if not self.applicable:
            return self
        if self.lower > self.upper:
            raise AppError(
                errcode=AppErrorCode.E_INTERNAL_ERROR,
                errmesg=f"Prediction lower {self.lower} exceeds upper {self.upper}",
            )
        if self.exact is not None and not self.lower == self.upper == self.exact:
            raise AppError(
                errcode=AppErrorCode.E_INTERNAL_ERROR,
                errmesg=f"Exact {self.exact} disagrees with bounds [{self.lower}, {self.upper}]",
            )
        return self

    @classmethod
    def not_applicable(cls, reasons: list[str], case: PredictionCase | None = None) -> "PredictedBounds":
        return cls(applicable=False, failed_preconditions=reasons, case=case)

    @classmethod
    def between(
        cls, lower: int, upper: int, case: PredictionCase, *, boundary: bool = False, clause: str | None = None
    ) -> "PredictedBounds":
        exact = lower if lower == upper else None
        return cls(lower=lower, upper=upper, exact=exact, case=case, boundary=boundary, clause=clause)

    def contains(self, value: int) -> bool:
        return self.lower <= value <= self.upper

    def require_applicable(self) -> "PredictedBounds":
        if not self.applicable:
            raise AppError(
                errcode=AppErrorCode.E_NOT_APPLICABLE,
                errmesg="; ".join(self.failed_preconditions) or "prediction not applicable",
            )
        return self


class ExperimentReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    instance: str
    instance_hash: str | None = None
    target_class: int
    s: int
    predicted: PredictedBounds
    constructed_color_count: int | None = None
    constructed_valid: bool | None = None
    certified: bool = False
    solver_value: int | None = None
    consistent: bool

    @staticmethod
    def judge(
        predicted: PredictedBounds,
        constructed_color_count: int | None,
        solver_value: int | None,
        certified_value: int | None = None,
        constructed_valid: bool | None = None,
    ) -> bool:
        """Consistency verdict; inapplicable predictions are never inconsistent."""
        if not predicted.applicable:
            return True
        if constructed_valid is False:
            return False
        reference = solver_value if solver_value is not None else certified_value
        if reference is not None and not predicted.contains(reference):
            return False
        if constructed_color_count is not None:
            if constructed_color_count > predicted.upper:
                return False
            if reference is not None and constructed_color_count < reference:
                return False
        return True
