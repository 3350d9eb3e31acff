"""Construction domain models."""

from pydantic import BaseModel, ConfigDict

from app.schemas import ColorProfile, EdgeLabeling, Graph
from app.utils.app_errors import AppError, AppErrorCode


class Construction(BaseModel):
    """A generated (graph, labeling) pair with its verified outcome."""

    model_config = ConfigDict(frozen=True)

    graph: Graph
    labeling: EdgeLabeling
    valid: bool
    color_count: int
    note: str | None = None

    @property
    def pair(self) -> tuple[Graph, EdgeLabeling]:
        return self.graph, self.labeling


class AugmentSpec(BaseModel):
    """Target class (1-based) and number of pendants per vertex for G(V_i, s)."""

    model_config = ConfigDict(frozen=True)

    base_profile: ColorProfile
    target_class: int
    s: int

    def validate_parity(self) -> "AugmentSpec":
        profile = self.base_profile
        if not 1 <= self.target_class <= profile.t:
            raise AppError(
                errcode=AppErrorCode.E_CLASS_OUT_OF_RANGE,
                errmesg=f"Class {self.target_class} outside 1..{profile.t}",
            )
        reason = parity_failure(profile.class_size(self.target_class), self.s)
        if reason:
            raise AppError(errcode=AppErrorCode.E_PARITY_VIOLATION, errmesg=reason)
        return self

    @property
    def n_i(self) -> int:
        return self.base_profile.class_size(self.target_class)


def parity_failure(n_i: int, s: int) -> str | None:
    """Reason the (n_i, s) pair breaks the parity rule, or None when it holds."""
    if n_i == 1 and s < 1:
        return f"s must be at least 1 for a singleton class, got {s}"
    if n_i >= 2 and (s < 2 or s % 2):
        return f"s must be even and at least 2 for a class of size {n_i}, got {s}"
    return None
