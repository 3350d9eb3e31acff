"""Shared gates for the augmentation predictors."""

from app.domain.constructions import magnitude_threshold, parity_failure
from app.schemas import ColorProfile
from app.utils.app_errors import AppError, AppErrorCode


def require_class(profile: ColorProfile, i: int, low: int, high: int, what: str) -> None:
    if not low <= i <= high:
        raise AppError(
            errcode=AppErrorCode.E_CLASS_OUT_OF_RANGE,
            errmesg=f"{what} class index {i} outside {low}..{high}",
        )


def is_star_profile(profile: ColorProfile) -> bool:
    """K_{1,e}: one non-pendant vertex and every other class a leaf singleton."""
    return profile.r == 1 and profile.b == 0 and profile.t == profile.e + 1 and profile.class_size(1) == 1


def magnitude_check(profile: ColorProfile, i: int, s: int) -> tuple[list[str], bool]:
    """(failures, boundary) for the parity rule and e + s*n_i >= threshold."""
    failures: list[str] = []
    n_i = profile.class_size(i)
    reason = parity_failure(n_i, s)
    if reason:
        failures.append(reason)

    boundary = False
    threshold = magnitude_threshold(profile, i)
    if threshold is not None:
        reach = profile.e + s * n_i
        if reach < threshold:
            failures.append(f"e + s*n_i = {reach} is below the required {threshold}")
        boundary = reach == threshold
    return failures, boundary
