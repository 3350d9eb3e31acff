"""Bounds for augmenting a pendant singleton class (r < i <= t)."""

from app.schemas import ColorProfile, PredictedBounds, PredictionCase

from ._predict_nonpendant import _bounded
from ._preconditions import is_star_profile, require_class


def predict_pendant_class(profile: ColorProfile, i: int, s: int, base_is_star: bool | None = None) -> PredictedBounds:
    require_class(profile, i, profile.r + 1, profile.t, "Pendant")
    if base_is_star is None:
        base_is_star = is_star_profile(profile)

    failures: list[str] = []
    if base_is_star:
        failures.append(f"base graph is the star K_1,{profile.e}")
    if s < 1:
        failures.append(f"s must be at least 1, got {s}")
    threshold = profile.class_color(profile.r)
    if profile.e + s < threshold:
        failures.append(f"e + s = {profile.e + s} is below c_r={threshold}")
    j = profile.gap_index()
    if j is None:
        failures.append(f"e={profile.e} is not below c_r={threshold}")
    if failures:
        return PredictedBounds.not_applicable(failures)

    boundary = profile.e + s == threshold
    base = s + profile.t - profile.r
    if j == 1:
        return PredictedBounds.between(base, base, PredictionCase.PENDANT_BELOW_FIRST, boundary=boundary)

    upper = base + j - 1
    if profile.b == j - 1:
        return _bounded(upper, upper, PredictionCase.PENDANT_GAP_TIGHT, boundary, f"b = {j - 1}")
    return _bounded(base + profile.b, upper, PredictionCase.PENDANT_GAP, boundary, None)
