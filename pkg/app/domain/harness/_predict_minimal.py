"""Exact values when the base already attains the pendant bound (t = k + 1)."""

from app.schemas import ColorProfile, PredictedBounds, PredictionCase

from ._preconditions import is_star_profile, magnitude_check, require_class


def predict_minimal_base(profile: ColorProfile, i: int, s: int, base_is_star: bool | None = None) -> PredictedBounds:
    """s*n_r + k + 1 for the top class, s*n_i + k for every other class.

    With r = 1 the base must be K_{1,k}; only leaf classes are covered and the
    value is s + k once k + s reaches the centre colour.
    """
    require_class(profile, i, 1, profile.t, "Augmented")
    k = profile.pendant_count
    if profile.t != k + 1:
        return PredictedBounds.not_applicable([f"base uses t={profile.t} colours, not k+1={k + 1}"])

    failures, boundary = magnitude_check(profile, i, s)

    if profile.r == 1:
        if base_is_star is None:
            base_is_star = is_star_profile(profile)
        if not base_is_star:
            failures.append("r = 1 needs the base to be a star")
        if i == 1:
            failures.append("augmenting the centre of a star gives another star")
        if failures:
            return PredictedBounds.not_applicable(failures, case=PredictionCase.MINIMAL_STAR_LEAF)
        return PredictedBounds.between(s + k, s + k, PredictionCase.MINIMAL_STAR_LEAF, boundary=boundary)

    if failures:
        return PredictedBounds.not_applicable(failures)

    value = s * profile.class_size(i) + k
    if i == profile.r:
        return PredictedBounds.between(value + 1, value + 1, PredictionCase.MINIMAL_TOP_CLASS, boundary=boundary)
    return PredictedBounds.between(value, value, PredictionCase.MINIMAL_OTHER_CLASS, boundary=boundary)
