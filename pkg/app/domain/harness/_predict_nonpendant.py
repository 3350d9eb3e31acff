"""Bounds for augmenting a colour class that holds a non-pendant vertex (1 <= i <= r)."""

from app.schemas import ColorProfile, PredictedBounds, PredictionCase

from ._preconditions import magnitude_check, require_class


def predict_nonpendant_class(profile: ColorProfile, i: int, s: int) -> PredictedBounds:
    """chi_la(G(V_i, s)) from the position of e among c_1 < ... < c_r.

    With j the first class whose colour exceeds e:
      j = 1:  exact s*n_i + t - r + 1
      j = 2:  i = 1 exact s*n_1 + t - r + 1; otherwise [.. + b + 1, .. + 2]
      j >= 3: i < j with a pendant in V_i  [.. + b, .. + j - 1]
              i < j without                [.. + b + 1, .. + j - 1]
              i >= j                       [.. + b + 1, .. + j]
    b and j are always read off the profile.
    """
    require_class(profile, i, 1, profile.r, "Non-pendant")
    if profile.r < 2:
        return PredictedBounds.not_applicable([f"needs r >= 2, profile has r={profile.r}"])

    failures, boundary = magnitude_check(profile, i, s)
    j = profile.gap_index()
    if j is None:
        failures.append(f"e={profile.e} is not below c_r={profile.class_color(profile.r)}")
    if failures:
        return PredictedBounds.not_applicable(failures)

    e, t, r, b = profile.e, profile.t, profile.r, profile.b
    base = s * profile.class_size(i) + t - r

    if j == 1:
        return PredictedBounds.between(base + 1, base + 1, PredictionCase.NONPENDANT_BELOW_FIRST, boundary=boundary)

    if j == 2:
        if i == 1:
            return PredictedBounds.between(
                base + 1, base + 1, PredictionCase.NONPENDANT_FIRST_GAP_LOWEST, boundary=boundary
            )
        lower, upper = base + b + 1, base + 2
        clause = None
        if profile.class_color(1) == e and b == 1:
            lower, clause = upper, "c_1 = e and b = 1"
        return _bounded(lower, upper, PredictionCase.NONPENDANT_FIRST_GAP, boundary, clause)

    tight = profile.class_color(j - 1) == e and b == j - 1
    if i <= j - 1:
        upper = base + j - 1
        if profile.class_has_pendant(i):
            case, lower = PredictionCase.NONPENDANT_GAP_PENDANT_CLASS, base + b
        else:
            case, lower = PredictionCase.NONPENDANT_GAP_PLAIN_CLASS, base + b + 1
    else:
        case, lower, upper = PredictionCase.NONPENDANT_GAP_UPPER_CLASS, base + b + 1, base + j

    if tight:
        return _bounded(upper, upper, PredictionCase.NONPENDANT_GAP_TIGHT, boundary, f"c_{j - 1} = e and b = {j - 1}")
    return _bounded(lower, upper, case, boundary, None)


def _bounded(
    lower: int, upper: int, case: PredictionCase, boundary: bool, clause: str | None
) -> PredictedBounds:
    if lower > upper:
        return PredictedBounds.not_applicable(
            [f"b is too large for this case: lower {lower} exceeds upper {upper}"], case=case
        )
    return PredictedBounds.between(lower, upper, case, boundary=boundary, clause=clause)
