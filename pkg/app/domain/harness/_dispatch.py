from loguru import logger

from app.schemas import ColorProfile, PredictedBounds

from ._predict_minimal import predict_minimal_base
from ._predict_nonpendant import predict_nonpendant_class
from ._predict_pendant import predict_pendant_class
from ._preconditions import require_class


def predict(profile: ColorProfile, i: int, s: int, base_is_star: bool | None = None) -> PredictedBounds:
    """Route to the minimal-base rule when t = k + 1, else by the class index."""
    require_class(profile, i, 1, profile.t, "Augmented")
    if profile.t == profile.pendant_count + 1:
        predicted = predict_minimal_base(profile, i, s, base_is_star)
    elif i <= profile.r:
        predicted = predict_nonpendant_class(profile, i, s)
    else:
        predicted = predict_pendant_class(profile, i, s, base_is_star)
    logger.debug("Prediction for class {} with s={}: {}", i, s, predicted)
    return predicted
