"""Augmentation bound predictions and their cross-check against constructions and the solver."""

from ._batch import load_batch, run_batch
from ._dispatch import predict
from ._experiment import check_family_member, run_experiment, run_profile_experiment
from ._predict_minimal import predict_minimal_base
from ._predict_nonpendant import predict_nonpendant_class
from ._predict_pendant import predict_pendant_class
from ._preconditions import is_star_profile
from .harness_models import BatchRow, FamilyCheck

__all__ = [
    "BatchRow",
    "FamilyCheck",
    "check_family_member",
    "is_star_profile",
    "load_batch",
    "predict",
    "predict_minimal_base",
    "predict_nonpendant_class",
    "predict_pendant_class",
    "run_batch",
    "run_experiment",
    "run_profile_experiment",
]
