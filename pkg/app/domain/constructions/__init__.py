"""Explicit local antimagic labelings as deterministic generators."""

from ._augment import (
    augment_and_label,
    augmented_color,
    magnitude_threshold,
    minimal_admissible_s,
    new_pendant_label,
    wheel_family_profile,
)
from ._spider import label_spider_2n
from ._star import augment_star_leaf, label_star
from .construction_models import AugmentSpec, Construction, parity_failure

__all__ = [
    "AugmentSpec",
    "Construction",
    "augment_and_label",
    "augment_star_leaf",
    "augmented_color",
    "label_spider_2n",
    "label_star",
    "magnitude_threshold",
    "minimal_admissible_s",
    "new_pendant_label",
    "parity_failure",
    "wheel_family_profile",
]
