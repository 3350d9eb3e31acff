"""Edge labelings, induced colours and colour profiles."""

from ._coloring import (
    check_pendant_lemma,
    color_count,
    induced_colors,
    is_local_antimagic,
    require_local_antimagic,
)
from ._io import format_labeling, parse_labeling, read_labeling, write_labeling
from ._profile import extract_profile

__all__ = [
    "check_pendant_lemma",
    "color_count",
    "extract_profile",
    "format_labeling",
    "induced_colors",
    "is_local_antimagic",
    "parse_labeling",
    "read_labeling",
    "require_local_antimagic",
    "write_labeling",
]
