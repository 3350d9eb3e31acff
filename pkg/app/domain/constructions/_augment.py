"""Pendant augmentation G(V_i, s) with the alternating new-edge labeling."""

from loguru import logger

from app.domain.graph import add_pendant_edges, new_edge_index
from app.domain.labeling import extract_profile, induced_colors, is_local_antimagic
from app.schemas import ColorProfile, EdgeLabeling, Graph
from app.utils.app_errors import AppError, AppErrorCode, ExitCode

from .construction_models import AugmentSpec, Construction


def new_pendant_label(e: int, n_i: int, a: int, k: int) -> int:
    """Label of the k-th new pendant edge at the a-th class member (both 1-based).

    Odd rounds run upward e+(k-1)n_i+a, even rounds downward e+k*n_i+1-a, so every
    two consecutive rounds give each member the same sum.
    """
    if k % 2:
        return e + (k - 1) * n_i + a
    return e + k * n_i + 1 - a


def augmented_color(c_i: int, e: int, n_i: int, s: int, a: int) -> int:
    """Colour of the a-th class member after augmentation."""
    if s % 2 == 0:
        return c_i + e * s + (s // 2) * (s * n_i + 1)
    # odd s is only admissible for singleton classes, where a = 1
    return c_i + e * s + s * (s + 1) // 2 + a - 1


def augment_and_label(g: Graph, f: EdgeLabeling, target_class: int, s: int) -> Construction:
    """Build G(V_i, s) and extend f to it; validity is verified, not assumed.

    The base labeling must be local antimagic and the parity rule must hold. Whether
    the result is local antimagic depends on the magnitude side conditions, which a
    caller may deliberately violate; the outcome is reported in `valid`.
    """
    profile = extract_profile(g, f)
    spec = AugmentSpec(base_profile=profile, target_class=target_class, s=s).validate_parity()

    e = g.edge_count
    n_i = spec.n_i
    c_i = profile.class_color(target_class)
    members = profile.class_members(target_class)

    augmented = add_pendant_edges(g, members, s)
    labels = list(f.labels) + [0] * (n_i * s)
    for position in range(n_i):
        for k in range(1, s + 1):
            labels[new_edge_index(g, position, k, s)] = new_pendant_label(e, n_i, position + 1, k)

    new_labels = sorted(labels[e:])
    if new_labels != list(range(e + 1, e + s * n_i + 1)):
        raise AppError(
            errcode=AppErrorCode.E_INTERNAL_ERROR,
            errmesg=f"New labels do not cover {e + 1}..{e + s * n_i}",
            exit_code=ExitCode.INTERNAL_ERROR,
        )

    g_labeling = EdgeLabeling(labels=tuple(labels))
    coloring = induced_colors(augmented, g_labeling)
    for a, v in enumerate(members, start=1):
        expected = augmented_color(c_i, e, n_i, s, a)
        if coloring.colors[v] != expected:
            raise AppError(
                errcode=AppErrorCode.E_INTERNAL_ERROR,
                errmesg=f"Vertex {v} has color {coloring.colors[v]}, expected {expected}",
                exit_code=ExitCode.INTERNAL_ERROR,
            )

    valid = is_local_antimagic(augmented, g_labeling)
    if not valid:
        logger.warning(
            "Augmenting class {} with s={} on {} is not local antimagic",
            target_class,
            s,
            g.describe(),
        )

    return Construction(
        graph=augmented,
        labeling=g_labeling,
        valid=valid,
        color_count=coloring.count,
        note=None if valid else "side conditions not met: adjacent vertices share a color",
    )


def magnitude_threshold(profile: ColorProfile, i: int) -> int | None:
    """Colour that e + s*n_i must reach: c_{r-1} for the top class, c_r otherwise.

    None when no condition applies (the top class of a profile with r = 1).
    """
    if i == profile.r:
        return profile.class_color(profile.r - 1) if profile.r >= 2 else None
    return profile.class_color(profile.r)


def minimal_admissible_s(profile: ColorProfile, i: int) -> int:
    """Smallest s meeting both the parity rule and the magnitude condition for class i."""
    if not 1 <= i <= profile.t:
        raise AppError(
            errcode=AppErrorCode.E_CLASS_OUT_OF_RANGE,
            errmesg=f"Class {i} outside 1..{profile.t}",
        )
    n_i = profile.class_size(i)
    s = 2 if n_i >= 2 else 1
    threshold = magnitude_threshold(profile, i)
    if threshold is not None and profile.e + s * n_i < threshold:
        s = -(-(threshold - profile.e) // n_i)
    if n_i >= 2 and s % 2:
        s += 1
    return s


def wheel_family_profile(k: int) -> ColorProfile:
    """Synthetic profile of the 3-colour labeling of W_{4k} (e = 8k, n = (2k, 2k, 1)).

    For k >= 2 the labeling itself is not reconstructed; only its colours are known.
    """
    if k < 1:
        raise AppError(
            errcode=AppErrorCode.E_DEGENERATE_FAMILY,
            errmesg=f"W_4k needs k >= 1, got {k}",
        )
    if k == 1:
        colors = [11, 15, 20]
    else:
        colors = [9 * k + 2, 11 * k + 1, 2 * k * (12 * k + 1)]
    return ColorProfile.from_synthetic(e=8 * k, colors=colors, sizes=[2 * k, 2 * k, 1], r=3)
