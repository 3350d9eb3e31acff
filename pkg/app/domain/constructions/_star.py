"""Star labelings and pendant augmentation of a star leaf."""

from app.domain.graph import add_pendant_edges, build_star
from app.domain.labeling import color_count, is_local_antimagic
from app.schemas import EdgeLabeling
from app.utils.app_errors import AppError, AppErrorCode, ExitCode

from .construction_models import Construction


def label_star(k: int) -> Construction:
    """Identity labeling of K_{1,k}: leaf i gets label i, the centre k(k+1)/2."""
    g = build_star(k)
    f = EdgeLabeling(labels=tuple(range(1, k + 1)))
    return Construction(graph=g, labeling=f, valid=is_local_antimagic(g, f), color_count=color_count(g, f))


def augment_star_leaf(k: int, i: int, s: int) -> Construction:
    """Add s pendants to the leaf of colour i-1 and label them k+1..k+s in order.

    The leaf's colour becomes i-1 + ks + s(s+1)/2. That value always exceeds k+s, so the
    only possible clash is with the centre colour k(k+1)/2.
    """
    if not 2 <= i <= k + 1:
        raise AppError(
            errcode=AppErrorCode.E_CLASS_OUT_OF_RANGE,
            errmesg=f"Leaf class {i} outside 2..{k + 1}",
        )
    if s < 1:
        raise AppError(
            errcode=AppErrorCode.E_INVALID_INPUT,
            errmesg=f"s must be at least 1, got {s}",
        )

    base = label_star(k)
    leaf = i - 1
    center_color = k * (k + 1) // 2
    leaf_color = i - 1 + k * s + s * (s + 1) // 2
    if leaf_color == center_color:
        raise AppError(
            errcode=AppErrorCode.E_NOT_LOCAL_ANTIMAGIC,
            errmesg=f"Augmented leaf color {leaf_color} equals the centre color (k={k}, i={i}, s={s})",
        )

    g = add_pendant_edges(base.graph, [leaf], s)
    f = EdgeLabeling(labels=base.labeling.labels + tuple(range(k + 1, k + s + 1)))

    expected = (set(range(1, k + s + 1)) - {i - 1}) | {leaf_color, center_color}
    count = color_count(g, f)
    if count != len(expected) or not is_local_antimagic(g, f):
        raise AppError(
            errcode=AppErrorCode.E_INTERNAL_ERROR,
            errmesg=f"Star augmentation produced {count} colors, expected {len(expected)}",
            exit_code=ExitCode.INTERNAL_ERROR,
        )

    note = None
    if count != s + k:
        note = f"k+s={k + s} is below the centre color {center_color}; count is s+k+1"
    return Construction(graph=g, labeling=f, valid=True, color_count=count, note=note)
