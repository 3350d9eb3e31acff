"""The two-leg-length spider labeling f(u v_i) = i, f(v_i w_i) = 2n + 1 - i."""

from loguru import logger

from app.domain.graph import build_spider
from app.domain.labeling import color_count, is_local_antimagic
from app.schemas import EdgeLabeling
from app.utils.app_errors import AppError, AppErrorCode

from .construction_models import Construction


def label_spider_2n(n: int) -> Construction:
    """Label Sp(2^[n]) with core colour n(n+1)/2, middles 2n+1 and pendants 2n+1-i.

    The colour count is n + 2 for n >= 4. At n = 3 the core colour 6 equals the colour
    of w_1, which is not adjacent to the core, so the labeling is still valid and uses
    only 4 colours.
    """
    if n < 3:
        raise AppError(
            errcode=AppErrorCode.E_DEGENERATE_FAMILY,
            errmesg=f"Sp(2^[n]) needs n >= 3, got {n}",
        )

    g = build_spider([(2, n)])
    labels = [0] * g.edge_count
    for i in range(1, n + 1):
        labels[2 * (i - 1)] = i
        labels[2 * (i - 1) + 1] = 2 * n + 1 - i
    f = EdgeLabeling(labels=tuple(labels))

    valid = is_local_antimagic(g, f)
    count = color_count(g, f)
    note = None
    if n == 3:
        note = "n=3: core color coincides with a pendant color; n+2 does not apply"
    logger.debug("Sp(2^[{}]) labeling: valid={} colors={}", n, valid, count)

    return Construction(graph=g, labeling=f, valid=valid, color_count=count, note=note)
