"""Induced vertex colours and the local antimagic predicate."""

import numpy as np

from app.schemas import EdgeLabeling, Graph, InducedColoring
from app.utils.app_errors import AppError, AppErrorCode


def _check_fit(g: Graph, f: EdgeLabeling) -> None:
    if f.q != g.edge_count:
        raise AppError(
            errcode=AppErrorCode.E_LABELING_MISMATCH,
            errmesg=f"Labeling has {f.q} labels but the graph has {g.edge_count} edges",
        )


def induced_colors(g: Graph, f: EdgeLabeling) -> InducedColoring:
    """f+(v) for every vertex, summed in 64-bit integers."""
    _check_fit(g, f)
    edges = np.asarray(g.edges, dtype=np.int64).reshape(-1, 2)
    labels = np.asarray(f.labels, dtype=np.int64)
    colors = np.zeros(g.vertex_count, dtype=np.int64)
    np.add.at(colors, edges[:, 0], labels)
    np.add.at(colors, edges[:, 1], labels)
    return InducedColoring(colors=tuple(int(c) for c in colors))


def is_local_antimagic(g: Graph, f: EdgeLabeling) -> bool:
    """True iff every edge joins two differently coloured vertices."""
    g.require_labelable()
    colors = induced_colors(g, f).colors
    return all(colors[u] != colors[v] for u, v in g.edges)


def color_count(g: Graph, f: EdgeLabeling) -> int:
    """c(f): the number of distinct induced colours."""
    _check_fit(g, f)
    return induced_colors(g, f).count


def require_local_antimagic(g: Graph, f: EdgeLabeling, what: str = "labeling") -> InducedColoring:
    if not is_local_antimagic(g, f):
        raise AppError(
            errcode=AppErrorCode.E_NOT_LOCAL_ANTIMAGIC,
            errmesg=f"The {what} gives two adjacent vertices the same color",
        )
    return induced_colors(g, f)


def check_pendant_lemma(g: Graph, f: EdgeLabeling) -> bool:
    """A maximum label on a non-pendant edge forces at least k + 2 colours.

    Returns whether the implication holds for this labeling; it is vacuously true
    when the edge labelled q is a pendant edge.
    """
    coloring = require_local_antimagic(g, f)
    degrees = g.degrees()
    u, v = g.edges[f.edge_with_label(f.q)]
    if degrees[u] == 1 or degrees[v] == 1:
        return True
    k = sum(1 for d in degrees if d == 1)
    return coloring.count >= k + 2
