"""Pendant vertices and the pendant augmentation G(V_i, s)."""

from collections.abc import Iterable

from loguru import logger

from app.schemas import Edge, Graph, GraphMetadata, VertexSet
from app.utils.app_errors import AppError, AppErrorCode


def pendant_vertices(g: Graph) -> VertexSet:
    """Exactly the degree-1 vertices."""
    return frozenset(v for v, degree in enumerate(g.degrees()) if degree == 1)


def add_pendant_edges(g: Graph, targets: Iterable[int], s: int) -> Graph:
    """Attach s new pendant edges to every target vertex.

    Original edges keep their indices. New vertices and edges are appended
    vertex-major: for targets in ascending order, k = 1..s, the new edge
    (v, w_{v,k}) gets index |E| + position * s + (k - 1).
    """
    members = sorted(set(targets))
    if not members:
        raise AppError(
            errcode=AppErrorCode.E_EMPTY_TARGET_SET,
            errmesg="Pendant augmentation needs a non-empty target set",
        )
    if any(v < 0 or v >= g.vertex_count for v in members):
        raise AppError(
            errcode=AppErrorCode.E_INVALID_INPUT,
            errmesg=f"Targets {members} are not all vertices of a graph with {g.vertex_count} vertices",
        )
    if s < 1:
        raise AppError(
            errcode=AppErrorCode.E_INVALID_INPUT,
            errmesg=f"s must be at least 1, got {s}",
        )

    edges: list[Edge] = list(g.edges)
    next_vertex = g.vertex_count
    for v in members:
        for _ in range(s):
            edges.append((v, next_vertex))
            next_vertex += 1

    logger.debug("Augmented {} with {} pendants on {}", g.describe(), s, members)

    return Graph(
        vertex_count=next_vertex,
        edges=edges,
        metadata=GraphMetadata(
            family="augmented",
            params={"base": g.metadata.family, "base_params": g.metadata.params, "targets": members, "s": s},
            numbering="base graph first; new pendants vertex-major in ascending target order",
        ),
    )


def new_edge_index(g: Graph, position: int, k: int, s: int) -> int:
    """Index of the k-th (1-based) pendant edge added to the target at `position`."""
    return g.edge_count + position * s + (k - 1)
