"""Graph construction from edge lists and the standard families."""

from collections.abc import Iterable

from app.schemas import Edge, Graph, GraphMetadata
from app.utils.app_errors import AppError, AppErrorCode


def from_edge_list(pairs: Iterable[Edge], metadata: GraphMetadata | None = None) -> Graph:
    """Build a graph whose vertex count is 1 + the largest index used.

    Loops and repeated edges are rejected, never silently fixed. Disconnected input is
    representable; labeling operations refuse it later.
    """
    edges = [tuple(pair) for pair in pairs]
    if not edges:
        raise AppError(
            errcode=AppErrorCode.E_INVALID_INPUT,
            errmesg="Edge list is empty",
        )
    if any(len(pair) != 2 for pair in edges):
        raise AppError(
            errcode=AppErrorCode.E_INVALID_INPUT,
            errmesg="Every edge must be a pair of vertex indices",
        )
    vertex_count = 1 + max(max(pair) for pair in edges)
    return Graph(
        vertex_count=vertex_count,
        edges=edges,
        metadata=metadata or GraphMetadata(),
    )


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise AppError(errcode=AppErrorCode.E_DEGENERATE_FAMILY, errmesg=message)


def build_path(n: int) -> Graph:
    """P_n on vertices 0..n-1; edge i joins i and i+1."""
    _require(n >= 3, f"P_n needs n >= 3, got {n}")
    return Graph(
        vertex_count=n,
        edges=[(i, i + 1) for i in range(n - 1)],
        metadata=GraphMetadata(family="path", params={"n": n}, numbering="vertex i is the i-th on the path"),
    )


def build_cycle(n: int) -> Graph:
    """C_n on vertices 0..n-1; edge i joins i and i+1 (mod n)."""
    _require(n >= 3, f"C_n needs n >= 3, got {n}")
    return Graph(
        vertex_count=n,
        edges=[(i, (i + 1) % n) for i in range(n)],
        metadata=GraphMetadata(family="cycle", params={"n": n}, numbering="vertex i is the i-th on the cycle"),
    )


def build_star(k: int) -> Graph:
    """K_{1,k}: centre 0, leaves 1..k, edge i-1 joins 0 and i."""
    _require(k >= 2, f"K_1,k needs k >= 2, got {k}")
    return Graph(
        vertex_count=k + 1,
        edges=[(0, i) for i in range(1, k + 1)],
        metadata=GraphMetadata(family="star", params={"k": k}, numbering="centre 0, leaves 1..k"),
    )


def build_wheel(n: int) -> Graph:
    """W_n: hub 0, rim 1..n.

    Edges 0..n-1 are the spokes (0, i); edges n..2n-1 are the rim (i, i+1), closing
    with (1, n).
    """
    _require(n >= 3, f"W_n needs n >= 3, got {n}")
    spokes = [(0, i) for i in range(1, n + 1)]
    rim = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph(
        vertex_count=n + 1,
        edges=spokes + rim,
        metadata=GraphMetadata(
            family="wheel",
            params={"n": n},
            numbering="hub 0, rim 1..n; spokes first, then rim",
        ),
    )


def build_spider(legs: list[tuple[int, int]]) -> Graph:
    """Spider with n_i legs of length a_i for each (a_i, n_i), core = vertex 0.

    Legs are laid out in the given order; each leg's vertices are numbered
    consecutively outward from the core and its edges likewise, so a leg of length a
    occupies a consecutive block of a vertices and a edges.
    """
    _require(bool(legs), "A spider needs at least one leg group")
    for length, multiplicity in legs:
        _require(length >= 1 and multiplicity >= 1, f"Invalid leg group ({length}, {multiplicity})")
    _require(sum(m for _, m in legs) >= 3, "A spider needs at least 3 legs")

    edges: list[Edge] = []
    next_vertex = 1
    for length, multiplicity in legs:
        for _ in range(multiplicity):
            previous = 0
            for _ in range(length):
                edges.append((previous, next_vertex))
                previous = next_vertex
                next_vertex += 1

    return Graph(
        vertex_count=next_vertex,
        edges=edges,
        metadata=GraphMetadata(
            family="spider",
            params={"legs": [[a, m] for a, m in legs]},
            numbering="core 0; legs consecutive, vertices outward from the core",
        ),
    )
