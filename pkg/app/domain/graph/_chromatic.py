"""Exact chromatic number by DSATUR-style backtracking."""

from app.schemas import Graph
from app.utils.app_errors import AppError, AppErrorCode

DEFAULT_VERTEX_LIMIT = 16


def greedy_dsatur(g: Graph) -> tuple[list[int], int]:
    """Greedy DSATUR colouring; returns (colors, number of colors), an upper bound."""
    n = g.vertex_count
    colors = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    uncolored = set(range(n))

    while uncolored:
        # most saturated first, ties by degree
        u = max(uncolored, key=lambda v: (len(neighbor_colors[v]), g.degree(v), -v))
        used = neighbor_colors[u]
        c = 0
        while c in used:
            c += 1
        colors[u] = c
        uncolored.remove(u)
        for w in g.neighbors(u):
            if w in uncolored:
                neighbor_colors[w].add(c)

    return colors, (max(colors) + 1 if colors else 0)


def chromatic_number_exact(g: Graph, vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> int:
    """Exact chi(G) by backtracking, seeded with the greedy DSATUR upper bound."""
    n = g.vertex_count
    if n > vertex_limit:
        raise AppError(
            errcode=AppErrorCode.E_TOO_LARGE,
            errmesg=f"Exact chromatic number is capped at {vertex_limit} vertices, got {n}",
        )
    if g.edge_count == 0:
        return 1

    adjacency = [g.neighbors(v) for v in range(n)]
    _, best = greedy_dsatur(g)

    colors = [-1] * n
    neighbor_colors: list[dict[int, int]] = [{} for _ in range(n)]

    def choose_vertex() -> int | None:
        uncolored = [v for v in range(n) if colors[v] == -1]
        if not uncolored:
            return None
        return max(uncolored, key=lambda v: (len(neighbor_colors[v]), len(adjacency[v])))

    def backtrack(used_colors: int) -> None:
        nonlocal best
        v = choose_vertex()
        if v is None:
            best = min(best, used_colors)
            return

        for c in range(used_colors + 1):
            if c in neighbor_colors[v]:
                continue
            # a new colour (or any colour) must keep us strictly below the incumbent
            if max(used_colors, c + 1) >= best:
                continue
            colors[v] = c
            for w in adjacency[v]:
                neighbor_colors[w][c] = neighbor_colors[w].get(c, 0) + 1
            backtrack(max(used_colors, c + 1))
            colors[v] = -1
            for w in adjacency[v]:
                neighbor_colors[w][c] -= 1
                if not neighbor_colors[w][c]:
                    del neighbor_colors[w][c]

    backtrack(0)
    return best
