"""Static search plan: edge order and flat adjacency for the labeling search."""

from dataclasses import dataclass

import networkx as nx

from app.schemas import Graph


@dataclass(frozen=True)
class SearchPlan:
    """Plain-list view of a graph, picklable for worker processes."""

    vertex_count: int
    q: int
    # edge indices in assignment order
    order: tuple[int, ...]
    # endpoints of order[pos]
    endpoints: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...]
    neighbors: tuple[tuple[int, ...], ...]


def line_graph_order(g: Graph) -> list[int]:
    """Edge indices by BFS over the line graph, starting at edge 0.

    Adjacent edges are labelled close together so vertices close (all incident
    edges labelled) early and equal-colour conflicts prune sooner.
    """
    index_of = {pair: index for index, pair in enumerate(g.edges)}
    line = nx.line_graph(g.to_networkx())

    def key(edge: tuple[int, int]) -> int:
        u, v = edge
        return index_of[(min(u, v), max(u, v))]

    start = next(node for node in line.nodes if key(node) == 0)
    ordered = [0]
    for _, child in nx.bfs_edges(line, start, sort_neighbors=lambda nodes: sorted(nodes, key=key)):
        ordered.append(key(child))
    return ordered


def build_plan(g: Graph) -> SearchPlan:
    order = line_graph_order(g)
    return SearchPlan(
        vertex_count=g.vertex_count,
        q=g.edge_count,
        order=tuple(order),
        endpoints=tuple(g.edges[index] for index in order),
        degrees=tuple(g.degrees()),
        neighbors=tuple(tuple(g.neighbors(v)) for v in range(g.vertex_count)),
    )
