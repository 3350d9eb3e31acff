"""Graph model shared by every domain package."""

from typing import Any

import networkx as nx
from pydantic import BaseModel, ConfigDict, PrivateAttr, field_validator, model_validator

from app.utils.app_errors import AppError, AppErrorCode

Edge = tuple[int, int]
VertexSet = frozenset[int]


class GraphMetadata(BaseModel):
    """Family name and parameters a graph was built from.

    Builders fix a canonical numbering (hub/core = vertex 0) and record it here so
    labelings are reproducible across runs.
    """

    model_config = ConfigDict(frozen=True)

    family: str = "custom"
    params: dict[str, Any] = {}
    numbering: str | None = None


class Graph(BaseModel):
    """Simple undirected graph with dense 0-based vertices and stable edge indices.

    Edge j always refers to the j-th pair of `edges`. Pairs are stored as (min, max).
    Connectivity is not enforced here; labeling operations call `require_labelable()`.
    """

    model_config = ConfigDict(frozen=True)

    vertex_count: int
    edges: tuple[Edge, ...]
    metadata: GraphMetadata = GraphMetadata()

    _incidence: list[list[int]] = PrivateAttr(default_factory=list)
    _neighbors: list[list[int]] = PrivateAttr(default_factory=list)

    @field_validator("edges", mode="before")
    @classmethod
    def normalize_edges(cls, v: Any) -> Any:
        if isinstance(v, (list, tuple)):
            normalized = []
            for pair in v:
                u, w = (int(x) for x in pair)
                normalized.append((u, w) if u <= w else (w, u))
            return tuple(normalized)
        return v

    @model_validator(mode="after")
    def check_simple(self) -> "Graph":
        if self.vertex_count < 1:
            raise AppError(
                errcode=AppErrorCode.E_INVALID_INPUT,
                errmesg=f"vertex_count must be positive, got {self.vertex_count}",
            )

        seen: set[Edge] = set()
        for index, (u, v) in enumerate(self.edges):
            if u < 0 or v >= self.vertex_count:
                raise AppError(
                    errcode=AppErrorCode.E_INVALID_INPUT,
                    errmesg=f"Edge {index} ({u}, {v}) is outside 0..{self.vertex_count - 1}",
                )
            if u == v:
                raise AppError(
                    errcode=AppErrorCode.E_LOOP_EDGE,
                    errmesg=f"Edge {index} is a loop at vertex {u}",
                )
            if (u, v) in seen:
                raise AppError(
                    errcode=AppErrorCode.E_DUPLICATE_EDGE,
                    errmesg=f"Edge {index} ({u}, {v}) is repeated",
                )
            seen.add((u, v))
        return self

    def model_post_init(self, __context: Any) -> None:
        incidence: list[list[int]] = [[] for _ in range(self.vertex_count)]
        neighbors: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for index, (u, v) in enumerate(self.edges):
            incidence[u].append(index)
            incidence[v].append(index)
            neighbors[u].append(v)
            neighbors[v].append(u)
        self._incidence = incidence
        self._neighbors = neighbors

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self._incidence[v])

    def degrees(self) -> list[int]:
        return [len(inc) for inc in self._incidence]

    def neighbors(self, v: int) -> list[int]:
        return list(self._neighbors[v])

    def incident_edges(self, v: int) -> list[int]:
        return list(self._incidence[v])

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return False
        return nx.is_connected(self.to_networkx())

    def require_labelable(self) -> None:
        """Raise unless the graph is connected with at least 3 vertices."""
        if self.vertex_count < 3:
            raise AppError(
                errcode=AppErrorCode.E_TOO_SMALL,
                errmesg=f"Labelings need order at least 3, got {self.vertex_count}",
            )
        if not self.is_connected():
            raise AppError(
                errcode=AppErrorCode.E_DISCONNECTED,
                errmesg="Local antimagic labelings are defined for connected graphs only",
            )

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        for index, (u, v) in enumerate(self.edges):
            g.add_edge(u, v, index=index)
        return g

    def describe(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.metadata.params.items())
        return f"{self.metadata.family}({params}) |V|={self.vertex_count} |E|={self.edge_count}"
