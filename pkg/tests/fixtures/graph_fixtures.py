"""Graphs and labelings shared across test modules."""

import random

import networkx as nx
import pytest

from app.domain.graph import build_path, build_star, build_wheel, from_edge_list
from app.schemas import ColorProfile, EdgeLabeling, Graph

# Spokes (0,1)..(0,4), then rim (1,2),(2,3),(3,4),(1,4); colours hub 20, rim 11/15/11/15
W4_LABELS = (1, 6, 5, 8, 7, 2, 4, 3)
P4_LABELS = (2, 1, 3)


@pytest.fixture
def wheel4() -> Graph:
    return build_wheel(4)


@pytest.fixture
def wheel4_labeling() -> EdgeLabeling:
    return EdgeLabeling(labels=W4_LABELS)


@pytest.fixture
def path4() -> Graph:
    return build_path(4)


@pytest.fixture
def path4_labeling() -> EdgeLabeling:
    return EdgeLabeling(labels=P4_LABELS)


@pytest.fixture
def star3() -> Graph:
    return build_star(3)


@pytest.fixture
def star3_labeling() -> EdgeLabeling:
    return EdgeLabeling(labels=(1, 2, 3))


@pytest.fixture
def wheel4_profile() -> ColorProfile:
    return ColorProfile.from_synthetic(e=8, colors=[11, 15, 20], sizes=[2, 2, 1], r=3)


@pytest.fixture
def first_gap_profile() -> ColorProfile:
    """e = c_1 = 7 with one pendant in class 1 (r = t = 2)."""
    return ColorProfile.from_synthetic(e=7, colors=[7, 14], sizes=[4, 2], r=2, b=1, pendant_classes=[1])


@pytest.fixture
def pendant_tail_profile() -> ColorProfile:
    """e = 9 below c_1 = 10, three non-pendant classes and six pendant singletons."""
    return ColorProfile.from_synthetic(
        e=9,
        colors=[10, 20, 25, 1, 2, 3, 4, 6, 9],
        sizes=[2, 1, 1, 1, 1, 1, 1, 1, 1],
        r=3,
    )


def random_connected_graphs(count: int, max_edges: int, seed: int) -> list[Graph]:
    """Connected graphs of order >= 3 with 2..max_edges edges, drawn with networkx."""
    rng = random.Random(seed)
    graphs: list[Graph] = []
    while len(graphs) < count:
        n = rng.randint(3, max_edges + 1)
        m = rng.randint(n - 1, min(max_edges, n * (n - 1) // 2))
        candidate = nx.gnm_random_graph(n, m, seed=rng.randrange(1 << 30))
        if not nx.is_connected(candidate):
            continue
        graphs.append(from_edge_list(sorted(candidate.edges())))
    return graphs
