"""Tests for the Graph model."""

import networkx as nx
import pytest

from app.schemas import Graph
from app.utils.app_errors import AppError, AppErrorCode


class TestGraphValidation:
    """Structural checks done when a Graph is built."""

    def test_pairs_are_normalized(self):
        """Should store each edge as (min, max)."""
        g = Graph(vertex_count=3, edges=[(1, 0), (2, 1)])

        assert g.edges == ((0, 1), (1, 2))

    def test_loop_rejected(self):
        """Should reject a loop edge."""
        with pytest.raises(AppError) as exc:
            Graph(vertex_count=2, edges=[(0, 1), (1, 1)])

        assert exc.value.errcode == AppErrorCode.E_LOOP_EDGE.value

    def test_duplicate_rejected_in_either_orientation(self):
        """Should reject (u, v) followed by (v, u)."""
        with pytest.raises(AppError) as exc:
            Graph(vertex_count=3, edges=[(0, 1), (1, 0)])

        assert exc.value.errcode == AppErrorCode.E_DUPLICATE_EDGE.value

    def test_vertex_out_of_range_rejected(self):
        """Should reject an endpoint beyond vertex_count."""
        with pytest.raises(AppError) as exc:
            Graph(vertex_count=2, edges=[(0, 2)])

        assert exc.value.errcode == AppErrorCode.E_INVALID_INPUT.value


class TestGraphQueries:
    """Adjacency helpers and connectivity."""

    def test_incidence_follows_edge_indices(self):
        """Should list incident edges in edge-index order."""
        g = Graph(vertex_count=4, edges=[(0, 1), (1, 2), (1, 3)])

        assert g.incident_edges(1) == [0, 1, 2]
        assert g.neighbors(1) == [0, 2, 3]
        assert g.degrees() == [1, 3, 1, 1]

    def test_disconnected_graph_refused_for_labeling(self):
        """Should raise E_DISCONNECTED from require_labelable."""
        g = Graph(vertex_count=4, edges=[(0, 1), (2, 3)])

        assert not g.is_connected()
        with pytest.raises(AppError) as exc:
            g.require_labelable()
        assert exc.value.errcode == AppErrorCode.E_DISCONNECTED.value

    def test_isolated_vertex_breaks_connectivity(self, wheel4):
        g = Graph(vertex_count=4, edges=[(0, 1), (1, 2)])

        assert not g.is_connected()
        assert wheel4.is_connected()

    def test_order_two_refused_for_labeling(self):
        """Should raise E_TOO_SMALL for K_2."""
        g = Graph(vertex_count=2, edges=[(0, 1)])

        with pytest.raises(AppError) as exc:
            g.require_labelable()

        assert exc.value.errcode == AppErrorCode.E_TOO_SMALL.value

    def test_to_networkx_keeps_edge_index(self, wheel4):
        """Should carry the edge index as an attribute."""
        nxg = wheel4.to_networkx()

        assert nxg.number_of_edges() == 8
        assert nxg.edges[1, 4]["index"] == 7
        assert nx.is_connected(nxg)
