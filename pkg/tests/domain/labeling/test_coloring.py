"""Tests for induced colours, the local antimagic predicate and the pendant lemma check."""

import pytest

from app.domain.graph import build_cycle
from app.domain.labeling import (
    check_pendant_lemma,
    color_count,
    induced_colors,
    is_local_antimagic,
    require_local_antimagic,
)
from app.schemas import EdgeLabeling, Graph
from app.utils.app_errors import AppError, AppErrorCode

# triangle 0-1-2 with the tail 2-3
PADDLE = Graph(vertex_count=4, edges=[(0, 1), (0, 2), (1, 2), (2, 3)])


class TestInducedColors:
    def test_wheel_colors(self, wheel4, wheel4_labeling):
        """Should give the hub 20 and the rim 11, 15, 11, 15."""
        coloring = induced_colors(wheel4, wheel4_labeling)

        assert coloring.colors == (20, 11, 15, 11, 15)
        assert coloring.distinct == [11, 15, 20]
        assert coloring.multiset() == {11: 2, 15: 2, 20: 1}

    def test_handshake_identity(self, wheel4, wheel4_labeling, path4, path4_labeling):
        """Should sum to q(q+1) since every label is counted at both ends."""
        for g, f in ((wheel4, wheel4_labeling), (path4, path4_labeling)):
            assert sum(induced_colors(g, f).colors) == g.edge_count * (g.edge_count + 1)

    def test_labeling_size_mismatch(self, wheel4):
        with pytest.raises(AppError) as exc:
            induced_colors(wheel4, EdgeLabeling(labels=(1, 2, 3)))

        assert exc.value.errcode == AppErrorCode.E_LABELING_MISMATCH.value


class TestLocalAntimagic:
    def test_valid_labelings(self, wheel4, wheel4_labeling, path4, path4_labeling):
        assert is_local_antimagic(wheel4, wheel4_labeling)
        assert is_local_antimagic(path4, path4_labeling)
        assert color_count(path4, path4_labeling) == 3

    def test_equal_colours_on_non_adjacent_vertices_allowed(self):
        """Should accept C_4 labelled 1..4, where only opposite vertices share a colour."""
        g = build_cycle(4)
        f = EdgeLabeling(labels=(1, 2, 3, 4))

        assert induced_colors(g, f).colors == (5, 3, 5, 7)
        assert is_local_antimagic(g, f)

    def test_adjacent_equal_colours_rejected(self):
        """Should reject the paddle labelling where vertices 1 and 2 both get 6."""
        f = EdgeLabeling(labels=(4, 1, 2, 3))

        assert induced_colors(PADDLE, f).colors == (5, 6, 6, 3)
        assert not is_local_antimagic(PADDLE, f)
        with pytest.raises(AppError) as exc:
            require_local_antimagic(PADDLE, f)
        assert exc.value.errcode == AppErrorCode.E_NOT_LOCAL_ANTIMAGIC.value

    def test_disconnected_rejected(self):
        g = Graph(vertex_count=4, edges=[(0, 1), (2, 3)])

        with pytest.raises(AppError) as exc:
            is_local_antimagic(g, EdgeLabeling(labels=(1, 2)))

        assert exc.value.errcode == AppErrorCode.E_DISCONNECTED.value


class TestPendantLemmaCheck:
    def test_vacuous_when_top_label_is_pendant(self, star3, star3_labeling):
        assert check_pendant_lemma(star3, star3_labeling)

    def test_top_label_on_internal_edge(self, path4):
        """Should hold for P_4 with label 3 on the middle edge (4 colours >= k + 2)."""
        f = EdgeLabeling(labels=(1, 3, 2))

        assert induced_colors(path4, f).colors == (1, 4, 5, 2)
        assert check_pendant_lemma(path4, f)

    def test_requires_local_antimagic(self):
        with pytest.raises(AppError) as exc:
            check_pendant_lemma(PADDLE, EdgeLabeling(labels=(4, 1, 2, 3)))

        assert exc.value.errcode == AppErrorCode.E_NOT_LOCAL_ANTIMAGIC.value
