"""Tests for colour profile extraction and labeling files."""

import pytest

from app.domain.constructions import label_spider_2n
from app.domain.labeling import extract_profile, induced_colors, parse_labeling, read_labeling, write_labeling
from app.utils.app_errors import AppError, AppErrorCode


class TestExtractProfile:
    def test_wheel(self, wheel4, wheel4_labeling):
        """Should recover t = r = 3 with colours 11 < 15 < 20."""
        profile = extract_profile(wheel4, wheel4_labeling)

        assert (profile.e, profile.t, profile.r, profile.b) == (8, 3, 3, 0)
        assert profile.colors == (11, 15, 20)
        assert profile.sizes == (2, 2, 1)
        assert profile.class_members(1) == (1, 3)
        assert profile.class_members(3) == (0,)

    def test_path_with_pendant_in_a_top_class(self, path4, path4_labeling):
        """Should put the mixed class first and count its pendant in b."""
        profile = extract_profile(path4, path4_labeling)

        assert profile.colors == (3, 4, 2)
        assert profile.sizes == (2, 1, 1)
        assert profile.r == 2
        assert profile.b == 1
        assert profile.pendant_classes == (1,)
        assert profile.pendant_count == 2

    def test_spider(self):
        """Should order middles (9) before the core (10), then pendants 5..8."""
        g, f = label_spider_2n(4).pair

        profile = extract_profile(g, f)

        assert profile.colors == (9, 10, 5, 6, 7, 8)
        assert (profile.t, profile.r, profile.b) == (6, 2, 0)

    def test_weighted_sum(self, wheel4, wheel4_labeling):
        profile = extract_profile(wheel4, wheel4_labeling)

        assert sum(n * c for n, c in zip(profile.sizes, profile.colors)) == profile.e * (profile.e + 1)


class TestLabelingFiles:
    def test_written_file_reads_back(self, wheel4, wheel4_labeling, tmp_path):
        """Should reproduce the labels and list the colours as comments."""
        path = write_labeling(wheel4, wheel4_labeling, tmp_path / "w4.labels")

        text = path.read_text()
        assert "# colors:" in text
        assert "# 0=20" in text
        assert read_labeling(path, wheel4) == wheel4_labeling
        assert induced_colors(wheel4, read_labeling(path, wheel4)).count == 3

    def test_undecodable_file(self, path4, tmp_path):
        path = tmp_path / "p4.labels"
        path.write_bytes(b"0 1\n1 \xff\n2 3\n")

        with pytest.raises(AppError) as exc:
            read_labeling(path, path4)

        assert exc.value.errcode == AppErrorCode.E_INVALID_INPUT.value

    def test_edge_labelled_twice(self, path4):
        with pytest.raises(AppError) as exc:
            parse_labeling("0 1\n0 2\n2 3\n", path4)

        assert exc.value.errcode == AppErrorCode.E_LABELING_MISMATCH.value

    def test_swapped_labels_break_bijection(self, path4):
        """Should reject labels that repeat a value."""
        with pytest.raises(AppError) as exc:
            parse_labeling("0 2\n1 2\n2 3\n", path4)

        assert exc.value.errcode == AppErrorCode.E_LABELING_MISMATCH.value

    def test_missing_edge(self, path4):
        with pytest.raises(AppError) as exc:
            parse_labeling("0 1\n1 2\n", path4)

        assert exc.value.errcode == AppErrorCode.E_LABELING_MISMATCH.value
