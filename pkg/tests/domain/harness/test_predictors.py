"""Tests for the augmentation bound predictors and their routing."""

from functools import lru_cache
from itertools import permutations

import pytest

from app.domain.graph import (
    add_pendant_edges,
    build_cycle,
    build_path,
    build_spider,
    build_star,
    from_edge_list,
    pendant_vertices,
)
from app.domain.harness import (
    is_star_profile,
    predict,
    predict_minimal_base,
    predict_nonpendant_class,
    predict_pendant_class,
)
from app.domain.labeling import extract_profile, is_local_antimagic
from app.domain.solver import solve_chi_la
from app.schemas import ColorProfile, EdgeLabeling, Graph, PredictionCase
from app.utils.app_errors import AppError, AppErrorCode


@pytest.fixture
def two_pendant_profile() -> ColorProfile:
    """e = 6, colours 4 < 5 < 18 with pendants in classes 1 and 2, plus one pendant singleton."""
    return ColorProfile.from_synthetic(e=6, colors=[4, 5, 18, 6], sizes=[2, 2, 1, 1], r=3, b=2, pendant_classes=[1, 2])


@pytest.fixture
def tight_profile() -> ColorProfile:
    """c_2 = e = 5 with b = 2."""
    return ColorProfile.from_synthetic(e=5, colors=[3, 5, 14], sizes=[2, 2, 1], r=3, b=2, pendant_classes=[1, 2])


@pytest.fixture
def star_profile() -> ColorProfile:
    return ColorProfile.from_synthetic(e=3, colors=[6, 1, 2, 3], sizes=[1, 1, 1, 1], r=1)


class TestNonpendantClass:
    def test_hub_of_wheel(self, wheel4_profile):
        """Should give s + 1 when e is below every colour."""
        predicted = predict_nonpendant_class(wheel4_profile, 3, 12)

        assert predicted.exact == 13
        assert predicted.case == PredictionCase.NONPENDANT_BELOW_FIRST
        assert not predicted.boundary

    def test_boundary_s(self, wheel4_profile):
        predicted = predict_nonpendant_class(wheel4_profile, 3, 7)

        assert predicted.exact == 8
        assert predicted.boundary

    def test_rim_class_boundary(self, wheel4_profile):
        predicted = predict_nonpendant_class(wheel4_profile, 1, 6)

        assert predicted.exact == 13
        assert predicted.boundary

    def test_magnitude_failure(self, wheel4_profile):
        """Should not apply when e + s*n_i stays below the top colour."""
        predicted = predict_nonpendant_class(wheel4_profile, 1, 4)

        assert not predicted.applicable
        assert any("below the required 20" in reason for reason in predicted.failed_preconditions)

    def test_parity_failure(self, wheel4_profile):
        predicted = predict_nonpendant_class(wheel4_profile, 1, 13)

        assert not predicted.applicable
        assert any("even" in reason for reason in predicted.failed_preconditions)

    def test_first_gap_with_clause(self, first_gap_profile):
        """Should collapse to the upper value when c_1 = e and b = 1."""
        predicted = predict_nonpendant_class(first_gap_profile, 2, 2)

        assert predicted.exact == 6
        assert predicted.case == PredictionCase.NONPENDANT_FIRST_GAP
        assert predicted.clause == "c_1 = e and b = 1"

    def test_first_gap_lowest_class(self, first_gap_profile):
        predicted = predict_nonpendant_class(first_gap_profile, 1, 2)

        assert predicted.exact == 9
        assert predicted.case == PredictionCase.NONPENDANT_FIRST_GAP_LOWEST

    def test_gap_class_with_pendant(self, two_pendant_profile):
        predicted = predict_nonpendant_class(two_pendant_profile, 1, 6)

        assert predicted.exact == 15
        assert predicted.case == PredictionCase.NONPENDANT_GAP_PENDANT_CLASS
        assert predicted.boundary

    def test_gap_class_too_few_pendants(self, two_pendant_profile):
        assert not predict_nonpendant_class(two_pendant_profile, 1, 2).applicable

    def test_gap_upper_class(self, two_pendant_profile):
        predicted = predict_nonpendant_class(two_pendant_profile, 3, 1)

        assert predicted.exact == 5
        assert predicted.case == PredictionCase.NONPENDANT_GAP_UPPER_CLASS

    def test_gap_tight(self, tight_profile):
        """Should return the upper value when c_{j-1} = e and b = j - 1."""
        upper_class = predict_nonpendant_class(tight_profile, 3, 1)
        lower_class = predict_nonpendant_class(tight_profile, 1, 6)

        assert upper_class.exact == 4
        assert upper_class.case == PredictionCase.NONPENDANT_GAP_TIGHT
        assert lower_class.exact == 14
        assert lower_class.case == PredictionCase.NONPENDANT_GAP_TIGHT

    def test_below_first_on_long_tail(self, pendant_tail_profile):
        predicted = predict_nonpendant_class(pendant_tail_profile, 1, 8)

        assert predicted.exact == 23
        assert predicted.boundary

    def test_rejects_pendant_class_index(self, pendant_tail_profile):
        with pytest.raises(AppError) as exc:
            predict_nonpendant_class(pendant_tail_profile, 4, 16)

        assert exc.value.errcode == AppErrorCode.E_CLASS_OUT_OF_RANGE.value


class TestPendantClass:
    def test_below_first(self, pendant_tail_profile):
        """Should give s + t - r once e + s reaches c_r."""
        predicted = predict_pendant_class(pendant_tail_profile, 4, 16)

        assert predicted.exact == 22
        assert predicted.case == PredictionCase.PENDANT_BELOW_FIRST
        assert predicted.boundary

    def test_below_threshold(self, pendant_tail_profile):
        predicted = predict_pendant_class(pendant_tail_profile, 4, 15)

        assert not predicted.applicable
        assert predicted.failed_preconditions == ["e + s = 24 is below c_r=25"]

    def test_gap_tight(self, two_pendant_profile):
        predicted = predict_pendant_class(two_pendant_profile, 4, 12)

        assert predicted.exact == 15
        assert predicted.case == PredictionCase.PENDANT_GAP_TIGHT

    def test_star_base(self, star_profile):
        """Should leave star bases to the minimal-base rule."""
        assert not predict_pendant_class(star_profile, 2, 3).applicable

    def test_rejects_nonpendant_class_index(self, pendant_tail_profile):
        with pytest.raises(AppError):
            predict_pendant_class(pendant_tail_profile, 3, 16)


class TestMinimalBase:
    def test_top_class(self, path4, path4_labeling):
        profile = extract_profile(path4, path4_labeling)
        predicted = predict_minimal_base(profile, 2, 1)

        assert predicted.exact == 4
        assert predicted.case == PredictionCase.MINIMAL_TOP_CLASS

    def test_other_class(self, path4, path4_labeling):
        profile = extract_profile(path4, path4_labeling)
        predicted = predict_minimal_base(profile, 1, 2)

        assert predicted.exact == 6
        assert predicted.case == PredictionCase.MINIMAL_OTHER_CLASS

    def test_agrees_with_pendant_predictor(self, two_pendant_profile):
        assert predict_minimal_base(two_pendant_profile, 4, 12).exact == 15

    def test_star_leaf(self, star_profile):
        predicted = predict_minimal_base(star_profile, 2, 3)

        assert predicted.exact == 6
        assert predicted.case == PredictionCase.MINIMAL_STAR_LEAF
        assert predicted.boundary

    def test_star_leaf_below_centre(self, star_profile):
        predicted = predict_minimal_base(star_profile, 2, 2)

        assert not predicted.applicable
        assert predicted.case == PredictionCase.MINIMAL_STAR_LEAF

    def test_star_centre(self, star_profile):
        assert not predict_minimal_base(star_profile, 1, 4).applicable

    def test_not_minimal(self, wheel4_profile):
        predicted = predict_minimal_base(wheel4_profile, 3, 12)

        assert not predicted.applicable
        assert predicted.failed_preconditions == ["base uses t=3 colours, not k+1=1"]


class TestPredictRouting:
    def test_star_profile_detection(self, star_profile, wheel4_profile):
        assert is_star_profile(star_profile)
        assert not is_star_profile(wheel4_profile)

    def test_minimal_base_takes_precedence(self, first_gap_profile):
        """Should route t = k + 1 profiles to the minimal rule, with the same values."""
        top = predict(first_gap_profile, 2, 2)
        lowest = predict(first_gap_profile, 1, 2)

        assert top.case == PredictionCase.MINIMAL_TOP_CLASS
        assert top.exact == 6
        assert lowest.case == PredictionCase.MINIMAL_OTHER_CLASS
        assert lowest.exact == 9

    def test_by_class_index(self, pendant_tail_profile):
        assert predict(pendant_tail_profile, 1, 8).case == PredictionCase.NONPENDANT_BELOW_FIRST
        assert predict(pendant_tail_profile, 4, 16).case == PredictionCase.PENDANT_BELOW_FIRST

    def test_class_out_of_range(self, wheel4_profile):
        with pytest.raises(AppError) as exc:
            predict(wheel4_profile, 4, 2)

        assert exc.value.errcode == AppErrorCode.E_CLASS_OUT_OF_RANGE.value

    def test_predictions_never_invert(self, pendant_tail_profile, two_pendant_profile, wheel4_profile):
        for profile in (pendant_tail_profile, two_pendant_profile, wheel4_profile):
            for i in range(1, profile.t + 1):
                for s in range(1, 30):
                    predicted = predict(profile, i, s)
                    if predicted.applicable:
                        assert predicted.lower <= predicted.upper


SWEEP_EDGE_LIMIT = 8


@lru_cache(maxsize=None)
def _searched_chi_la(edges: tuple[tuple[int, int], ...]) -> int:
    return solve_chi_la(from_edge_list(list(edges)), jobs=1).chi_la


def _local_antimagic_labelings(g: Graph) -> list[EdgeLabeling]:
    labelings = (EdgeLabeling(labels=labels) for labels in permutations(range(1, g.edge_count + 1)))
    return [f for f in labelings if is_local_antimagic(g, f)]


class TestExactPredictionsAgainstSearch:
    @pytest.mark.parametrize(
        ("base", "expects_checks"),
        [
            (build_path(3), True),
            (build_path(4), True),
            (build_path(5), True),
            (build_star(3), True),
            (build_star(4), True),
            (build_cycle(4), False),
            (build_spider([(1, 1), (2, 2)]), False),
        ],
        ids=["P3", "P4", "P5", "K13", "K14", "C4", "spider-1-2-2"],
    )
    def test_exact_values_match_search(self, base, expects_checks):
        """Should find every exact prediction confirmed by search on G(V_i, s)."""
        is_star = len(pendant_vertices(base)) == base.vertex_count - 1
        checked = 0
        for f in _local_antimagic_labelings(base):
            profile = extract_profile(base, f)
            for i in range(1, profile.t + 1):
                for s in range(1, 4):
                    if base.edge_count + s * profile.class_size(i) > SWEEP_EDGE_LIMIT:
                        continue
                    predicted = predict(profile, i, s, base_is_star=is_star)
                    if not predicted.applicable or predicted.exact is None:
                        continue

                    augmented = add_pendant_edges(base, profile.class_members(i), s)

                    assert _searched_chi_la(tuple(augmented.edges)) == predicted.exact, (f.labels, i, s)
                    checked += 1

        if expects_checks:
            assert checked > 0
