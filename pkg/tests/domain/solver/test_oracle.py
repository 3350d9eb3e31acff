"""Cross-checks of the pruned search against full enumeration."""

from math import factorial

import pytest

from app.domain.graph import build_cycle, build_path, build_spider, build_star, build_wheel
from app.domain.solver import ORACLE_EDGE_LIMIT, audit_pendant_lemma, brute_force_chi_la, lower_bound, solve_chi_la
from app.utils.app_errors import AppError, AppErrorCode
from tests.fixtures.graph_fixtures import random_connected_graphs


class TestBruteForce:
    def test_known_values(self):
        assert brute_force_chi_la(build_path(4)) == 3
        assert brute_force_chi_la(build_spider([(2, 3)])) == 4

    def test_refuses_large_graphs(self):
        with pytest.raises(AppError) as exc:
            brute_force_chi_la(build_path(ORACLE_EDGE_LIMIT + 2))

        assert exc.value.errcode == AppErrorCode.E_TOO_LARGE.value

    @pytest.mark.parametrize("seed", [7, 2024])
    def test_solver_matches_enumeration(self, seed):
        """Should agree with unpruned enumeration on random connected graphs."""
        for g in random_connected_graphs(25, 7, seed):
            expected = brute_force_chi_la(g)
            result = solve_chi_la(g, jobs=1)

            assert result.chi_la == expected, g.describe()
            assert result.chi_la >= lower_bound(g)


class TestPendantLemmaAudit:
    def test_path_counts(self):
        """Should see all six labelings of P_4 as local antimagic, two with 3 in the middle."""
        audit = audit_pendant_lemma(build_path(4))

        assert audit.labelings == 6
        assert audit.local_antimagic == 6
        assert audit.max_on_nonpendant == 2
        assert audit.violations == 0

    def test_spider_has_no_violations(self):
        audit = audit_pendant_lemma(build_spider([(2, 3)]))

        assert audit.labelings == 720
        assert audit.violations == 0

    @pytest.mark.parametrize(
        "graph",
        [build_path(4), build_path(5), build_star(3), build_spider([(2, 3)]), build_cycle(4)],
        ids=["P4", "P5", "K13", "Sp3", "C4"],
    )
    def test_small_families_have_no_violations(self, graph):
        """Should find no labeling with the top label inside and fewer than k + 2 colours."""
        audit = audit_pendant_lemma(graph)

        assert audit.labelings == factorial(graph.edge_count)
        assert audit.local_antimagic > 0
        assert audit.violations == 0

    def test_star_keeps_top_label_on_a_pendant(self):
        audit = audit_pendant_lemma(build_star(3))

        assert audit.local_antimagic == 6
        assert audit.max_on_nonpendant == 0

    def test_cycle_has_no_pendant_edges(self):
        audit = audit_pendant_lemma(build_cycle(4))

        assert audit.max_on_nonpendant == audit.local_antimagic

    @pytest.mark.slow
    def test_random_graphs_have_no_violations(self):
        for g in random_connected_graphs(10, 8, seed=31):
            assert audit_pendant_lemma(g).violations == 0, g.describe()

    @pytest.mark.slow
    def test_wheel_without_pendants(self):
        audit = audit_pendant_lemma(build_wheel(4))

        assert audit.labelings == 40320
        assert audit.violations == 0
