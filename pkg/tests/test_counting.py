"""The four counting engines and their reconciliation."""
import json

import pytest

from stirling_mesas import (
    CountReport,
    ResourceGuardError,
    count_brute_force,
    count_closed_form,
    count_recurrence,
    count_subsets,
    enumerate_ams,
    enumerate_maximal,
    full_report,
    is_admissible,
    mesa_set,
    rational_catalan,
)
from stirling_mesas.counting import CSV_HEADER, maximal_count


class TestBruteForce:
    def test_known_values(self):
        assert count_brute_force(1) == 1
        assert count_brute_force(4) == 6

    @pytest.mark.parametrize("n", range(1, 8))
    def test_matches_table(self, n, ams_counts):
        assert count_brute_force(n) == ams_counts[n - 1]

    def test_parallel_merge_matches_serial(self):
        assert count_brute_force(6, workers=3) == count_brute_force(6)

    def test_resource_guard(self):
        with pytest.raises(ResourceGuardError):
            count_brute_force(11)
        with pytest.raises(ResourceGuardError):
            count_brute_force(5, ceiling=4)


class TestEnumerateAms:
    def test_small_orders(self):
        assert [tuple(M.elements) for M in enumerate_ams(2)] == [(), (2,)]
        assert [tuple(M.elements) for M in enumerate_ams(3)] == [(), (2,), (3,)]

    @pytest.mark.parametrize("n", range(1, 16))
    def test_counts_match_table(self, n, ams_counts):
        assert count_subsets(n) == ams_counts[n - 1]

    def test_all_emitted_sets_admissible_and_distinct(self):
        sets = [tuple(M.elements) for M in enumerate_ams(9)]
        assert len(sets) == len(set(sets))
        assert all(is_admissible(s) for s in sets)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_equals_brute_force_ground_truth(self, n, small_q):
        realized = {frozenset(mesa_set(w)) for w in small_q[n]}
        enumerated = {frozenset(M.elements) for M in enumerate_ams(n)}
        assert realized == enumerated

    def test_deterministic(self):
        assert list(map(str, enumerate_ams(6))) == list(map(str, enumerate_ams(6)))


class TestEnumerateMaximal:
    def test_k3_matches_panels(self):
        sets = {tuple(M.elements) for M in enumerate_maximal(3)}
        assert sets == {
            (4, 5, 6, 7, 8), (3, 5, 6, 7, 8), (3, 4, 6, 7, 8),
            (3, 4, 5, 7, 8), (2, 5, 6, 7, 8), (2, 4, 6, 7, 8),
            (2, 4, 5, 7, 8),
        }

    def test_small_k(self):
        assert [tuple(M.elements) for M in enumerate_maximal(1)] == [(2,)]
        assert {tuple(M.elements) for M in enumerate_maximal(2)} == {
            (3, 4, 5), (2, 4, 5),
        }

    @pytest.mark.parametrize("k", range(1, 7))
    def test_counts(self, k, maximal_counts):
        count = sum(1 for _ in enumerate_maximal(k))
        assert count == maximal_counts[k - 1]
        assert count == rational_catalan(2 * k - 1, k)


class TestFastEngines:
    @pytest.mark.parametrize("n", range(1, 16))
    def test_recurrence_matches_table(self, n, ams_counts):
        assert count_recurrence(n) == ams_counts[n - 1]

    @pytest.mark.parametrize("n", range(1, 16))
    def test_closed_form_matches_table(self, n, ams_counts):
        assert count_closed_form(n) == ams_counts[n - 1]

    def test_engines_agree_far_beyond_table(self):
        for n in range(16, 60):
            assert count_recurrence(n) == count_closed_form(n)

    def test_doubling_relations(self):
        for k in range(1, 20):
            assert count_recurrence(3 * k + 1) == 2 * count_recurrence(3 * k)
            assert count_recurrence(3 * k - 1) == 2 * count_recurrence(3 * k - 2)
            assert count_recurrence(3 * k) < 2 * count_recurrence(3 * k - 1)

    def test_exactness_at_large_order(self):
        # closed form mixes 2^(n-1) with Catalan terms; must stay exact
        assert count_closed_form(301) == count_recurrence(301)
        assert count_closed_form(301) > 2**290


class TestFullReport:
    def test_all_engines_agree_at_7(self):
        report = full_report(7)
        assert report.present_counts() == [44, 44, 44, 44]
        assert report.agree

    def test_brute_skipped_above_ceiling(self):
        report = full_report(15)
        assert report.brute_force_count is None
        assert report.subset_count == 10433
        assert report.agree

    def test_maximal_count_present_only_at_3k_minus_1(self):
        assert full_report(8, engines=("closed_form",)).maximal_count == 7
        assert full_report(9, engines=("closed_form",)).maximal_count is None
        assert maximal_count(5) == 2

    def test_corrupt_hook_detects_disagreement(self):
        report = full_report(7, engines=("subset", "recurrence"), corrupt="recurrence")
        assert report.recurrence_count == 45
        assert not report.agree

    def test_unknown_engine_rejected(self):
        with pytest.raises(ValueError):
            full_report(5, engines=("telepathy",))

    def test_json_round_trip(self):
        report = full_report(6, engines=("subset", "closed_form"))
        data = json.loads(report.to_json())
        assert data["order"] == 6
        assert data["subset_count"] == 22
        assert data["brute_force_count"] is None
        assert data["agree"] is True

    def test_csv_row(self):
        report = full_report(8, engines=("subset", "recurrence", "closed_form"))
        assert CSV_HEADER.split(",")[0] == "order"
        assert report.to_csv_row() == "8,,88,88,88,7,true"

    def test_report_type_defaults(self):
        report = CountReport(order=3)
        assert report.present_counts() == []
        assert report.agree
