"""Tests for the full verification suite."""

import pytest

from cambrian.core.matrices import CartanType
from cambrian.export import suite_export, suite_text
from cambrian.verify.axioms import CheckStatus
from cambrian.verify.suite import run_suite


class TestRunSuite:
    def test_a2(self, a2):
        """Finite input passes every claimed section; the boundary is not claimed."""
        report = run_suite(a2, max_len=3, depth=3)
        assert report.passed
        assert report.statuses["boundary"] == CheckStatus.NOT_CLAIMED
        assert report.green.length == 2
        assert "construction" not in report.statuses

    def test_affine_a1(self, a1_affine):
        """Affine A1 passes, boundary support included."""
        report = run_suite(a1_affine, max_len=8, depth=6)
        assert report.kind == CartanType.AFFINE
        assert report.statuses["boundary"] == CheckStatus.PASS
        assert report.cones_at_boundary == (1, 1)
        assert report.statuses["boundaryCount"] == CheckStatus.PASS
        assert report.statuses["persistence"] == CheckStatus.PASS
        assert report.passed

    def test_corrupt_run_fails(self, a2):
        """The negative control turns the axiom section red."""
        report = run_suite(a2, max_len=3, depth=3, corrupt=True)
        assert report.statuses["axioms"] == CheckStatus.FAIL
        assert not report.passed
        assert report.notes == []

    def test_exported_report(self, a2):
        """The JSON document and the text summary agree on the outcome."""
        report = run_suite(a2, max_len=3, depth=3)
        document = suite_export(report)
        assert document.success
        assert document.matched_seeds == 5
        assert suite_text(report).rstrip().endswith("PASS")

    @pytest.mark.slow
    def test_g2_affine(self, g2_affine):
        """The G2 affine example at the default bounds."""
        report = run_suite(g2_affine, max_len=8, depth=7)
        assert report.passed
        assert report.green.length == 3

    @pytest.mark.slow
    def test_g2_boundary_count_stabilizes(self, g2_affine):
        """Cones meeting delta-perp are all enumerated by maxLen 8: the count at 9 is the same."""
        report = run_suite(g2_affine, max_len=8, depth=7)
        first, second = report.cones_at_boundary
        assert first == second
        assert first > 1
        assert report.statuses["boundaryCount"] == CheckStatus.PASS

    @pytest.mark.slow
    def test_hyperbolic_control(self, indefinite):
        """Indefinite input never reports FAIL for unclaimed sections."""
        report = run_suite(indefinite, max_len=5, depth=4)
        assert report.statuses["completeness"] == CheckStatus.NOT_CLAIMED
        assert report.statuses["boundary"] == CheckStatus.NOT_CLAIMED
        assert report.statuses["boundaryCount"] == CheckStatus.NOT_CLAIMED
        assert report.persistent
        assert report.statuses["persistence"] == CheckStatus.PASS
        assert suite_export(report).persistent_deficits
