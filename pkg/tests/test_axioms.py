"""Tests for the framework axioms and the corrupted-label negative control."""

import pytest

from cambrian.geometry.framework import doubled_graph
from cambrian.verify.axioms import Axiom, CheckStatus, check_axioms, corrupt_label, euler_sign, recheck


@pytest.fixture(scope="module")
def corrupted_a2(a2_graph):
    return corrupt_label(a2_graph)


class TestCheckAxioms:
    def test_a2_passes(self, a2_graph):
        """Every axiom holds on the A2 framework."""
        report = check_axioms(a2_graph)
        assert report.interior == 5
        assert all(status == CheckStatus.PASS for status in report.statuses.values())
        assert report.witnesses == []

    def test_affine_a1_passes(self, a1_graph):
        """Affine A1 satisfies every axiom on its interior, completeness included."""
        report = check_axioms(a1_graph)
        assert report.passed
        assert report.statuses[Axiom.COMPLETENESS] == CheckStatus.PASS

    def test_indefinite_claims(self, indefinite):
        """Full edge and completeness are not claimed for indefinite input."""
        report = check_axioms(doubled_graph(indefinite, 3))
        assert report.statuses[Axiom.FULL_EDGE] == CheckStatus.NOT_CLAIMED
        assert report.statuses[Axiom.COMPLETENESS] == CheckStatus.NOT_CLAIMED

    def test_euler_sign(self, a2):
        """E(alpha_1^v, -alpha_0) = 1."""
        assert euler_sign(a2, (0, 1), (-1, 0)) == 1


class TestNegativeControl:
    def test_corruption_fails(self, corrupted_a2):
        """Negating alpha_0 at the base breaks Base and E1."""
        report = check_axioms(corrupted_a2)
        assert not report.passed
        assert report.statuses[Axiom.BASE] == CheckStatus.FAIL
        assert report.statuses[Axiom.E1] == CheckStatus.FAIL
        e1 = [w for w in report.witnesses if w.axiom == Axiom.E1]
        assert e1[0].labels == ((0, 1), (-1, 0))

    def test_witnesses_replay(self, a2_graph, corrupted_a2):
        """Witnesses reproduce on the corrupted graph and not on the original."""
        report = check_axioms(corrupted_a2)
        assert all(recheck(corrupted_a2, w) for w in report.witnesses)
        assert not any(recheck(a2_graph, w) for w in report.witnesses)

    def test_original_untouched(self, a2_graph, corrupted_a2):
        """Corruption works on a copy."""
        assert check_axioms(a2_graph).passed
