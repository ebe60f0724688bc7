"""Tests for half-edge scans, fan properties and rank-two stars."""

from dataclasses import replace

import pytest

from cambrian.core.matrices import CartanType
from cambrian.geometry.cones import Provenance
from cambrian.geometry.framework import Slot, SlotKind, doubled_graph
from cambrian.geometry.stars import StarEnd
from cambrian.verify.axioms import CheckStatus
from cambrian.verify.completeness import completeness_scan, persistent_deficits
from cambrian.verify.properties import fan_properties, rank_two_scan


class TestCompleteness:
    def test_a2_is_complete(self, a2_graph):
        """No half-edges at all in finite type."""
        report = completeness_scan(a2_graph)
        assert report.complete
        assert report.status == CheckStatus.PASS

    def test_affine_interior_has_no_half_edges(self, a1_graph):
        """Interior vertices of affine A1 carry only full edges."""
        report = completeness_scan(a1_graph)
        assert report.interior_half_edges == []
        assert report.status == CheckStatus.PASS

    def test_indefinite_is_not_claimed(self, indefinite):
        """Persistent deficits lie in both scans; status stays NOT_CLAIMED."""
        first = completeness_scan(doubled_graph(indefinite, 3))
        second = completeness_scan(doubled_graph(indefinite, 4))
        persistent = persistent_deficits(indefinite, 3)
        assert first.kind == CartanType.INDEFINITE
        assert first.status == CheckStatus.NOT_CLAIMED
        assert second.status == CheckStatus.NOT_CLAIMED
        assert set(persistent) <= set(first.deficits)
        assert set(persistent) <= set(second.deficits)

    @pytest.mark.slow
    def test_indefinite_deficit_witness(self, indefinite):
        """Cones bordering the uncovered region keep a half-edge at the next bound."""
        first = doubled_graph(indefinite, 5)
        second = doubled_graph(indefinite, 6)
        persistent = persistent_deficits(indefinite, 5)
        assert persistent
        vertex, label = persistent[0]
        for graph in (first, second):
            witness = graph.vertices[frozenset(vertex)]
            assert label in witness.labels
            assert witness.slots[label].kind == SlotKind.HALF
            assert witness.slots[label].neighbor is None
            # a cone on both sides has every slot full from one of them
            assert witness.provenance != Provenance.BOTH
        assert completeness_scan(second).status == CheckStatus.NOT_CLAIMED


class TestFanProperties:
    def test_a2_properties(self, a2_graph):
        """Above/below, recursive fan and dual adjacency hold in A2."""
        report = fan_properties(a2_graph)
        assert report.status == CheckStatus.PASS
        assert report.checked["AboveBelow"] == 10
        assert report.checked["RecursiveFan"] == 5
        assert report.checked["DualAdjacent"] == 10

    def test_affine_properties(self, a1_graph):
        """No cone of affine A1 has a facet in delta-perp."""
        report = fan_properties(a1_graph)
        assert report.status == CheckStatus.PASS
        assert report.checked["FaceInBoundary"] == 17


class TestRankTwoScan:
    def test_a2_single_cycle(self, a2_graph):
        """One codimension-2 face, the origin, with a five-cycle around it."""
        scan = rank_two_scan(a2_graph)
        assert scan.counts == {"cycle": 1}
        assert scan.status == CheckStatus.PASS

    def test_affine_star_is_truncated(self, a1_graph):
        """The bi-infinite star of the affine A1 origin is cut off by the bound, not called a path."""
        scan = rank_two_scan(a1_graph)
        assert scan.counts == {"truncated": 1}
        assert scan.inconsistent == []
        assert scan.status == CheckStatus.INCONCLUSIVE

    def test_open_slot_inside_interior_fails(self, a1_graph):
        """An interior vertex whose star edge has no neighbour breaks the boundary star."""
        base = a1_graph.vertices[a1_graph.base_key]
        slots = {label: Slot(label, SlotKind.OPEN) for label in base.slots}
        vertices = dict(a1_graph.vertices)
        vertices[a1_graph.base_key] = replace(base, slots=slots, interior=True)
        scan = rank_two_scan(replace(a1_graph, vertices=vertices))
        assert scan.status == CheckStatus.FAIL
        assert any(StarEnd.BROKEN in star.ends for star in scan.inconsistent)
