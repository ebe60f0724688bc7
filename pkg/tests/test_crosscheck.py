"""Tests for the framework to cluster-algebra dictionary."""

import random
from dataclasses import replace

import pytest

from cambrian.geometry.framework import Slot, SlotKind
from cambrian.verify.axioms import CheckStatus
from cambrian.verify.crosscheck import cross_check


class TestCrossCheck:
    def test_a2_matches_every_seed(self, a2, a2_graph):
        """Five vertices, five seed classes, no disagreement."""
        report = cross_check(a2, depth=7, graph=a2_graph)
        assert len(report.matched) == 5
        assert report.mismatches == []
        assert report.status == CheckStatus.PASS

    def test_affine_a1_to_depth_six(self, a1_affine, a1_graph):
        """Six steps each way from the base give thirteen matched pairs."""
        report = cross_check(a1_affine, depth=6, graph=a1_graph)
        assert len(report.matched) == 13
        assert report.status == CheckStatus.PASS

    def test_nonstandard_affine(self, nonstandard):
        """Short and long roots: coroot scaling keeps the dictionary exact."""
        report = cross_check(nonstandard, depth=4, max_len=6)
        assert report.mismatches == []

    def test_shuffled_mutation_order(self, a1_affine, a1_graph):
        """A seeded mutation order gives the same bijection."""
        plain = cross_check(a1_affine, depth=5, graph=a1_graph)
        shuffled = cross_check(a1_affine, depth=5, graph=a1_graph, rng=random.Random(7))
        assert plain.bijection() == shuffled.bijection()

    def test_sigma_of_base(self, a2, a2_graph):
        """The principal seed is matched with the simple roots."""
        report = cross_check(a2, depth=1, graph=a2_graph)
        pair = report.matched[a2_graph.base_key]
        assert pair.path == ()
        assert pair.sigma == ((1, 0), (0, 1))

    @pytest.mark.slow
    def test_g2_affine(self, g2_affine, g2_graph):
        """The G2 affine example matches to depth seven."""
        report = cross_check(g2_affine, depth=7, graph=g2_graph)
        assert report.status == CheckStatus.PASS

    def test_finite_leaves_no_class_unmatched(self, a2, a2_graph):
        """Every seed class of the pentagon has a framework vertex."""
        report = cross_check(a2, depth=7, graph=a2_graph)
        assert report.unmatched == []

    def test_missing_edge_is_a_mismatch(self, a2, a2_graph):
        """A full edge turned half leaves its seed class unmatched, reported with its path."""
        base = a2_graph.vertices[a2_graph.base_key]
        slots = dict(base.slots)
        slots[(1, 0)] = Slot((1, 0), SlotKind.HALF)
        vertices = dict(a2_graph.vertices)
        vertices[a2_graph.base_key] = replace(base, slots=slots)
        report = cross_check(a2, depth=1, graph=replace(a2_graph, vertices=vertices))
        assert report.status == CheckStatus.FAIL
        assert len(report.matched) == 2
        assert any("seed (0,)" in problem for problem in report.mismatches)
