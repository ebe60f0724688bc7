"""Tests for the support of the doubled fan in delta-perp."""

import pytest

from cambrian.errors import NotAffine
from cambrian.geometry.boundary import boundary_support, in_support


class TestBoundarySupport:
    def test_g2_support(self, g2_affine):
        """The gap is two W0-chambers meeting at x_c, found both ways."""
        support = boundary_support(g2_affine)
        assert support.complement_nonempty
        assert support.xc_in_complement
        assert len(support.chambers_in_complement) == 2
        assert support.descriptions_agree
        assert support.covered_chambers == 10
        assert support.passed

    def test_x_c_is_outside_the_support(self, g2_affine):
        """<x_c, beta> < 0 for every beta in the plus part."""
        support = boundary_support(g2_affine)
        assert not in_support(g2_affine, support.plus, support.split.xc)

    def test_affine_a1_support(self, a1_affine):
        """Rank two: one chamber s0 D0 is missed."""
        support = boundary_support(a1_affine)
        assert support.plus == {(1, 0)}
        assert support.chambers_in_complement == [(0,)]
        assert support.chambers_at_xc == [(0,)]

    def test_requires_affine_input(self, a2):
        """Finite input has no delta."""
        with pytest.raises(NotAffine):
            boundary_support(a2)

    @pytest.mark.slow
    def test_g2_fan_faces(self, g2_affine, g2_graph):
        """No enumerated cone has a delta-perp face in the gap."""
        support = boundary_support(g2_affine, g2_graph.cones())
        assert support.face_violations == []
