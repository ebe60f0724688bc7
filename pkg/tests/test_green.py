"""Tests for maximal green sequences through the overlap."""

import pytest

from cambrian.errors import GreenSequenceNotFound
from cambrian.geometry.framework import doubled_graph
from cambrian.verify.green import find_green_sequence


class TestGreenSequence:
    def test_a2(self, a2_graph):
        """Pi, then {alpha_0, -alpha_1}, then -Pi."""
        sequence = find_green_sequence(a2_graph)
        assert sequence.length == 2
        assert sequence.crossings == ((0, 1), (1, 0))
        assert sequence.vertices[0] == a2_graph.base_key
        assert sequence.vertices[-1] == a2_graph.negated_base_key

    def test_affine_a1(self, a1_graph):
        """The same two crossings in affine A1."""
        assert find_green_sequence(a1_graph).crossings == ((0, 1), (1, 0))

    def test_every_crossing_is_green(self, a1_graph):
        """All crossing labels are positive."""
        assert all(min(label) >= 0 for label in find_green_sequence(a1_graph).crossings)

    def test_too_small_bound(self, g2_affine):
        """With maxLen 0 the walk leaves the enumerated graph."""
        with pytest.raises(GreenSequenceNotFound):
            find_green_sequence(doubled_graph(g2_affine, 0))

    @pytest.mark.slow
    def test_g2_affine(self, g2_graph):
        """Length three: (w0)_{1,2} = s1 s2 up and s0 down."""
        assert find_green_sequence(g2_graph).length == 3
