"""Tests for Coxeter group elements, descents and the weak order."""

from itertools import combinations

import pytest

from cambrian.core.coxeter import CoxeterGroup
from cambrian.core.rootsys import is_positive
from cambrian.errors import InfiniteParabolic, NoBoundedJoin


@pytest.fixture(scope="module")
def a1_group(a1_affine):
    return CoxeterGroup(a1_affine.cartan, a1_affine.d)


class TestElements:
    def test_generator_matches_reflection(self, a2, a2_group):
        """The generator matrix acts like s_i on roots."""
        for i in range(2):
            for root in [(1, 0), (0, 1), (1, 1), (-1, 0)]:
                assert a2_group.generator(i).image(root) == a2.reflect(root, i)

    def test_inverse_is_carried(self, a2_group):
        """w^{-1} w is the identity."""
        w = a2_group.element((0, 1))
        assert a2_group.multiply(a2_group.inverse(w), w) == a2_group.identity

    def test_reduced_words(self, a2_group):
        """Right descents are stripped smallest first."""
        assert a2_group.reduced_word(a2_group.element((0, 1))) == (0, 1)
        assert a2_group.reduced_word(a2_group.element((0, 1, 0))) == (0, 1, 0)
        assert a2_group.reduced_word(a2_group.element((0, 0))) == ()

    def test_braid_relation(self, a2_group):
        """s0 s1 s0 = s1 s0 s1 in A2."""
        assert a2_group.element((0, 1, 0)) == a2_group.element((1, 0, 1))

    def test_inversions(self, a2_group):
        """N(s0 s1) = {alpha_0, alpha_0 + alpha_1}."""
        assert a2_group.inversions(a2_group.element((0, 1))) == {(1, 0), (1, 1)}

    def test_cover_reflections(self, a2_group):
        """The only right descent of s0 s1 is 1, with root alpha_0 + alpha_1."""
        assert a2_group.cover_reflections(a2_group.element((0, 1))) == {1: (1, 1)}


class TestWeakOrder:
    def test_geq_s(self, a2_group):
        """s0 s1 lies above s0 but not above s1."""
        w = a2_group.element((0, 1))
        assert a2_group.geq_s(w, 0)
        assert not a2_group.geq_s(w, 1)
        assert a2_group.left_descents(w) == (0,)

    def test_weak_leq(self, a2_group):
        """Prefixes lie below."""
        w = a2_group.element((0, 1))
        assert a2_group.weak_leq(a2_group.element((0,)), w)
        assert not a2_group.weak_leq(a2_group.element((1,)), w)

    def test_join(self, a2_group):
        """s0 join s1 is the longest element."""
        join = a2_group.join_bounded(a2_group.generator(0), a2_group.generator(1), 3)
        assert join == a2_group.longest_element({0, 1})

    def test_unbounded_join(self, a1_group):
        """In affine A1 the simple reflections have no common upper bound."""
        with pytest.raises(NoBoundedJoin):
            a1_group.join_bounded(a1_group.generator(0), a1_group.generator(1), 6)

    def test_parabolic_projection(self, a2_group):
        """w0 projects to s0 on {0}; s0 s1 projects to the identity on {1}."""
        w0 = a2_group.longest_element({0, 1})
        assert a2_group.parabolic_project(w0, {0}) == a2_group.generator(0)
        assert a2_group.parabolic_project(a2_group.element((0, 1)), {1}) == a2_group.identity


class TestEnumeration:
    def test_longest_element(self, a2_group):
        """w0 of A2 has length 3 and inverts every positive root."""
        w0 = a2_group.longest_element({0, 1})
        assert a2_group.length(w0) == 3
        assert a2_group.inversions(w0) == {(1, 0), (0, 1), (1, 1)}

    def test_infinite_parabolic(self, a1_group):
        """Affine A1 has no longest element."""
        with pytest.raises(InfiniteParabolic):
            a1_group.longest_element({0, 1})

    def test_elements_up_to(self, a2_group, a1_group):
        """A2 has six elements; affine A1 has two per positive length."""
        assert len(a2_group.elements_up_to(5)) == 6
        assert len(a1_group.elements_up_to(3)) == 7

    def test_weight_action_identity(self, a2_group):
        """The identity fixes weights."""
        assert a2_group.act_on_weight(a2_group.identity, (1, -2)) == (1, -2)


@pytest.fixture(scope="module")
def g2_group(g2_affine):
    return CoxeterGroup(g2_affine.cartan, g2_affine.d)


class TestInversions:
    def test_count_is_length(self, g2_group):
        """|inv(w)| = l(w), every inversion a positive root."""
        for w in g2_group.elements_up_to(6):
            inversions = g2_group.inversions(w)
            assert len(inversions) == g2_group.length(w)
            assert all(is_positive(root) for root in inversions)

    def test_cover_removal(self, g2_group):
        """inv(ws) = inv(w) minus the cover root, for each right descent s."""
        for w in g2_group.elements_up_to(5):
            for s, root in g2_group.cover_reflections(w).items():
                below = g2_group.apply(w, s)
                assert g2_group.inversions(below) == g2_group.inversions(w) - {root}

    def test_parabolic_projection_keeps_parabolic_inversions(self, g2_group):
        """inv(w_J) is the part of inv(w) supported on J."""
        for J in combinations(range(3), 2):
            for w in g2_group.elements_up_to(5):
                inside = {r for r in g2_group.inversions(w) if all(r[i] == 0 for i in range(3) if i not in J)}
                projected = g2_group.parabolic_project(w, J)
                assert g2_group.inversions(projected) == inside
                assert g2_group.in_parabolic(projected, J)
