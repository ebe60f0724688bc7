"""Tests for forms, reflections, classification and the Phi0 split."""

import pytest

from cambrian.core.matrices import CartanType
from cambrian.core.rootsys import (
    affine_nonstandard_check,
    build,
    classify,
    generate_roots,
    is_positive,
    phi0_split,
    rank_two_subsystem,
)
from cambrian.core.sortable import coxeter_word
from cambrian.errors import NotAffine


class TestForms:
    @pytest.mark.parametrize("name", ["a2", "a1_affine", "g2_affine", "nonstandard", "indefinite"])
    def test_form_identities(self, name, request):
        """K = E + E^T and omega = E - E^T on simple roots, with the matrix entries recovered."""
        space = request.getfixturevalue(name)
        assert space.check_forms() == []

    def test_alignment_form_values(self, g2_affine):
        """omega(3a0v + a1v + 3a2v, a0 + 2a1) = 0 while K of the same pair is -2."""
        coroot = (3, 1, 3)
        gamma = (1, 2, 0)
        assert g2_affine.omega_form(coroot, gamma) == 0
        assert g2_affine.cartan_form(coroot, gamma) == -2

    def test_euler_form_on_simple_roots(self, a2):
        """E(a1v, a0) = b_10 = -1 and E(a0v, a1) = 0."""
        assert a2.euler_form((0, 1), (1, 0)) == -1
        assert a2.euler_form((1, 0), (0, 1)) == 0

    def test_coroot_of_short_root(self, nonstandard):
        """For A = [[2,-1],[-4,2]] the coroot of alpha_1 is 4 alpha_1."""
        assert nonstandard.coroot_in_roots((0, 1)) == (0, 4)
        assert nonstandard.coroot((0, 1)) == (0, 1)


class TestReflections:
    def test_reflection_is_involutive(self, g2_affine):
        """s_i s_i = id on roots."""
        for root in generate_roots(g2_affine, 5):
            for i in range(3):
                assert g2_affine.reflect(g2_affine.reflect(root, i), i) == root

    def test_simplified_affine_reflection(self, g2_affine):
        """x + K(theta^v, x)(delta - theta) equals the affine simple reflection."""
        s_aff = g2_affine.affine.s_aff
        for root in generate_roots(g2_affine, 6):
            assert g2_affine.simplified_saff_action(root) == g2_affine.reflect(root, s_aff)

    def test_a2_root_count(self, a2):
        """A2 has six roots."""
        assert len(generate_roots(a2, 5)) == 6

    def test_real_roots(self, g2_affine):
        """delta is imaginary; generated roots are real."""
        assert not g2_affine.is_real_root((2, 3, 1))
        assert all(g2_affine.is_real_root(r) for r in generate_roots(g2_affine, 4))


class TestClassify:
    def test_g2_affine_constants(self, g2_affine):
        """delta = 2a0 + 3a1 + a2 with affine node 2."""
        data = g2_affine.affine
        assert g2_affine.classification.kind == CartanType.AFFINE
        assert data.delta == (2, 3, 1)
        assert data.s_aff == 2
        assert data.S0 == (0, 1)
        assert data.theta == (2, 3, 0)

    def test_nonstandard_affine(self, nonstandard):
        """A = [[2,-1],[-4,2]]: delta = a0 + 2a1 and theta = a0."""
        data = nonstandard.affine
        assert data.delta == (1, 2)
        assert data.theta == (1, 0)

    def test_finite_and_indefinite(self, a2, indefinite):
        """A2 is finite; the 344 matrix is indefinite."""
        assert a2.classification.kind == CartanType.FINITE
        assert indefinite.classification.kind == CartanType.INDEFINITE
        with pytest.raises(NotAffine):
            indefinite.affine

    def test_classify_cartan_directly(self):
        """classify accepts a bare Cartan matrix."""
        assert classify([[2, -2], [-2, 2]]).kind == CartanType.AFFINE
        assert classify([[2, -3], [-3, 2]]).kind == CartanType.INDEFINITE

    def test_affine_data_from_cartan(self):
        """Nonstandard, transposed and standard affine A1 give their delta and theta."""
        data = affine_nonstandard_check([[2, -1], [-4, 2]])
        assert (data.delta, data.theta, data.s_aff) == ((1, 2), (1, 0), 1)
        assert affine_nonstandard_check([[2, -4], [-1, 2]]).delta == (2, 1)
        standard = affine_nonstandard_check([[2, -2], [-2, 2]])
        assert (standard.delta, standard.theta) == ((1, 1), (1, 0))
        with pytest.raises(NotAffine):
            affine_nonstandard_check([[2, -1], [-1, 2]])


class TestPhi0Split:
    def test_g2_split(self, g2_affine):
        """Plus and zero parts and x_c for the G2 affine example."""
        split = phi0_split(g2_affine)
        assert split.plus == {(2, 3, 0), (1, 1, 0), (1, 0, 0), (0, -1, 0), (-1, -3, 0)}
        assert split.zero == {(1, 2, 0), (-1, -2, 0)}
        assert split.xc_S0 == (-4, 6)
        assert split.violations(g2_affine) == []


class TestRankTwo:
    def test_finite_subsystem(self, a2):
        """A2 itself: three positive roots and a five-cycle."""
        sub = rank_two_subsystem(a2, (1, 0), (0, 1))
        assert sub.kind == CartanType.FINITE
        assert sub.positive_roots == {(1, 0), (0, 1), (1, 1)}
        assert sub.cycle_length == 5

    def test_affine_subsystem(self, a1_affine):
        """Affine A1 is its own affine rank-two subsystem."""
        sub = rank_two_subsystem(a1_affine, (1, 0), (0, 1))
        assert sub.kind == CartanType.AFFINE
        assert sub.cycle_length is None
        assert all(is_positive(r) for r in sub.positive_roots)

    def test_g2_block(self, g2_affine):
        """The G2 block has six positive roots and an eight-cycle."""
        sub = rank_two_subsystem(g2_affine, (1, 0, 0), (0, 1, 0))
        assert sub.kind == CartanType.FINITE
        assert len(sub.positive_roots) == 6
        assert sub.cycle_length == 8


class TestInvariance:
    @pytest.mark.parametrize("name", ["g2_affine", "nonstandard", "indefinite"])
    def test_symmetric_form_is_w_invariant(self, name, request):
        """K(s_i x, s_i y) = K(x, y) on generated roots."""
        space = request.getfixturevalue(name)
        roots = sorted(generate_roots(space, 4))
        for i in range(space.n):
            for x in roots:
                for y in roots:
                    assert space.K(space.reflect(x, i), space.reflect(y, i)) == space.K(x, y)

    @pytest.mark.parametrize("name", ["a2", "g2_affine", "nonstandard", "indefinite"])
    def test_omega_under_source_sink_mutation(self, name, request):
        """For s initial or final in c: omega_c(x, y) = omega_scs(sx, sy)."""
        space = request.getfixturevalue(name)
        c = coxeter_word(space)
        roots = sorted(generate_roots(space, 3))
        for s in set(c.initial_letters) | set(c.final_letters):
            rotated = build(space.B.mutate(s))
            for x in roots:
                for y in roots:
                    assert rotated.omega(space.reflect(x, s), space.reflect(y, s)) == space.omega(x, y)


class TestRootGeneration:
    def test_height_one_is_the_simple_roots(self, g2_affine):
        """Bound 1 gives exactly the simple roots and their negatives."""
        simple = set(g2_affine.simple_roots)
        assert generate_roots(g2_affine, 1) == simple | {tuple(-x for x in r) for r in simple}

    def test_nonstandard_heights(self, nonstandard):
        """Positive real roots of height at most 5 for A = [[2,-1],[-4,2]]."""
        positive = sorted(r for r in generate_roots(nonstandard, 5) if is_positive(r))
        assert positive == [(0, 1), (1, 0), (1, 1), (1, 3), (1, 4), (2, 3)]

    def test_zero_bound_is_rejected(self, a2):
        with pytest.raises(ValueError):
            generate_roots(a2, 0)
