"""Tests for principal-coefficient mutation and the exchange graph."""

import random

import pytest

from cambrian.cluster.exchange import (
    ExchangeMatrix,
    c_vectors,
    cartan_companion,
    exchange_graph,
    grading_degree,
    is_acyclic,
    mutate_matrix,
    mutate_seed,
    principal_seed,
    seeds_equivalent,
    validate,
)
from cambrian.errors import NotAcyclic, NotEquivalent, NotSkewSymmetrizable


@pytest.fixture
def a2_matrix():
    return validate([[0, 1], [-1, 0]])


@pytest.fixture
def a1_matrix():
    return validate([[0, 2], [-2, 0]])


class TestValidate:
    def test_symmetrizer_is_normalized(self):
        """The symmetrizer is a positive integer vector with gcd 1."""
        B = validate([[0, 1, 1], [-3, 0, 0], [-1, 0, 0]])
        assert B.symmetrizer == (3, 1, 3)
        assert B.is_skew_symmetrized_by(B.symmetrizer)

    def test_rejects_nonzero_diagonal(self):
        """Diagonal entries must vanish."""
        with pytest.raises(NotSkewSymmetrizable):
            validate([[1, 1], [-1, 0]])

    def test_rejects_sign_mismatch(self):
        """b_ij and b_ji must have opposite signs."""
        with pytest.raises(NotSkewSymmetrizable):
            validate([[0, 1], [1, 0]])

    def test_from_cartan_orients_linearly(self):
        """Cartan input gets b_ij = |a_ij| above the diagonal."""
        B = ExchangeMatrix.from_cartan([[2, -1], [-4, 2]])
        assert B.entries == ((0, 1), (-4, 0))
        assert B.symmetrizer == (4, 1)


class TestCompanionAndOrder:
    def test_cartan_companion(self):
        """a_ii = 2 and a_ij = -|b_ij|."""
        B = validate([[0, -1, -2], [1, 0, -2], [1, 1, 0]])
        assert cartan_companion(B) == ((2, -1, -2), (-1, 2, -2), (-1, -1, 2))

    def test_acyclic_order(self, a2_matrix):
        """Sources come first."""
        assert is_acyclic(a2_matrix) == (0, 1)
        assert is_acyclic(validate([[0, -1], [1, 0]])) == (1, 0)

    def test_cycle_is_rejected(self):
        """An oriented 3-cycle has no acyclic order."""
        with pytest.raises(NotAcyclic):
            is_acyclic(validate([[0, 1, -1], [-1, 0, 1], [1, -1, 0]]))


class TestMutation:
    def test_matrix_mutation_is_involutive(self, a1_matrix):
        """Mutating twice at the same index restores the extended matrix."""
        seed = principal_seed(a1_matrix)
        twice = mutate_matrix(mutate_matrix(seed.matrix, 1), 1)
        assert twice == seed.matrix

    def test_a2_c_vectors_after_one_mutation(self, a2_matrix):
        """After mutating A2 at 0 the c-vectors are -alpha_0 and alpha_0 + alpha_1."""
        seed = mutate_seed(principal_seed(a2_matrix), 0, a2_matrix)
        assert c_vectors(seed) == ((-1, 0), (1, 1))
        assert seed.matrix.top == ((0, -1), (1, 0))

    def test_a1_c_vectors_after_two_mutations(self, a1_matrix):
        """Affine A1: mutations (0, 1) give c-vectors 3a0 + 2a1 and -2a0 - a1."""
        seed = principal_seed(a1_matrix)
        seed = mutate_seed(seed, 0, a1_matrix)
        assert c_vectors(seed) == ((-1, 0), (2, 1))
        seed = mutate_seed(seed, 1, a1_matrix)
        assert c_vectors(seed) == ((3, 2), (-2, -1))

    def test_exchange_relation(self, a2_matrix):
        """x'_0 = (y_0 + x_1) / x_0."""
        initial = principal_seed(a2_matrix)
        base = initial.cluster[0].base
        seed = mutate_seed(initial, 0, a2_matrix)
        expected = (base.y(0) + base.x(1)).exact_divide(base.x(0))
        assert seed.cluster[0] == expected
        assert seed.cluster[1] == initial.cluster[1]

    def test_g_vector_matches_grading(self, a1_matrix):
        """The recurrence g-vector equals the multidegree of the new variable."""
        seed = principal_seed(a1_matrix)
        for e in (0, 1, 0, 1):
            seed = mutate_seed(seed, e, a1_matrix)
            assert grading_degree(seed.cluster[e], a1_matrix) == seed.gvectors[e]

    def test_mutation_back_is_equivalent(self, a2_matrix):
        """mu_e mu_e returns to an equivalent seed with the identity bijection."""
        initial = principal_seed(a2_matrix)
        back = mutate_seed(mutate_seed(initial, 1, a2_matrix), 1, a2_matrix)
        assert seeds_equivalent(back, initial) == (0, 1)

    def test_different_seeds_are_not_equivalent(self, a2_matrix):
        """Seeds with different clusters have no bijection."""
        initial = principal_seed(a2_matrix)
        with pytest.raises(NotEquivalent):
            seeds_equivalent(mutate_seed(initial, 0, a2_matrix), initial)


class TestExchangeGraph:
    def test_a2_has_five_classes(self, a2_matrix):
        """The A2 exchange graph is a pentagon."""
        graph = exchange_graph(a2_matrix, 7)
        assert len(graph.seeds) == 5
        assert len(graph.edges) == 10
        assert graph.frontier == set()

    def test_every_explored_node_has_n_edges(self, a1_matrix):
        """Non-frontier classes have one edge per column."""
        graph = exchange_graph(a1_matrix, 4)
        for node in range(len(graph.seeds)):
            if node not in graph.frontier:
                assert graph.neighbor(node, 0) is not None
                assert graph.neighbor(node, 1) is not None

    def test_affine_a1_is_a_path(self, a1_matrix):
        """Affine A1 grows two classes per depth step."""
        graph = exchange_graph(a1_matrix, 4)
        assert len(graph.seeds) == 9
        assert len(graph.frontier) == 2

    def test_networkx_export(self, a2_matrix):
        """The undirected export is a 5-cycle."""
        graph = exchange_graph(a2_matrix, 7).to_networkx()
        assert graph.number_of_nodes() == 5
        assert all(degree == 2 for _, degree in graph.degree())


G2_AFFINE = [[0, 1, 1], [-3, 0, 0], [-1, 0, 0]]
INDEFINITE_344 = [[0, -1, -2], [1, 0, -2], [1, 1, 0]]


class TestRandomMutations:
    @pytest.mark.parametrize("entries, steps", [(G2_AFFINE, 12), (INDEFINITE_344, 7)])
    @pytest.mark.parametrize("seed_value", [1, 2, 3])
    def test_skew_symmetrizable_and_sign_coherent(self, entries, steps, seed_value):
        """Every seed along a seeded random mutation sequence keeps both properties."""
        B = validate(entries)
        rng = random.Random(seed_value)
        seed = principal_seed(B)
        previous = None
        for _ in range(steps):
            e = rng.choice([k for k in range(B.n) if k != previous])
            seed = mutate_seed(seed, e, B)
            previous = e
            assert ExchangeMatrix(seed.matrix.top, B.symmetrizer).is_skew_symmetrized_by(B.symmetrizer)
            for vector in c_vectors(seed):
                assert all(x >= 0 for x in vector) or all(x <= 0 for x in vector), seed.path


class TestGrading:
    @pytest.mark.parametrize(
        "entries",
        [[[0, 1], [-1, 0]], [[0, 2], [-2, 0]], [[0, 1], [-4, 0]], [[0, 1, 0], [-1, 0, 1], [0, -1, 0]]],
    )
    def test_g_vectors_to_depth_eight(self, entries):
        """Each cluster variable of each class has its g-vector as multidegree."""
        B = validate(entries)
        for seed in exchange_graph(B, 8).seeds:
            for e, x in enumerate(seed.cluster):
                assert grading_degree(x, B) == seed.gvectors[e], seed.path

    @pytest.mark.slow
    def test_affine_g2_to_depth_eight(self):
        B = validate(G2_AFFINE)
        for seed in exchange_graph(B, 8).seeds:
            for e, x in enumerate(seed.cluster):
                assert grading_degree(x, B) == seed.gvectors[e], seed.path


class TestPentagon:
    def test_five_alternating_mutations(self, a2_matrix):
        """mu_0 mu_1 mu_0 mu_1 mu_0 returns the principal seed with the columns swapped."""
        initial = principal_seed(a2_matrix)
        seed = initial
        for e in (0, 1, 0, 1, 0):
            seed = mutate_seed(seed, e, a2_matrix)
        assert seeds_equivalent(seed, initial) == (1, 0)
        assert seed.key == initial.key

    def test_four_mutations_do_not_close(self, a2_matrix):
        seed = principal_seed(a2_matrix)
        for e in (0, 1, 0, 1):
            seed = mutate_seed(seed, e, a2_matrix)
        with pytest.raises(NotEquivalent):
            seeds_equivalent(seed, principal_seed(a2_matrix))
