"""
Principal-coefficient cluster mutation.

Exchange matrices, extended matrices, seeds, g-vector mutation and the
truncated exchange graph. This side is computed without reference to Coxeter
combinatorics so that it can serve as the independent oracle in cross checks.
"""

import logging
from collections import deque
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from cambrian.cluster.laurent import Encoding, LaurentPolynomial, LaurentRing
from cambrian.config import get_settings
from cambrian.core.matrices import (
    IntMatrix,
    IntVector,
    as_int_matrix,
    solve_symmetrizer,
)
from cambrian.errors import NotAcyclic, NotEquivalent, NotSkewSymmetrizable, ResourceLimit

logger = logging.getLogger(__name__)


def _positive(value: int) -> int:
    return value if value > 0 else 0


def _sign(value: int) -> int:
    return (value > 0) - (value < 0)


def _mutate_rows(rows: IntMatrix, exchange_row: IntVector, e: int, top: bool) -> IntMatrix:
    """Apply the matrix mutation recurrence to a block of rows sharing column set I(v)."""
    mutated = []
    for p, row in enumerate(rows):
        new_row = []
        for q, entry in enumerate(row):
            if q == e or (top and p == e):
                new_row.append(-entry)
            else:
                pivot = row[e]
                new_row.append(entry + _sign(pivot) * _positive(pivot * exchange_row[q]))
        mutated.append(tuple(new_row))
    return tuple(mutated)


@dataclass(frozen=True)
class ExchangeMatrix:
    """A skew-symmetrizable integer matrix with its normalized symmetrizer."""

    entries: IntMatrix
    symmetrizer: IntVector

    @property
    def n(self) -> int:
        return len(self.entries)

    def column(self, j: int) -> IntVector:
        return tuple(row[j] for row in self.entries)

    @classmethod
    def from_cartan(cls, cartan: Sequence[Sequence[int]]) -> "ExchangeMatrix":
        """Orient a Cartan matrix linearly: b_ij = |a_ij| for i < j and -|a_ij| for i > j."""
        a = as_int_matrix(cartan)
        rows = [
            [0 if i == j else (abs(a[i][j]) if i < j else -abs(a[i][j])) for j in range(len(a))]
            for i in range(len(a))
        ]
        return validate(rows)

    @cached_property
    def cartan(self) -> IntMatrix:
        return cartan_companion(self)

    @cached_property
    def order(self) -> tuple[int, ...]:
        return is_acyclic(self)

    @property
    def acyclic(self) -> bool:
        try:
            self.order
        except NotAcyclic:
            return False
        return True

    def mutate(self, e: int) -> "ExchangeMatrix":
        return ExchangeMatrix(_mutate_rows(self.entries, self.entries[e], e, top=True), self.symmetrizer)

    def is_skew_symmetrized_by(self, d: IntVector) -> bool:
        return all(
            d[i] * self.entries[i][j] == -d[j] * self.entries[j][i]
            for i in range(self.n)
            for j in range(self.n)
        )


def validate(matrix: Sequence[Sequence[int]]) -> ExchangeMatrix:
    """
    Check skew-symmetrizability and attach the symmetrizer.

    Args:
        matrix: square integer matrix, rows indexed by i and columns by j

    Returns:
        ExchangeMatrix whose symmetrizer is a positive integer vector with gcd 1
    """
    entries = as_int_matrix(matrix)
    if not entries:
        raise NotSkewSymmetrizable("the matrix is empty")
    for i, row in enumerate(entries):
        if row[i] != 0:
            raise NotSkewSymmetrizable(f"diagonal entry ({i},{i}) is {row[i]}, expected 0")
    d = solve_symmetrizer(entries, skew=True, error=NotSkewSymmetrizable)
    logger.debug(f"Validated {len(entries)}x{len(entries)} exchange matrix, symmetrizer {d}")
    return ExchangeMatrix(entries, d)


def cartan_companion(B: ExchangeMatrix) -> IntMatrix:
    """a_ii = 2 and a_ij = -|b_ij| off the diagonal."""
    return tuple(
        tuple(2 if i == j else -abs(b) for j, b in enumerate(row)) for i, row in enumerate(B.entries)
    )


def is_acyclic(B: ExchangeMatrix) -> tuple[int, ...]:
    """
    Total order with i before j whenever b_ij > 0.

    Ties are broken by smallest index so the Coxeter element is deterministic.
    """
    digraph = nx.DiGraph()
    digraph.add_nodes_from(range(B.n))
    digraph.add_edges_from(
        (i, j) for i in range(B.n) for j in range(B.n) if B.entries[i][j] > 0
    )
    if not nx.is_directed_acyclic_graph(digraph):
        cycle = nx.find_cycle(digraph)
        raise NotAcyclic(f"orientation digraph has the cycle {cycle}")
    return tuple(nx.lexicographical_topological_sort(digraph))


@dataclass(frozen=True)
class ExtendedExchangeMatrix:
    """Exchange matrix B^v stacked over the coefficient block H^v."""

    top: IntMatrix
    bottom: IntMatrix

    @property
    def n(self) -> int:
        return len(self.top)

    def c_vector(self, q: int) -> IntVector:
        return tuple(row[q] for row in self.bottom)


def mutate_matrix(matrix: ExtendedExchangeMatrix, e: int) -> ExtendedExchangeMatrix:
    """Mutate every row of I(v) ⊔ J at column e."""
    exchange_row = matrix.top[e]
    return ExtendedExchangeMatrix(
        top=_mutate_rows(matrix.top, exchange_row, e, top=True),
        bottom=_mutate_rows(matrix.bottom, exchange_row, e, top=False),
    )


def g_vector_mutate(
    g: Sequence[IntVector], matrix: ExtendedExchangeMatrix, q: int, initial: ExchangeMatrix
) -> tuple[IntVector, ...]:
    """
    g'_q = -g_q + sum_p [-b_pq]+ g_p - sum_i [-h_iq]+ b_i, other vectors unchanged.

    b_i is column i of the initial exchange matrix, read as a weight vector.
    """
    n = matrix.n
    new = [-value for value in g[q]]
    for p in range(n):
        weight = _positive(-matrix.top[p][q])
        if weight:
            new = [a + weight * b for a, b in zip(new, g[p], strict=True)]
    for i in range(n):
        weight = _positive(-matrix.bottom[i][q])
        if weight:
            new = [a - weight * b for a, b in zip(new, initial.column(i), strict=True)]
    return tuple(tuple(new) if k == q else tuple(g[k]) for k in range(n))


@dataclass(frozen=True)
class Seed:
    matrix: ExtendedExchangeMatrix
    cluster: tuple[LaurentPolynomial, ...]
    gvectors: tuple[IntVector, ...]
    depth: int = 0
    path: tuple[int, ...] = ()

    @property
    def n(self) -> int:
        return self.matrix.n

    @cached_property
    def key(self) -> tuple[Encoding, ...]:
        """Class key: the sorted cluster-variable encodings."""
        return tuple(sorted(x.encoding for x in self.cluster))


def principal_seed(B: ExchangeMatrix) -> Seed:
    """Initial seed with H = identity and g-vectors the fundamental weights."""
    n = B.n
    base = LaurentRing(n)
    identity = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    return Seed(
        matrix=ExtendedExchangeMatrix(top=B.entries, bottom=identity),
        cluster=tuple(base.x(i) for i in range(n)),
        gvectors=identity,
    )


def mutate_seed(seed: Seed, e: int, initial: ExchangeMatrix) -> Seed:
    """
    Exchange x_e for (prod x_p^[b_pe]+ + prod x_p^[-b_pe]+) / x_e, p over I(v) ⊔ J.
    """
    base = seed.cluster[0].base
    n = seed.n
    top, bottom = seed.matrix.top, seed.matrix.bottom
    plus = base.monomial((0,) * n, tuple(_positive(bottom[i][e]) for i in range(n)))
    minus = base.monomial((0,) * n, tuple(_positive(-bottom[i][e]) for i in range(n)))
    for p in range(n):
        if top[p][e] > 0:
            plus = plus * seed.cluster[p] ** top[p][e]
        elif top[p][e] < 0:
            minus = minus * seed.cluster[p] ** (-top[p][e])
    exchanged = (plus + minus).exact_divide(seed.cluster[e])
    logger.debug(f"Mutation at {e} along {seed.path}: x'_{e} = {exchanged}")
    return Seed(
        matrix=mutate_matrix(seed.matrix, e),
        cluster=tuple(exchanged if k == e else x for k, x in enumerate(seed.cluster)),
        gvectors=g_vector_mutate(seed.gvectors, seed.matrix, e, initial),
        depth=seed.depth + 1,
        path=seed.path + (e,),
    )


def c_vectors(seed: Seed) -> tuple[IntVector, ...]:
    """Columns of H^v in simple-root coordinates."""
    return tuple(seed.matrix.c_vector(q) for q in range(seed.n))


def grading_degree(x: LaurentPolynomial, initial: ExchangeMatrix) -> IntVector:
    """Degree under deg(x_i) = rho_i and deg(y_j) = -b_j."""
    n = initial.n
    x_degrees = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    y_degrees = [tuple(-b for b in initial.column(j)) for j in range(n)]
    return x.multidegree(x_degrees, y_degrees)


def seeds_equivalent(first: Seed, second: Seed) -> tuple[int, ...]:
    """
    Column bijection lambda with second[lambda[q]] matching first[q], or NotEquivalent.

    Columns are matched through cluster-variable encodings; exchange-matrix
    entries and coefficient columns are then required to agree under lambda.
    """
    if first.n != second.n:
        raise NotEquivalent("seeds have different rank")
    positions = {x.encoding: k for k, x in enumerate(second.cluster)}
    bijection = []
    for q, x in enumerate(first.cluster):
        if x.encoding not in positions:
            raise NotEquivalent(f"cluster variable {x} of column {q} has no partner")
        bijection.append(positions[x.encoding])
    if len(set(bijection)) != first.n:
        raise NotEquivalent("cluster variables repeat")
    n = first.n
    for p in range(n):
        for q in range(n):
            if first.matrix.top[p][q] != second.matrix.top[bijection[p]][bijection[q]]:
                raise NotEquivalent(f"exchange entry ({p},{q}) disagrees under {bijection}")
        if first.matrix.c_vector(p) != second.matrix.c_vector(bijection[p]):
            raise NotEquivalent(f"coefficient column {p} disagrees under {bijection}")
    return tuple(bijection)


@dataclass(frozen=True)
class ExchangeEdge:
    source: int
    column: int
    target: int
    target_column: int
    bijection: tuple[int, ...]  # columns of source -> columns of target


@dataclass
class ExchangeGraphSlice:
    """Seed classes reached within a mutation-depth bound."""

    initial: ExchangeMatrix
    depth: int
    seeds: list[Seed] = field(default_factory=list)
    edges: dict[tuple[int, int], ExchangeEdge] = field(default_factory=dict)

    @property
    def frontier(self) -> set[int]:
        return {k for k, seed in enumerate(self.seeds) if seed.depth >= self.depth}

    def neighbor(self, node: int, column: int) -> ExchangeEdge | None:
        return self.edges.get((node, column))

    def iter_edges(self) -> Iterator[ExchangeEdge]:
        for key in sorted(self.edges):
            yield self.edges[key]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for k, seed in enumerate(self.seeds):
            graph.add_node(k, depth=seed.depth)
        for edge in self.iter_edges():
            graph.add_edge(edge.source, edge.target)
        return graph


def exchange_graph(
    B: ExchangeMatrix, depth: int, node_cap: int | None = None
) -> ExchangeGraphSlice:
    """
    Breadth-first mutation from the principal seed, merging equivalent seeds.

    Args:
        B: initial exchange matrix
        depth: classes at this distance are recorded but not expanded
        node_cap: maximal number of classes; defaults to the NODE_CAP setting

    Returns:
        ExchangeGraphSlice with per-class seeds and labelled edges
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    cap = node_cap if node_cap is not None else get_settings().NODE_CAP
    graph = ExchangeGraphSlice(initial=B, depth=depth)
    start = principal_seed(B)
    graph.seeds.append(start)
    index = {start.key: 0}
    queue = deque([0])

    while queue:
        node = queue.popleft()
        seed = graph.seeds[node]
        if seed.depth >= depth:
            continue
        for e in range(B.n):
            if (node, e) in graph.edges:
                continue
            mutated = mutate_seed(seed, e, B)
            target = index.get(mutated.key)
            if target is None:
                target = len(graph.seeds)
                if target >= cap:
                    raise ResourceLimit(f"exchange graph exceeded {cap} classes at depth {mutated.depth}")
                graph.seeds.append(mutated)
                index[mutated.key] = target
                queue.append(target)
                bijection = tuple(range(B.n))
            else:
                bijection = seeds_equivalent(mutated, graph.seeds[target])
            graph.edges[(node, e)] = ExchangeEdge(node, e, target, bijection[e], bijection)

    logger.info(
        f"Exchange graph to depth {depth}: {len(graph.seeds)} classes, "
        f"{len(graph.edges)} directed edges, {len(graph.frontier)} frontier"
    )
    return graph
