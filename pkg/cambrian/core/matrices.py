"""Exact integer-matrix helpers shared by the root-system and exchange layers."""

import logging
from collections.abc import Iterable, Sequence
from enum import Enum
from fractions import Fraction
from math import gcd, lcm

import networkx as nx
import sympy

from cambrian.errors import CambrianError, MatrixParseError

logger = logging.getLogger(__name__)

IntMatrix = tuple[tuple[int, ...], ...]
IntVector = tuple[int, ...]


class CartanType(str, Enum):
    FINITE = "Finite"
    AFFINE = "Affine"
    INDEFINITE = "Indefinite"


def as_int_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """Freeze a square integer matrix, rejecting ragged or non-integer input."""
    n = len(rows)
    frozen = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise MatrixParseError(f"row {i} has {len(row)} entries, expected {n}", line=i + 1)
        values = []
        for j, entry in enumerate(row):
            if isinstance(entry, bool) or int(entry) != entry:
                raise MatrixParseError(f"entry ({i},{j}) is not an integer", line=i + 1, column=j + 1)
            values.append(int(entry))
        frozen.append(tuple(values))
    return tuple(frozen)


def solve_symmetrizer(
    entries: IntMatrix, *, skew: bool, error: type[CambrianError]
) -> IntVector:
    """
    Find the positive integer vector d with gcd 1 balancing the off-diagonal entries.

    Skew mode solves d_i b_ij = -d_j b_ji, Cartan mode solves d_i a_ij = d_j a_ji.
    Each connected block of the support graph is solved by propagating ratios
    along a BFS tree and then checked on every remaining edge.

    Args:
        entries: square integer matrix
        skew: choose the skew-symmetrizable balance instead of the symmetrizable one
        error: exception class raised when no positive solution exists

    Returns:
        Positive integers d with gcd 1
    """
    n = len(entries)
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    ratios: dict[tuple[int, int], Fraction] = {}
    for i in range(n):
        for j in range(i + 1, n):
            forward, backward = entries[i][j], entries[j][i]
            if forward == 0 and backward == 0:
                continue
            if forward == 0 or backward == 0:
                raise error(f"entries ({i},{j}) and ({j},{i}) must vanish together")
            ratio = Fraction(-forward, backward) if skew else Fraction(forward, backward)
            if ratio <= 0:
                raise error(f"entries ({i},{j}) and ({j},{i}) have an incompatible sign pattern")
            ratios[(i, j)] = ratio
            ratios[(j, i)] = 1 / ratio
            graph.add_edge(i, j)

    scale: list[Fraction] = [Fraction(0)] * n
    for component in nx.connected_components(graph):
        root = min(component)
        scale[root] = Fraction(1)
        for parent, child in nx.bfs_edges(graph, root):
            scale[child] = scale[parent] * ratios[(parent, child)]

    for (i, j), ratio in ratios.items():
        if scale[j] != scale[i] * ratio:
            raise error(f"cycle through ({i},{j}) has an inconsistent ratio product")

    return primitive(scale)


def primitive(vector: Iterable[Fraction | int]) -> IntVector:
    """Scale a rational vector by a positive factor to a primitive integer vector."""
    values = [Fraction(v) for v in vector]
    denominator = lcm(*(v.denominator for v in values)) if values else 1
    integers = [int(v * denominator) for v in values]
    divisor = gcd(*integers) if integers else 0
    if divisor == 0:
        return tuple(integers)
    return tuple(v // divisor for v in integers)


def to_fraction(value) -> Fraction:
    """Exact Fraction from an int, Fraction or sympy rational."""
    if isinstance(value, int | Fraction):
        return Fraction(value)
    return Fraction(int(value.p), int(value.q))


def integral(vector: Iterable) -> IntVector:
    """Convert an exactly integral rational vector to ints."""
    values = []
    for value in vector:
        rational = to_fraction(value)
        if rational.denominator != 1:
            raise ValueError(f"value {rational} is not integral")
        values.append(rational.numerator)
    return tuple(values)


def symmetrized(cartan: IntMatrix, d: IntVector) -> sympy.Matrix:
    """diag(d)·A as an exact sympy matrix."""
    n = len(cartan)
    return sympy.Matrix(n, n, lambda i, j: d[i] * cartan[i][j])


def principal_submatrix(matrix: IntMatrix, indices: Sequence[int]) -> IntMatrix:
    return tuple(tuple(matrix[i][j] for j in indices) for i in indices)


def is_positive_definite(form: sympy.Matrix) -> bool:
    """Sylvester's criterion on leading principal minors."""
    size = form.shape[0]
    return all(form[:k, :k].det() > 0 for k in range(1, size + 1))


def cartan_type(cartan: IntMatrix, d: IntVector, indices: Sequence[int] | None = None) -> CartanType:
    """
    Classify the principal block of a symmetrizable Cartan matrix.

    Affine means indecomposable affine: singular with every proper principal
    submatrix positive definite. Everything else that is not positive definite
    is reported as indefinite.
    """
    if indices is None:
        indices = range(len(cartan))
    indices = list(indices)
    if not indices:
        return CartanType.FINITE
    block = principal_submatrix(cartan, indices)
    weights = tuple(d[i] for i in indices)
    form = symmetrized(block, weights)
    if is_positive_definite(form):
        return CartanType.FINITE
    if form.det() == 0 and all(
        is_positive_definite(symmetrized(principal_submatrix(block, rest), rest_weights))
        for rest, rest_weights in _deletions(len(indices), weights)
    ):
        return CartanType.AFFINE
    return CartanType.INDEFINITE


def _deletions(size: int, weights: IntVector):
    for removed in range(size):
        rest = [k for k in range(size) if k != removed]
        yield rest, tuple(weights[k] for k in rest)


def kernel_vector(form: sympy.Matrix) -> IntVector:
    """The primitive kernel vector with positive entries of a corank-one form."""
    basis = form.nullspace()
    if len(basis) != 1:
        raise ValueError(f"expected a one-dimensional kernel, found dimension {len(basis)}")
    vector = primitive(to_fraction(entry) for entry in basis[0])
    if all(v <= 0 for v in vector):
        vector = tuple(-v for v in vector)
    if not all(v > 0 for v in vector):
        raise ValueError(f"kernel vector {vector} is not strictly positive")
    return vector


def determinant(rows: Sequence[Sequence[int]]) -> int:
    return int(sympy.Matrix(rows).det())


def inverse_columns(rows: Sequence[Sequence[int]]) -> list[tuple[Fraction, ...]]:
    """Columns of the exact inverse of an integer matrix."""
    n = len(rows)
    inverse = sympy.Matrix(rows).inv()
    return [
        tuple(to_fraction(inverse[i, j]) for i in range(n))
        for j in range(n)
    ]
