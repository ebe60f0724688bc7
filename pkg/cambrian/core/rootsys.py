"""
Root-system substrate for an acyclic exchange matrix.

Roots are integer vectors in the simple-root basis, coroots are integer vectors
in the simple-coroot basis and weights are rational vectors in the basis of
fundamental weights rho_i (dual to the simple coroots). With the scaled
symmetrizer d' = d / max(d) the pairings read

    <x, alpha_j>     = d'_j x_j
    <x, alpha_j^v>   = x_j
    form(x, y)       = sum_ij x_i d'_i F_ij y_j      (roots x, y)
    form(x^v, y)     = sum_ij x_i F_ij y_j           (coroot x, root y)

for F one of the Cartan matrix A, the exchange matrix B or the Euler matrix E.
"""

import logging
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import sympy

from cambrian.cluster.exchange import ExchangeMatrix
from cambrian.config import get_settings
from cambrian.core.matrices import (
    CartanType,
    IntMatrix,
    IntVector,
    as_int_matrix,
    cartan_type,
    kernel_vector,
    solve_symmetrizer,
    symmetrized,
)
from cambrian.errors import DependentRoots, NotAcyclic, NotAffine, NotSymmetrizable

logger = logging.getLogger(__name__)

Root = tuple[int, ...]
Weight = tuple[Fraction, ...]


def height(root: Sequence[int]) -> int:
    return sum(abs(v) for v in root)


def is_positive(root: Sequence[int]) -> bool:
    return any(v > 0 for v in root) and all(v >= 0 for v in root)


def is_negative(root: Sequence[int]) -> bool:
    return any(v < 0 for v in root) and all(v <= 0 for v in root)


def negate(root: Sequence[int]) -> Root:
    return tuple(-v for v in root)


def positive_part(root: Sequence[int]) -> Root:
    """The positive root among root and -root."""
    return negate(root) if is_negative(root) else tuple(root)


def unit(n: int, i: int) -> Root:
    return tuple(1 if k == i else 0 for k in range(n))


def _bilinear(x: Sequence, matrix: IntMatrix, y: Sequence, weights: Sequence | None = None):
    total = 0
    for i, xi in enumerate(x):
        if not xi:
            continue
        row_total = sum(entry * yj for entry, yj in zip(matrix[i], y, strict=True))
        total += xi * row_total * (weights[i] if weights is not None else 1)
    return total


@dataclass(frozen=True)
class AffineData:
    delta: Root
    s_aff: int
    S0: tuple[int, ...]
    theta: Root
    phi0: frozenset[Root]


@dataclass(frozen=True)
class Classification:
    kind: CartanType
    symmetrizer: IntVector
    affine: AffineData | None = None


@dataclass(frozen=True)
class Phi0Split:
    plus: frozenset[Root]
    zero: frozenset[Root]
    minus: frozenset[Root]
    xc: IntVector  # full fundamental-weight coordinates, a point of delta-perp
    xc_S0: IntVector  # restriction to V0*, indexed by S0

    def violations(self, space: "RootSpace") -> list[str]:
        """Structural facts every split must satisfy; empty when all hold."""
        problems = []
        if not self.plus or not self.minus:
            problems.append("plus or minus part is empty")
        if {negate(r) for r in self.plus} != set(self.minus):
            problems.append("plus is not the negation of minus")
        rank = sympy.Matrix([list(r) for r in self.zero]).rank() if self.zero else 0
        if rank != space.n - 2:
            problems.append(f"span of the zero part has dimension {rank}, expected {space.n - 2}")
        if any(space.pair(self.xc, r) != 0 for r in self.zero):
            problems.append("x_c does not annihilate the zero part")
        if not any(self.xc_S0):
            problems.append("x_c is zero")
        return problems


@dataclass(frozen=True)
class RankTwoSubsystem:
    canonical: tuple[Root, Root]
    kind: CartanType
    product: int  # K(beta^v, gamma) K(gamma^v, beta)
    positive_roots: frozenset[Root]  # complete when finite, truncated otherwise

    @property
    def cycle_length(self) -> int | None:
        """Vertices on the rank-two cycle of a finite subsystem."""
        if self.kind != CartanType.FINITE:
            return None
        return len(self.positive_roots) + 2


class RootSpace:
    """Forms, reflections and root data attached to an exchange matrix."""

    def __init__(self, B: ExchangeMatrix):
        self.B = B
        self.n = B.n
        self.cartan: IntMatrix = B.cartan
        self.d: IntVector = B.symmetrizer
        top = max(self.d)
        self.scale: tuple[Fraction, ...] = tuple(Fraction(di, top) for di in self.d)
        self.euler: IntMatrix = tuple(
            tuple(1 if i == j else min(b, 0) for j, b in enumerate(row))
            for i, row in enumerate(B.entries)
        )

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(unit(self.n, i) for i in range(self.n))

    @property
    def simple_coroots(self) -> tuple[Root, ...]:
        return self.simple_roots

    # Forms with a coroot in the first slot and a root in the second.

    def cartan_form(self, coroot: Sequence[int], root: Sequence) -> Fraction:
        return Fraction(_bilinear(coroot, self.cartan, root))

    def omega_form(self, coroot: Sequence[int], root: Sequence) -> Fraction:
        return Fraction(_bilinear(coroot, self.B.entries, root))

    def euler_form(self, coroot: Sequence[int], root: Sequence) -> Fraction:
        return Fraction(_bilinear(coroot, self.euler, root))

    # Forms on two roots.

    def K(self, x: Sequence, y: Sequence) -> Fraction:
        return Fraction(_bilinear(x, self.cartan, y, self.scale))

    def omega(self, x: Sequence, y: Sequence) -> Fraction:
        return Fraction(_bilinear(x, self.B.entries, y, self.scale))

    def E(self, x: Sequence, y: Sequence) -> Fraction:
        return Fraction(_bilinear(x, self.euler, y, self.scale))

    def coroot(self, root: Sequence[int]) -> Root:
        """Coordinates of 2 beta / K(beta, beta) in the simple-coroot basis."""
        norm = self.K(root, root)
        if norm <= 0:
            raise ValueError(f"{tuple(root)} is not a real root")
        coords = [2 * v * self.scale[i] / norm for i, v in enumerate(root)]
        if any(c.denominator != 1 for c in coords):
            raise ValueError(f"coroot of {tuple(root)} is not integral: {coords}")
        return tuple(c.numerator for c in coords)

    def coroot_in_roots(self, root: Sequence[int]) -> Weight:
        """2 beta / K(beta, beta) in simple-root coordinates."""
        norm = self.K(root, root)
        return tuple(2 * Fraction(v) / norm for v in root)

    def reflect(self, root: Sequence[int], i: int) -> Root:
        """s_i(beta) = beta - K(alpha_i^v, beta) alpha_i."""
        pairing = sum(a * b for a, b in zip(self.cartan[i], root, strict=True))
        return tuple(v - pairing if k == i else v for k, v in enumerate(root))

    def reflect_in(self, root: Sequence[int], vector: Sequence[int]) -> Root:
        """t_beta(x) = x - K(beta^v, x) beta for a real root beta."""
        pairing = self.cartan_form(self.coroot(root), vector)
        return tuple(int(x - pairing * b) for x, b in zip(vector, root, strict=True))

    # Weights.

    def pair(self, weight: Sequence, root: Sequence) -> Fraction:
        return sum((Fraction(x) * s * y for x, s, y in zip(weight, self.scale, root, strict=True)), Fraction(0))

    def pair_coroot(self, weight: Sequence, coroot: Sequence) -> Fraction:
        return sum((Fraction(x) * c for x, c in zip(weight, coroot, strict=True)), Fraction(0))

    def reflect_weight(self, weight: Sequence, i: int) -> Weight:
        """(s_i x)_j = x_j - a_ji x_i."""
        xi = Fraction(weight[i])
        return tuple(Fraction(x) - self.cartan[j][i] * xi for j, x in enumerate(weight))

    def reduce_to_chamber(self, weight: Sequence, cap: int | None = None) -> tuple[tuple[int, ...], Weight] | None:
        """
        Move a weight into the dominant chamber D by simple reflections.

        Returns (word, image) or None when the cap is reached, which for
        weights outside the Tits cone is the only possible outcome.
        """
        cap = cap if cap is not None else get_settings().TITS_REDUCTION_CAP
        current = tuple(Fraction(x) for x in weight)
        word: list[int] = []
        for _ in range(cap):
            negative = [i for i, x in enumerate(current) if x < 0]
            if not negative:
                return tuple(word), current
            word.append(negative[0])
            current = self.reflect_weight(current, negative[0])
        return None

    def in_tits_cone(self, weight: Sequence, cap: int | None = None) -> bool:
        if not any(weight):
            return True
        return self.reduce_to_chamber(weight, cap) is not None

    # Roots.

    def is_real_root(self, vector: Sequence[int]) -> bool:
        x = tuple(vector)
        if is_negative(x):
            x = negate(x)
        if not is_positive(x):
            return False
        while True:
            if height(x) == 1:
                return True
            ascending = [i for i in range(self.n) if sum(a * b for a, b in zip(self.cartan[i], x)) > 0]
            if not ascending:
                return False
            x = self.reflect(x, ascending[0])
            if not is_positive(x):
                return False

    @cached_property
    def classification(self) -> Classification:
        return _classify(self.cartan, self.d)

    @property
    def affine(self) -> AffineData:
        data = self.classification.affine
        if data is None:
            raise NotAffine(f"Cartan companion is {self.classification.kind.value}")
        return data

    @property
    def order(self) -> tuple[int, ...]:
        """Acyclic order of B; raises NotAcyclic for cyclic quivers."""
        return self.B.order

    def weight_delta_sign(self, weight: Sequence) -> int:
        """Sign of <x, delta>."""
        delta = self.affine.delta
        total = sum(Fraction(x) * di * dl for x, di, dl in zip(weight, self.d, delta, strict=True))
        return (total > 0) - (total < 0)

    def simplified_saff_action(self, vector: Sequence[int]) -> Root:
        """s_aff(x) = x + K(theta^v, x)(delta - theta)."""
        data = self.affine
        pairing = self.cartan_form(self.coroot(data.theta), vector)
        return tuple(
            int(x + pairing * (dl - th))
            for x, dl, th in zip(vector, data.delta, data.theta, strict=True)
        )

    def check_forms(self) -> list[str]:
        """Identities between K, omega and E on the simple roots; empty when all hold."""
        problems = []
        roots = self.simple_roots
        for i, a in enumerate(roots):
            for j, b in enumerate(roots):
                if self.cartan_form(a, b) != self.cartan[i][j]:
                    problems.append(f"K(alpha_{i}^v, alpha_{j}) != a_{i}{j}")
                if self.omega_form(a, b) != self.B.entries[i][j]:
                    problems.append(f"omega(alpha_{i}^v, alpha_{j}) != b_{i}{j}")
                if self.K(a, b) != self.K(b, a):
                    problems.append(f"K not symmetric on ({i},{j})")
                if self.omega(a, b) != -self.omega(b, a):
                    problems.append(f"omega not skew on ({i},{j})")
                if self.K(a, b) != self.E(a, b) + self.E(b, a):
                    problems.append(f"K != E + E^T on ({i},{j})")
                if self.omega(a, b) != self.E(a, b) - self.E(b, a):
                    problems.append(f"omega != E - E^T on ({i},{j})")
        return problems


def build(B: ExchangeMatrix) -> RootSpace:
    """Root space of B. The Cambrian constructors additionally need B acyclic."""
    space = RootSpace(B)
    logger.debug(f"Root space of rank {space.n}, symmetrizer {space.d}")
    return space


def generate_roots(space: RootSpace, height_bound: int) -> frozenset[Root]:
    """Real roots of height at most the bound, with their negatives."""
    if height_bound < 1:
        raise ValueError("height bound must be at least 1")
    found = set(space.simple_roots)
    queue = deque(space.simple_roots)
    while queue:
        root = queue.popleft()
        for i in range(space.n):
            image = space.reflect(root, i)
            if image in found or not is_positive(image) or height(image) > height_bound:
                continue
            found.add(image)
            queue.append(image)
    return frozenset(found | {negate(r) for r in found})


def finite_closure(space_or_cartan, indices: Iterable[int], n: int | None = None) -> frozenset[Root]:
    """All roots of the finite parabolic on the given indices (closure under its reflections)."""
    cartan = space_or_cartan.cartan if isinstance(space_or_cartan, RootSpace) else space_or_cartan
    n = n if n is not None else len(cartan)
    indices = tuple(indices)
    start = [unit(n, i) for i in indices] + [negate(unit(n, i)) for i in indices]
    found = set(start)
    queue = deque(start)
    while queue:
        root = queue.popleft()
        for i in indices:
            pairing = sum(a * b for a, b in zip(cartan[i], root))
            image = tuple(v - pairing if k == i else v for k, v in enumerate(root))
            if image not in found:
                found.add(image)
                queue.append(image)
    return frozenset(found)


def _affine_data(cartan: IntMatrix, d: IntVector) -> AffineData:
    n = len(cartan)
    delta = kernel_vector(symmetrized(cartan, d))
    for s_aff in reversed(range(n)):
        S0 = tuple(i for i in range(n) if i != s_aff)
        if cartan_type(cartan, d, S0) != CartanType.FINITE:
            continue
        theta = tuple(0 if i == s_aff else delta[i] for i in range(n))
        phi0 = finite_closure(cartan, S0, n)
        if theta in phi0:
            return AffineData(delta=delta, s_aff=s_aff, S0=S0, theta=theta, phi0=phi0)
    raise NotAffine("no affine node with a valid theta")


def _classify(cartan: IntMatrix, d: IntVector) -> Classification:
    kind = cartan_type(cartan, d)
    affine = _affine_data(cartan, d) if kind == CartanType.AFFINE else None
    logger.debug(f"Classified Cartan matrix {cartan} as {kind.value}")
    return Classification(kind=kind, symmetrizer=d, affine=affine)


def classify(cartan: Sequence[Sequence[int]]) -> Classification:
    """
    Finite, affine or indefinite type of a symmetrizable Cartan matrix.

    Affine results carry delta, the affine node (largest valid index), S0,
    theta and the finite root system on S0.
    """
    a = as_int_matrix(cartan)
    for i, row in enumerate(a):
        if row[i] != 2:
            raise NotSymmetrizable(f"diagonal entry ({i},{i}) is {row[i]}, expected 2")
    d = solve_symmetrizer(a, skew=False, error=NotSymmetrizable)
    return _classify(a, d)


def affine_nonstandard_check(cartan: Sequence[Sequence[int]]) -> AffineData:
    """Affine data of a Cartan matrix, raising NotAffine for other types."""
    classification = classify(cartan)
    if classification.affine is None:
        raise NotAffine(f"Cartan matrix is {classification.kind.value}")
    return classification.affine


def phi0_split(space: RootSpace) -> Phi0Split:
    """Partition the finite root system on S0 by the sign of omega(beta, delta)."""
    if not space.B.acyclic:
        raise NotAcyclic("the Phi0 split needs an acyclic exchange matrix")
    data = space.affine
    b_delta = [sum(b * dl for b, dl in zip(row, data.delta)) for row in space.B.entries]
    plus, zero, minus = set(), set(), set()
    for root in data.phi0:
        value = sum(r * di * bd for r, di, bd in zip(root, space.d, b_delta))
        (plus if value > 0 else zero if value == 0 else minus).add(root)
    xc = tuple(-v for v in b_delta)
    split = Phi0Split(
        plus=frozenset(plus),
        zero=frozenset(zero),
        minus=frozenset(minus),
        xc=xc,
        xc_S0=tuple(xc[i] for i in data.S0),
    )
    for problem in split.violations(space):
        logger.warning(f"Phi0 split: {problem}")
    return split


def plane_coordinates(beta: Root, gamma: Root, vector: Root) -> tuple[Fraction, Fraction] | None:
    """(a, b) with vector = a beta + b gamma, or None off the plane."""
    n = len(beta)
    for i in range(n):
        for j in range(i + 1, n):
            det = beta[i] * gamma[j] - beta[j] * gamma[i]
            if det:
                a = Fraction(vector[i] * gamma[j] - vector[j] * gamma[i], det)
                b = Fraction(beta[i] * vector[j] - beta[j] * vector[i], det)
                if all(a * beta[k] + b * gamma[k] == vector[k] for k in range(n)):
                    return a, b
                return None
    raise DependentRoots(f"{beta} and {gamma} are linearly dependent")


def rank_two_subsystem(
    space: RootSpace, beta: Root, gamma: Root, bound: int | None = None, roots: Iterable[Root] | None = None
) -> RankTwoSubsystem:
    """
    The generalized rank-two subsystem through two independent positive roots.

    Canonical roots are the two extreme positive roots of the plane. The type
    comes from the product of the off-diagonal Cartan pairings of the canonical
    roots; finite subsystems are closed under their two reflections.
    """
    bound = bound if bound is not None else 2 * (height(beta) + height(gamma))
    pool = roots if roots is not None else generate_roots(space, bound)
    plane = []
    for root in pool:
        if not is_positive(root):
            continue
        coords = plane_coordinates(beta, gamma, root)
        if coords is not None:
            plane.append((root, coords))

    def cross(u, v):
        return u[0] * v[1] - u[1] * v[0]

    first = next(r for r, c in plane if all(cross(c, other) >= 0 for _, other in plane))
    second = next(r for r, c in plane if all(cross(c, other) <= 0 for _, other in plane))
    product = int(
        space.cartan_form(space.coroot(first), second) * space.cartan_form(space.coroot(second), first)
    )
    if product < 4:
        kind = CartanType.FINITE
        positive = set()
        queue = deque([first, second])
        while queue:
            root = queue.popleft()
            if root in positive:
                continue
            positive.add(root)
            for reflection in (first, second):
                image = space.reflect_in(reflection, root)
                if is_positive(image) and image not in positive:
                    queue.append(image)
        positives = frozenset(positive)
    else:
        kind = CartanType.AFFINE if product == 4 else CartanType.INDEFINITE
        positives = frozenset(r for r, _ in plane)
    return RankTwoSubsystem(canonical=(first, second), kind=kind, product=product, positive_roots=positives)
