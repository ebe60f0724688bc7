"""
Coxeter group elements as integer action matrices on the root lattice.

Column j of an element's action is w(alpha_j) in simple-root coordinates; the
inverse matrix is carried along so that left descents and w^{-1} images are
free. Reduced words are recovered on demand by removing right descents,
smallest index first.
"""

import logging
from collections import deque
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Literal

import numpy as np

from cambrian.config import get_settings
from cambrian.core.matrices import CartanType, IntMatrix, IntVector, cartan_type
from cambrian.core.rootsys import Root, is_negative, is_positive, negate
from cambrian.errors import InfiniteParabolic, NoBoundedJoin, NonTerminating

logger = logging.getLogger(__name__)


class GroupElement:
    """An element w of W, keyed by the bytes of its action matrix."""

    __slots__ = ("action", "inverse", "key")

    def __init__(self, action: np.ndarray, inverse: np.ndarray):
        action.setflags(write=False)
        inverse.setflags(write=False)
        self.action = action
        self.inverse = inverse
        self.key = action.tobytes()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupElement) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def image(self, root: Sequence[int]) -> Root:
        return tuple(int(v) for v in self.action @ np.asarray(root, dtype=np.int64))

    def preimage(self, root: Sequence[int]) -> Root:
        return tuple(int(v) for v in self.inverse @ np.asarray(root, dtype=np.int64))

    def column(self, s: int) -> Root:
        return tuple(int(v) for v in self.action[:, s])

    def __repr__(self) -> str:
        return f"GroupElement({self.action.tolist()})"


class CoxeterGroup:
    """The Coxeter group of a Cartan matrix acting on roots and weights."""

    def __init__(self, cartan: IntMatrix, d: IntVector, length_cap: int | None = None):
        self.cartan = cartan
        self.d = d
        self.n = len(cartan)
        self.length_cap = length_cap if length_cap is not None else get_settings().LENGTH_CAP
        eye = np.eye(self.n, dtype=np.int64)
        self._generators = []
        for i in range(self.n):
            matrix = eye.copy()
            matrix[i, :] -= np.asarray(cartan[i], dtype=np.int64)
            self._generators.append(matrix)
        self.identity = GroupElement(eye.copy(), eye.copy())
        self._words: dict[bytes, tuple[int, ...]] = {self.identity.key: ()}
        self._inversions: dict[bytes, frozenset[Root]] = {}

    def generator(self, s: int) -> GroupElement:
        return GroupElement(self._generators[s].copy(), self._generators[s].copy())

    def apply(self, w: GroupElement, s: int, side: Literal["left", "right"] = "right") -> GroupElement:
        """w s on the right or s w on the left."""
        generator = self._generators[s]
        if side == "right":
            return GroupElement(w.action @ generator, generator @ w.inverse)
        return GroupElement(generator @ w.action, w.inverse @ generator)

    def multiply(self, u: GroupElement, v: GroupElement) -> GroupElement:
        return GroupElement(u.action @ v.action, v.inverse @ u.inverse)

    def inverse(self, w: GroupElement) -> GroupElement:
        return GroupElement(w.inverse.copy(), w.action.copy())

    def element(self, word: Iterable[int]) -> GroupElement:
        w = self.identity
        for s in word:
            w = self.apply(w, s)
        return w

    def is_right_descent(self, w: GroupElement, s: int) -> bool:
        return is_negative(w.column(s))

    def right_descents(self, w: GroupElement) -> tuple[int, ...]:
        return tuple(s for s in range(self.n) if self.is_right_descent(w, s))

    def geq_s(self, w: GroupElement, s: int) -> bool:
        """True iff s <= w in the weak order, i.e. w^{-1}(alpha_s) is negative."""
        return bool((w.inverse[:, s] <= 0).all() and (w.inverse[:, s] < 0).any())

    def left_descents(self, w: GroupElement) -> tuple[int, ...]:
        return tuple(s for s in range(self.n) if self.geq_s(w, s))

    def reduced_word(self, w: GroupElement) -> tuple[int, ...]:
        """Reduced word built by stripping the smallest right descent until the identity."""
        cached = self._words.get(w.key)
        if cached is not None:
            return cached
        removed: list[int] = []
        current = w
        while current != self.identity:
            if len(removed) >= self.length_cap:
                logger.error(f"Descent stripping exceeded {self.length_cap} steps")
                raise NonTerminating(f"no reduced word found within {self.length_cap} steps")
            descents = self.right_descents(current)
            if not descents:
                raise NonTerminating("non-identity element without right descents")
            removed.append(descents[0])
            current = self.apply(current, descents[0])
        word = tuple(reversed(removed))
        self._words[w.key] = word
        return word

    def length(self, w: GroupElement) -> int:
        return len(self.reduced_word(w))

    def inversions(self, w: GroupElement) -> frozenset[Root]:
        """Positive roots s_{a1}...s_{a(j-1)} alpha_{aj} along a reduced word."""
        cached = self._inversions.get(w.key)
        if cached is not None:
            return cached
        prefix = self.identity
        roots = set()
        for s in self.reduced_word(w):
            roots.add(prefix.column(s))
            prefix = self.apply(prefix, s)
        result = frozenset(roots)
        self._inversions[w.key] = result
        return result

    def weak_leq(self, u: GroupElement, w: GroupElement) -> bool:
        return self.inversions(u) <= self.inversions(w)

    def cover_reflections(self, w: GroupElement) -> dict[int, Root]:
        """Right descent s mapped to the positive root -w(alpha_s) of w s w^{-1}."""
        return {s: negate(w.column(s)) for s in self.right_descents(w)}

    def support(self, w: GroupElement) -> frozenset[int]:
        return frozenset(self.reduced_word(w))

    def in_parabolic(self, w: GroupElement, J: Iterable[int]) -> bool:
        return self.support(w) <= frozenset(J)

    def parabolic_project(self, w: GroupElement, J: Iterable[int]) -> GroupElement:
        """w_J: extend u by s in J while u(alpha_s) is an inversion of w."""
        letters = sorted(set(J))
        inversions = self.inversions(w)
        u = self.identity
        extended = True
        while extended:
            extended = False
            for s in letters:
                root = u.column(s)
                if is_positive(root) and root in inversions:
                    u = self.apply(u, s)
                    extended = True
                    break
        return u

    def longest_element(self, J: Iterable[int]) -> GroupElement:
        letters = sorted(set(J))
        if cartan_type(self.cartan, self.d, letters) != CartanType.FINITE:
            raise InfiniteParabolic(f"parabolic subgroup on {letters} is infinite")
        u = self.identity
        extended = True
        while extended:
            extended = False
            for s in letters:
                if not self.is_right_descent(u, s):
                    u = self.apply(u, s)
                    extended = True
                    break
        return u

    def elements_up_to(self, max_length: int, letters: Iterable[int] | None = None) -> list[GroupElement]:
        """All elements of length at most max_length, by length then discovery order."""
        generators = sorted(set(letters)) if letters is not None else range(self.n)
        layer = [self.identity]
        seen = {self.identity.key}
        result = [self.identity]
        for _ in range(max_length):
            next_layer = []
            for w in layer:
                for s in generators:
                    if self.is_right_descent(w, s):
                        continue
                    up = self.apply(w, s)
                    if up.key not in seen:
                        seen.add(up.key)
                        next_layer.append(up)
            result.extend(next_layer)
            layer = next_layer
        return result

    def join_bounded(self, u: GroupElement, v: GroupElement, length_bound: int) -> GroupElement:
        """
        Join of u and v in the weak order, searched among elements of bounded length.

        Every upper bound within the bound is reached by going up from u; the
        join is the unique candidate below all others.
        """
        if self.weak_leq(u, v):
            return v
        if self.weak_leq(v, u):
            return u
        candidates = []
        seen = {u.key}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if self.weak_leq(v, x):
                candidates.append(x)
                continue
            if self.length(x) >= length_bound:
                continue
            for s in range(self.n):
                if self.is_right_descent(x, s):
                    continue
                up = self.apply(x, s)
                if up.key not in seen:
                    seen.add(up.key)
                    queue.append(up)
        if not candidates:
            raise NoBoundedJoin(f"no common upper bound of length <= {length_bound}")
        best = min(candidates, key=self.length)
        if not all(self.weak_leq(best, other) for other in candidates):
            raise NoBoundedJoin(f"upper bounds within length {length_bound} have no minimum")
        return best

    def act_on_weight(self, w: GroupElement, weight: Sequence) -> tuple[Fraction, ...]:
        """Dual action on fundamental-weight coordinates."""
        current = tuple(Fraction(x) for x in weight)
        for s in reversed(self.reduced_word(w)):
            xs = current[s]
            current = tuple(x - self.cartan[j][s] * xs for j, x in enumerate(current))
        return current
