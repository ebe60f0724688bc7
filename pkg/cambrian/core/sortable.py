"""
c-sortable elements.

Sortability, sorting words and the label sets C_c(v) all run on the same
recursion: pick an initial letter s of c; if v >= s continue with (sv, scs),
otherwise v must lie in the parabolic subgroup without s and the recursion
continues with (v, sc). Results are memoized per (element, word).
"""

import logging
import random
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from cambrian.config import get_settings
from cambrian.core.coxeter import CoxeterGroup, GroupElement
from cambrian.core.matrices import IntMatrix
from cambrian.core.rootsys import (
    RankTwoSubsystem,
    Root,
    RootSpace,
    generate_roots,
    height,
    is_negative,
    negate,
    plane_coordinates,
    rank_two_subsystem,
    unit,
)
from cambrian.errors import NotSortable, OverlappingCones, ResourceLimit, SearchExhausted

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoxeterWord:
    """A word using every letter of its support once, with commutation data from A."""

    word: tuple[int, ...]
    cartan: IntMatrix

    def commute(self, s: int, t: int) -> bool:
        return self.cartan[s][t] == 0

    @cached_property
    def letters(self) -> frozenset[int]:
        return frozenset(self.word)

    @cached_property
    def initial_letters(self) -> tuple[int, ...]:
        return tuple(
            s for k, s in enumerate(self.word) if all(self.commute(s, t) for t in self.word[:k])
        )

    @cached_property
    def final_letters(self) -> tuple[int, ...]:
        return tuple(
            s for k, s in enumerate(self.word) if all(self.commute(s, t) for t in self.word[k + 1 :])
        )

    def without(self, s: int) -> "CoxeterWord":
        """sc for s initial, cs for s final: the word with s deleted."""
        return CoxeterWord(tuple(t for t in self.word if t != s), self.cartan)

    def rotate(self, s: int) -> "CoxeterWord":
        """scs for s initial."""
        if s not in self.initial_letters:
            raise ValueError(f"letter {s} is not initial in {self.word}")
        return CoxeterWord(tuple(t for t in self.word if t != s) + (s,), self.cartan)

    def inverse(self) -> "CoxeterWord":
        return CoxeterWord(tuple(reversed(self.word)), self.cartan)

    def restrict(self, J: Iterable[int]) -> "CoxeterWord":
        keep = set(J)
        return CoxeterWord(tuple(t for t in self.word if t in keep), self.cartan)


@dataclass(frozen=True)
class SortableVertex:
    element: GroupElement
    word: tuple[int, ...]
    labels: dict[int, Root]  # slot (letter) -> label
    covers: dict[int, Root]  # right descent -> cover reflection root

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def label_set(self) -> frozenset[Root]:
        return frozenset(self.labels.values())


class SortableEngine:
    """Sortability, sorting words, labels and projections for one Coxeter element."""

    def __init__(
        self,
        space: RootSpace,
        group: CoxeterGroup,
        c: CoxeterWord,
        rng: random.Random | None = None,
    ):
        self.space = space
        self.group = group
        self.c = c
        self.rng = rng
        self._words: dict[tuple[bytes, tuple[int, ...]], tuple[int, ...] | None] = {}
        self._labels: dict[tuple[bytes, tuple[int, ...]], dict[int, Root]] = {}
        self._enumerated: dict[int, list[SortableVertex]] = {}

    def _pick(self, c: CoxeterWord) -> int:
        if self.rng is None:
            return c.word[0]
        return self.rng.choice(c.initial_letters)

    def is_sortable(self, w: GroupElement, c: CoxeterWord | None = None) -> bool:
        c = c or self.c
        return self._sorting_word(w, c) is not None

    def sorting_word(self, w: GroupElement, c: CoxeterWord | None = None) -> tuple[int, ...]:
        c = c or self.c
        word = self._sorting_word(w, c)
        if word is None:
            word = self.group.reduced_word(w)
            raise NotSortable(f"element with reduced word {word} is not {c.word}-sortable")
        return word

    def _sorting_word(self, w: GroupElement, c: CoxeterWord) -> tuple[int, ...] | None:
        key = (w.key, c.word)
        if key in self._words:
            return self._words[key]
        if not c.word:
            result = () if w == self.group.identity else None
        else:
            s = self._pick(c)
            if self.group.geq_s(w, s):
                rest = self._sorting_word(self.group.apply(w, s, side="left"), c.rotate(s))
                result = None if rest is None else (s,) + rest
            elif not self.group.support(w) <= c.letters - {s}:
                result = None
            else:
                result = self._sorting_word(w, c.without(s))
        self._words[key] = result
        return result

    def labels(self, v: GroupElement, c: CoxeterWord | None = None) -> dict[int, Root]:
        """C_c(v) keyed by letter: s.C_scs(sv) when v >= s, else C_sc(v) plus alpha_s."""
        c = c or self.c
        key = (v.key, c.word)
        if key in self._labels:
            return dict(self._labels[key])
        if not c.word:
            result: dict[int, Root] = {}
        else:
            s = self._pick(c)
            if self.group.geq_s(v, s):
                inner = self.labels(self.group.apply(v, s, side="left"), c.rotate(s))
                result = {slot: self.space.reflect(root, s) for slot, root in inner.items()}
            else:
                result = self.labels(v, c.without(s))
                result[s] = unit(self.space.n, s)
        self._labels[key] = result
        return dict(result)

    def vertex(self, v: GroupElement) -> SortableVertex:
        return SortableVertex(
            element=v,
            word=self.sorting_word(v),
            labels=self.labels(v),
            covers=self.group.cover_reflections(v),
        )

    def sortables(self, max_len: int, node_cap: int | None = None) -> list[SortableVertex]:
        """All c-sortable elements of length at most max_len, layer by layer."""
        if max_len < 0:
            raise ValueError("maxLen must be nonnegative")
        for known, found in self._enumerated.items():
            if known >= max_len:
                return found if known == max_len else [v for v in found if v.length <= max_len]
        cap = node_cap if node_cap is not None else get_settings().NODE_CAP
        layer = [self.group.identity]
        seen = {self.group.identity.key}
        found = [self.vertex(self.group.identity)]
        for length in range(max_len):
            next_layer = []
            for w in layer:
                for s in range(self.space.n):
                    if self.group.is_right_descent(w, s):
                        continue
                    up = self.group.apply(w, s)
                    if up.key in seen:
                        continue
                    seen.add(up.key)
                    if self.is_sortable(up):
                        next_layer.append(up)
                        found.append(self.vertex(up))
                        if len(found) > cap:
                            raise ResourceLimit(
                                f"more than {cap} sortable elements at length {length + 1}"
                            )
            layer = next_layer
        logger.info(f"{len(found)} {self.c.word}-sortable elements of length <= {max_len}")
        self._enumerated[max_len] = found
        return found

    def pi_down(self, w: GroupElement, search_bound: int | None = None) -> SortableVertex:
        """
        The sortable v whose cone contains wD, i.e. w^{-1} beta > 0 for every label beta.

        Args:
            w: any element
            search_bound: length up to which sortables are searched, at least l(w)

        Returns:
            The SortableVertex of pi_down(w)

        Raises:
            SearchExhausted: no enumerated cone contains wD
            OverlappingCones: several enumerated cones contain wD
        """
        length = self.group.length(w)
        bound = length if search_bound is None else search_bound
        if bound < length:
            raise SearchExhausted(f"search bound {bound} is below the length {length}")
        matches = [
            v
            for v in self.sortables(bound)
            if v.length <= length
            and all(not is_negative(w.preimage(beta)) for beta in v.labels.values())
        ]
        if not matches:
            word = self.group.reduced_word(w)
            raise SearchExhausted(f"no sortable cone contains wD for w = {word}")
        if len(matches) > 1:
            word = self.group.reduced_word(w)
            words = [v.word for v in matches]
            raise OverlappingCones(f"{len(matches)} sortable cones contain wD for w = {word}", words)
        return matches[0]

    def pi_down_bruteforce(self, w: GroupElement) -> SortableVertex:
        """Maximal sortable element below w in the weak order."""
        candidates = self.sortables(self.group.length(w))
        below = [v for v in candidates if self.group.weak_leq(v.element, w)]
        best = max(below, key=lambda v: v.length)
        if not all(self.group.weak_leq(v.element, best.element) for v in below):
            raise SearchExhausted("sortable elements below w have no maximum")
        return best

    def c_to_scs(self, v: GroupElement, s: int, length_bound: int) -> GroupElement:
        """sv if v >= s, otherwise the join s v v found within the length bound."""
        if self.group.geq_s(v, s):
            return self.group.apply(v, s, side="left")
        return self.group.join_bounded(self.group.generator(s), v, length_bound)

    def scs_to_c(self, x: GroupElement, s: int) -> GroupElement:
        """Inverse of c_to_scs: sx if x is not above s, otherwise the projection away from s."""
        if not self.group.geq_s(x, s):
            return self.group.apply(x, s, side="left")
        return self.group.parabolic_project(x, set(range(self.space.n)) - {s})

    def is_aligned(self, w: GroupElement, bound: int | None = None) -> bool:
        """Check the alignment conditions on every rank-two subsystem spanned by two inversions."""
        inversions = self.group.inversions(w)
        if len(inversions) < 2:
            return True
        top = max(height(r) for r in inversions)
        pool = generate_roots(self.space, bound if bound is not None else 2 * top)
        checked = set()
        for x, y in combinations(sorted(inversions), 2):
            sub = rank_two_subsystem(self.space, x, y, roots=pool)
            if sub.canonical in checked:
                continue
            checked.add(sub.canonical)
            if not _aligned(self.space, inversions, sub):
                logger.debug(f"Not aligned on canonical roots {sub.canonical}")
                return False
        return True


def _aligned(space: RootSpace, inversions: frozenset[Root], sub: RankTwoSubsystem) -> bool:
    beta, gamma = sub.canonical
    plane = _in_plane(inversions, beta, gamma)
    sign = space.omega(beta, gamma)
    if sign == 0:
        return plane <= {beta, gamma}
    focus = gamma if sign > 0 else beta
    if focus not in inversions or plane == {focus}:
        return True
    return sub.cycle_length is not None and sub.positive_roots <= inversions


def _in_plane(roots: Iterable[Root], beta: Root, gamma: Root) -> set[Root]:
    return {r for r in roots if plane_coordinates(beta, gamma, r) is not None}


def coxeter_word(space: RootSpace) -> CoxeterWord:
    """c from the acyclic order of B."""
    return CoxeterWord(space.order, space.cartan)


def w0_region_labels(c: CoxeterWord, head: Iterable[int]) -> dict[int, Root]:
    """Closed form of C_c((w0)_J) when J is the set of letters after the prefix `head` of c."""
    n = len(c.cartan)
    prefix = set(head)
    return {s: unit(n, s) if s in prefix else negate(unit(n, s)) for s in range(n)}


def enumerate_sortables(
    engine: SortableEngine, max_len: int, node_cap: int | None = None
) -> list[SortableVertex]:
    return engine.sortables(max_len, node_cap=node_cap)
