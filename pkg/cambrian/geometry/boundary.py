"""
Where the doubled Cambrian fan meets the boundary of the Tits cone.

In affine type the boundary is delta-perp, identified with V0* through the
S0 coordinates. The support of the doubled fan there is the union of the
closed halfspaces <x, beta> >= 0 over beta in the plus part of Phi0; its
complement is an open cone, which is also the union of the W0-chambers whose
closures contain x_c.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from cambrian.core.coxeter import CoxeterGroup
from cambrian.core.rootsys import Phi0Split, Root, RootSpace, is_negative, phi0_split
from cambrian.geometry.cones import SimplicialCone, boundary_face
from cambrian.geometry.lp import Constraint, feasible_point

logger = logging.getLogger(__name__)


@dataclass
class BoundarySupport:
    split: Phi0Split
    S0: tuple[int, ...]
    complement_point: tuple[Fraction, ...] | None  # in S0 coordinates, <x, beta> <= -1 on plus
    xc_in_complement: bool
    chambers_in_complement: list[tuple[int, ...]]  # reduced words u0 with u0 D0 in the complement
    chambers_at_xc: list[tuple[int, ...]]  # reduced words u0 with x_c in the closure of u0 D0
    covered_chambers: int
    face_violations: list[str] = field(default_factory=list)

    @property
    def plus(self) -> frozenset[Root]:
        return self.split.plus

    @property
    def complement_nonempty(self) -> bool:
        return self.complement_point is not None

    @property
    def descriptions_agree(self) -> bool:
        return sorted(self.chambers_in_complement) == sorted(self.chambers_at_xc)

    @property
    def passed(self) -> bool:
        return (
            self.complement_nonempty
            and self.xc_in_complement
            and self.descriptions_agree
            and not self.face_violations
        )


def in_support(space: RootSpace, plus: Iterable[Root], weight) -> bool:
    """Whether a point of delta-perp lies in the union of the plus halfspaces."""
    return any(space.pair(weight, beta) >= 0 for beta in plus)


def boundary_support(
    space: RootSpace, cones: Iterable[SimplicialCone] = (), group: CoxeterGroup | None = None
) -> BoundarySupport:
    """
    Compute the support of the doubled fan in delta-perp and check its two descriptions.

    Args:
        space: root space of an affine exchange matrix (NotAffine otherwise)
        cones: cones of an enumerated doubled fan whose delta-perp faces are tested
        group: Coxeter group to reuse

    Returns:
        BoundarySupport with the chamber lists and any face outside the support
    """
    data = space.affine
    split = phi0_split(space)
    group = group or CoxeterGroup(space.cartan, space.d)

    rows = [
        Constraint.of([space.scale[i] * beta[i] for i in data.S0], "<=", -1)
        for beta in sorted(split.plus)
    ]
    point = feasible_point(rows, len(data.S0))
    xc_inside = all(space.pair(split.xc, beta) < 0 for beta in split.plus)

    top = group.length(group.longest_element(data.S0))
    in_complement, at_xc, covered = [], [], 0
    for u0 in group.elements_up_to(top, letters=data.S0):
        word = group.reduced_word(u0)
        if all(is_negative(u0.preimage(beta)) for beta in split.plus):
            in_complement.append(word)
        else:
            covered += 1
        if all(space.pair(split.xc, u0.column(k)) >= 0 for k in data.S0):
            at_xc.append(word)

    support = BoundarySupport(
        split=split,
        S0=data.S0,
        complement_point=point,
        xc_in_complement=xc_inside,
        chambers_in_complement=in_complement,
        chambers_at_xc=at_xc,
        covered_chambers=covered,
    )
    for cone in cones:
        for ray in boundary_face(space, cone):
            if not in_support(space, split.plus, ray):
                support.face_violations.append(f"ray {ray} of cone {sorted(cone.normals)} lies in the gap")

    logger.info(
        f"Boundary support: {len(in_complement)} W0-chambers in the complement, "
        f"{len(at_xc)} at x_c, {covered} covered, {len(support.face_violations)} face violations"
    )
    return support
