from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

from cambrian.geometry.cones import Provenance, SimplicialCone


def rational(value) -> str:
    """Exact rational as 'p/q' (or 'p' when integral)."""
    return str(Fraction(value))


class ExportSchema(BaseModel):
    """Base for every exported document."""

    model_config = ConfigDict(extra="forbid")


class MatrixInput(ExportSchema):
    """Exchange matrix file: rows index i, columns j, entry b_ij."""

    n: int | None = Field(None, description="Rank; checked against B when given")
    B: list[list[int]] = Field(..., description="Square skew-symmetrizable integer matrix")


class AffineExport(ExportSchema):
    delta: list[int] = Field(..., description="Imaginary root delta in simple-root coordinates")
    s_aff: int = Field(..., description="Affine index (0-based)")
    S0: list[int] = Field(..., description="Indices of the finite part")
    theta: list[int] = Field(..., description="delta minus the affine simple root, a root of Phi0")


class ClassificationExport(ExportSchema):
    """Output of `cambrian classify`."""

    kind: str = Field(..., description="Finite, Affine or Indefinite")
    n: int = Field(..., description="Rank")
    symmetrizer: list[int] = Field(..., description="d, positive integers with gcd 1")
    cartan: list[list[int]] = Field(..., description="Cartan companion A")
    order: list[int] | None = Field(None, description="Acyclic order, i.e. the Coxeter element c; null for cyclic B")
    affine: AffineExport | None = Field(None, description="Affine data when kind is Affine")
    plus: list[list[int]] | None = Field(None, description="Phi0 roots with omega(beta, delta) > 0")
    zero: list[list[int]] | None = Field(None, description="Phi0 roots with omega(beta, delta) = 0")
    xc: list[int] | None = Field(None, description="x_c restricted to S0")


class SortableExport(ExportSchema):
    word: list[int] = Field(..., description="c-sorting word")
    labels: list[list[int]] = Field(..., description="C_c(v) ordered by slot letter")
    covers: list[list[int]] = Field(..., description="Cover reflection roots")


class SortablesExport(ExportSchema):
    c: list[int] = Field(..., description="Coxeter element")
    max_len: int = Field(..., description="Length bound")
    sortables: list[SortableExport] = Field(default_factory=list)


class ConeExport(ExportSchema):
    normals: list[list[int]] = Field(..., description="Facet normal roots (labels)")
    rays: list[list[int]] = Field(..., description="Primitive dual rays, ray k opposite normal k")
    provenance: Provenance = Field(..., description="FromC, FromAntiCinv or Both")

    @classmethod
    def of(cls, cone: SimplicialCone) -> "ConeExport":
        return cls(
            normals=[list(r) for r in cone.normals],
            rays=[list(r) for r in cone.rays],
            provenance=cone.provenance,
        )

    def to_cone(self) -> SimplicialCone:
        return SimplicialCone(
            normals=tuple(tuple(r) for r in self.normals),
            rays=tuple(tuple(r) for r in self.rays),
            provenance=self.provenance,
        )


class FanExport(ExportSchema):
    """Maximal cones of the doubled fan, in canonical vertex order."""

    n: int = Field(..., description="Rank")
    max_len: int = Field(..., description="Enumeration bound")
    cones: list[ConeExport] = Field(default_factory=list)

    def to_cones(self) -> list[SimplicialCone]:
        return [cone.to_cone() for cone in self.cones]


class SlotExport(ExportSchema):
    label: list[int]
    kind: str = Field(..., description="full, half or open")
    neighbor: int | None = Field(None, description="Index of the vertex across a full edge")


class VertexExport(ExportSchema):
    index: int
    labels: list[list[int]]
    provenance: Provenance
    interior: bool
    word: list[int] | None = Field(None, description="c-sorting word on the c side")
    anti_word: list[int] | None = Field(None, description="c^-1-sorting word on the negated side")
    slots: list[SlotExport] = Field(default_factory=list)


class FrameworkExport(ExportSchema):
    """Doubled framework graph with its truncation manifest."""

    c: list[int]
    max_len: int
    vertices: list[VertexExport] = Field(default_factory=list)
    interior: list[int] = Field(default_factory=list, description="Indices of interior vertices")
    frontier: list[int] = Field(default_factory=list, description="Indices of non-interior vertices")
    conflicts: list[str] = Field(default_factory=list)


class SeedExport(ExportSchema):
    index: int
    depth: int
    path: list[int] = Field(..., description="Mutation sequence from the initial seed")
    cluster: list[str] = Field(..., description="Cluster variables as Laurent polynomials")
    exchange: list[list[int]] = Field(..., description="Exchange block B^v")
    c_vectors: list[list[int]]
    g_vectors: list[list[int]]


class ExchangeEdgeExport(ExportSchema):
    source: int
    column: int
    target: int
    target_column: int


class ExchangeGraphExport(ExportSchema):
    depth: int
    seeds: list[SeedExport] = Field(default_factory=list)
    edges: list[ExchangeEdgeExport] = Field(default_factory=list)
    frontier: list[int] = Field(default_factory=list)


class WitnessExport(ExportSchema):
    axiom: str
    vertex: list[list[int]]
    labels: list[list[int]]
    neighbor: list[list[int]] | None = None
    detail: str = ""


class DeficitExport(ExportSchema):
    vertex: list[list[int]]
    label: list[int] = Field(..., description="Label of the half-edge")


class GreenExport(ExportSchema):
    length: int
    vertices: list[list[list[int]]] = Field(..., description="Label sets from Pi to -Pi")
    crossings: list[list[int]] = Field(..., description="Positive label crossed at each step")


class BoundaryExport(ExportSchema):
    plus: list[list[int]]
    complement_point: list[str] | None = Field(None, description="Point of the open complement, S0 coordinates")
    xc_in_complement: bool
    chambers_in_complement: list[list[int]]
    chambers_at_xc: list[list[int]]
    covered_chambers: int
    face_violations: list[str] = Field(default_factory=list)


class SuiteExport(ExportSchema):
    """Machine-readable `cambrian verify` report."""

    success: bool = Field(..., description="False when any section FAILs")
    kind: str
    max_len: int
    depth: int
    statuses: dict[str, str] = Field(..., description="Section name to PASS, FAIL, INCONCLUSIVE or NOT_CLAIMED")
    axioms: dict[str, str] = Field(..., description="Per-axiom status")
    witnesses: list[WitnessExport] = Field(default_factory=list)
    interior_vertices: int
    fan_pairs: int
    fan_violations: list[str] = Field(default_factory=list)
    matched_seeds: int
    mismatches: list[str] = Field(default_factory=list)
    interior_half_edges: int
    persistent_deficits: list[DeficitExport] = Field(
        default_factory=list, description="Half-edges present at both maxLen and maxLen + 1"
    )
    unmatched_seeds: list[list[int]] = Field(
        default_factory=list, description="Paths of non-frontier seed classes beyond the truncation"
    )
    persistent_notes: list[str] = Field(default_factory=list)
    property_violations: dict[str, list[str]] = Field(default_factory=dict)
    rank_two: dict[str, int] = Field(default_factory=dict)
    green: GreenExport | None = None
    boundary: BoundaryExport | None = None
    cones_at_boundary: list[int] | None = Field(None, description="Cones meeting delta-perp at maxLen and maxLen + 1")


class ErrorResponse(ExportSchema):
    success: bool = Field(False, description="Always false")
    error: str = Field(..., description="Error message")
    kind: str = Field(..., description="Error class name")
