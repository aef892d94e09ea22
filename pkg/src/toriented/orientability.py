"""Orientability verdicts and component counts.

The smooth locus of a small cover (and hence of a real toric variety from a
fan, or of a spherical toric variety from a lattice polytope) is governed by
one nonzero GF(2) vector per codimension-one face.  It is orientable iff some
basis makes every such vector a sum of an odd number of basis vectors, and its
components are indexed by GF(2)^n modulo the span of those vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import gf2
from .errors import DimensionMismatchError, ValidationError
from .gf2 import Gf2Matrix, Gf2Vector, OddBasis, OddDependenceWitness
from .lattice import LatticePolytope, SpanReport, affine_span_check, lattice_points, primitive


@dataclass(frozen=True)
class SmallCoverSpec:
    n: int
    generators: tuple[Gf2Vector, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if self.n < 1:
            raise ValidationError(f"rank must be >= 1, got {self.n}")
        labels = tuple(self.labels) or tuple(f"g{i}" for i in range(len(gens)))
        if len(labels) != len(gens):
            raise ValidationError("one label per generator required")
        object.__setattr__(self, "labels", labels)
        for i, g in enumerate(gens):
            if g.dim != self.n:
                raise DimensionMismatchError(f"generator {labels[i]} has dimension {g.dim}, expected {self.n}")
            if g.is_zero():
                raise ValidationError(f"generator {labels[i]} is zero; isotropy generators must be nonzero")

    @classmethod
    def from_bits(cls, n: int, generators: Sequence[Sequence[int]], labels: Sequence[str] = ()) -> "SmallCoverSpec":
        vecs = []
        for i, g in enumerate(generators):
            if len(g) != n:
                raise DimensionMismatchError(f"generator {i} has length {len(g)}, expected {n}")
            vecs.append(Gf2Vector.from_bits(g))
        return cls(n, tuple(vecs), tuple(labels))

    @property
    def matrix(self) -> Gf2Matrix:
        return Gf2Matrix(self.n, self.generators)


@dataclass(frozen=True)
class OrientabilityVerdict:
    """Verdict plus certificate.

    ``matrix`` holds the distinct generators the certificate refers to and
    ``provenance[i]`` lists the input labels that reduced to row ``i``.
    """

    orientable: bool
    certificate: OddBasis | OddDependenceWitness
    matrix: Gf2Matrix
    provenance: tuple[tuple[str, ...], ...]

    def validate(self) -> bool:
        if self.orientable:
            return isinstance(self.certificate, OddBasis) and gf2.verify_odd_basis(self.matrix, self.certificate)
        return (isinstance(self.certificate, OddDependenceWitness)
                and gf2.verify_witness(self.matrix, self.certificate))

    def witness_labels(self) -> list[str]:
        if self.orientable:
            return []
        return [self.provenance[i][0] for i in self.certificate.indices]


@dataclass(frozen=True)
class ComponentIndex:
    k: int
    count: int
    coset_reps: tuple[Gf2Vector, ...]


@dataclass(frozen=True)
class LowerBoundReport:
    span: SpanReport
    spherical_verdict: OrientabilityVerdict
    spherical_components: ComponentIndex
    applicable: bool
    divisibility: int | None


def _dedupe(spec: SmallCoverSpec) -> tuple[Gf2Matrix, tuple[tuple[str, ...], ...]]:
    order: dict[int, list[str]] = {}
    for g, label in zip(spec.generators, spec.labels):
        order.setdefault(g.word, []).append(label)
    rows = tuple(Gf2Vector(spec.n, w) for w in order)
    return Gf2Matrix(spec.n, rows), tuple(tuple(v) for v in order.values())


def small_cover_orientable(spec: SmallCoverSpec) -> OrientabilityVerdict:
    m, prov = _dedupe(spec)
    witness = gf2.odd_dependence(m)
    if witness is not None:
        return OrientabilityVerdict(False, witness, m, prov)
    basis = gf2.find_odd_basis(m)
    assert basis is not None
    return OrientabilityVerdict(True, basis, m, prov)


def components(spec: SmallCoverSpec) -> ComponentIndex:
    m = spec.matrix
    k = gf2.rank(m)
    reps = gf2.quotient_representatives(m)
    return ComponentIndex(k, 1 << (spec.n - k), tuple(reps))


def fan_spec(n: int, rays: Sequence[Sequence[int]], labels: Sequence[str] = ()) -> SmallCoverSpec:
    gens = []
    names = []
    for i, r in enumerate(rays):
        if len(r) != n:
            raise DimensionMismatchError(f"ray {i} has length {len(r)}, expected {n}")
        v = primitive(r)
        g = Gf2Vector.from_ints(v)
        if g.is_zero():
            # a primitive vector always has an odd entry
            raise AssertionError(v)
        gens.append(g)
        names.append(labels[i] if labels else f"ray[{i}]={list(r)}")
    return SmallCoverSpec(n, tuple(gens), tuple(names))


def toric_orientable(n: int, rays: Sequence[Sequence[int]]) -> tuple[OrientabilityVerdict, ComponentIndex]:
    """Real toric variety of a fan given by its rays.  Only the rays matter."""
    spec = fan_spec(n, rays)
    return small_cover_orientable(spec), components(spec)


def spherical_facet_vectors(p: LatticePolytope) -> Gf2Matrix:
    """Rows ``(b mod 2, b.F mod 2)`` for each facet's primitive inner normal b."""
    rows = [Gf2Vector.from_ints(tuple(f.normal) + (f.offset,)) for f in p.facets]
    return Gf2Matrix(p.dim + 1, tuple(rows))


def spherical_spec(p: LatticePolytope) -> SmallCoverSpec:
    m = spherical_facet_vectors(p)
    labels = tuple(f.label or f"facet[{i}]:{list(f.normal)}.y>={f.offset}" for i, f in enumerate(p.facets))
    return SmallCoverSpec(p.dim + 1, m.rows, labels)


def spherical_orientable(p: LatticePolytope) -> tuple[OrientabilityVerdict, ComponentIndex]:
    spec = spherical_spec(p)
    return small_cover_orientable(spec), components(spec)


def polytope_toric_orientable(p: LatticePolytope) -> tuple[OrientabilityVerdict, ComponentIndex]:
    labels = [f.label or f"facet[{i}]:{list(f.normal)}" for i, f in enumerate(p.facets)]
    spec = fan_spec(p.dim, [f.normal for f in p.facets], labels)
    return small_cover_orientable(spec), components(spec)


def lower_bound_report(p: LatticePolytope, point_cap: int | None = None) -> LowerBoundReport:
    """Whether the degree of the spherical projection gives a lower bound.

    Requires the lattice points to affinely span Z^n and the spherical
    variety to be orientable.  When applicable, the bound is a multiple of the
    spherical component count.  The degree itself is not computed.
    """
    pts = lattice_points(p) if point_cap is None else lattice_points(p, point_cap)
    span = affine_span_check(pts)
    verdict, comps = spherical_orientable(p)
    applicable = span.spans and verdict.orientable
    return LowerBoundReport(span, verdict, comps, applicable, comps.count if applicable else None)
