"""Integer-lattice and lattice-polytope computations.

Facets use the inner-normal convention ``normal . y >= offset`` with a
primitive normal; ``offset`` is the constant value of ``normal . y`` on the
facet.  Everything is exact integer (or Fraction) arithmetic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .errors import DegeneracyError, DimensionMismatchError, DomainError, ResourceLimitError, ValidationError
from .intmat import bareiss_rank, det, hermite_normal_form, solve_upper_echelon

LatticeVector = tuple[int, ...]

DEFAULT_POINT_CAP = 10**7


def _vec(v: Iterable[int]) -> LatticeVector:
    out = tuple(v)
    for c in out:
        if isinstance(c, bool) or not isinstance(c, int):
            raise ValidationError(f"lattice coordinates must be integers, got {c!r}")
    return out


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def primitive(v: Sequence[int]) -> LatticeVector:
    """Divide by the gcd of the entries.  Zero vectors are rejected."""
    v = _vec(v)
    g = math.gcd(*v) if v else 0
    if g == 0:
        raise DomainError("the zero vector has no primitive form")
    return tuple(c // g for c in v)


@dataclass(frozen=True)
class FacetData:
    normal: LatticeVector
    offset: int
    label: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "normal", _vec(self.normal))
        if math.gcd(*self.normal) != 1:
            raise ValidationError(f"facet normal {self.normal} is not primitive")

    def value(self, y: Sequence[int]) -> int:
        return dot(self.normal, y) - self.offset

    def contains(self, y: Sequence[int]) -> bool:
        return dot(self.normal, y) >= self.offset


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    if not points:
        return -1
    base = points[0]
    return bareiss_rank([[a - b for a, b in zip(p, base)] for p in points[1:]]) if len(points) > 1 else 0


def _hyperplane_normal(pts: Sequence[Sequence[int]]) -> LatticeVector | None:
    """Integer normal of the hyperplane through n points in R^n (None if they are degenerate)."""
    base = pts[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    n = len(base)
    normal = []
    for j in range(n):
        minor = [[r[k] for k in range(n) if k != j] for r in diffs]
        normal.append((-1) ** j * det(minor))
    if not any(normal):
        return None
    return primitive(normal)


def facets_from_vertices(vertices: Iterable[Sequence[int]]) -> list[FacetData]:
    """All facets of conv(vertices) by brute-force hyperplane search.

    Every n-subset of points spanning a hyperplane is tried; the hyperplane is
    kept when all points lie weakly on one side.  Intended for small inputs.
    """
    pts = sorted(set(_vec(v) for v in vertices))
    if not pts:
        raise DegeneracyError("no vertices")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatchError("vertices have differing dimensions")
    if n == 0 or affine_rank(pts) != n:
        raise DegeneracyError(f"vertices do not affinely span R^{n}")

    seen = set()
    facets = []
    for subset in itertools.combinations(pts, n):
        normal = _hyperplane_normal(subset)
        if normal is None:
            continue
        offset = dot(normal, subset[0])
        vals = [dot(normal, p) - offset for p in pts]
        if all(v >= 0 for v in vals):
            pass
        elif all(v <= 0 for v in vals):
            normal = tuple(-c for c in normal)
            offset = -offset
        else:
            continue
        if (normal, offset) not in seen:
            seen.add((normal, offset))
            facets.append(FacetData(normal, offset))
    facets.sort(key=lambda f: (f.normal, f.offset))
    return facets


def vertices_from_facets(n: int, facets: Sequence[FacetData]) -> list[LatticeVector]:
    """Vertices of {y : normal . y >= offset}, which must all be lattice points."""
    found = set()
    for subset in itertools.combinations(facets, n):
        a = [list(f.normal) for f in subset]
        d = det(a)
        if d == 0:
            continue
        # Cramer's rule
        point = []
        for j in range(n):
            aj = [row[:j] + [f.offset] + row[j + 1:] for row, f in zip(a, subset)]
            point.append(Fraction(det(aj), d))
        if all(dot(f.normal, point) >= f.offset for f in facets):
            if any(c.denominator != 1 for c in point):
                raise ValidationError(f"vertex {tuple(map(str, point))} is not a lattice point")
            found.add(tuple(int(c) for c in point))
    if not found:
        raise DegeneracyError("inequalities describe an empty or unbounded set")
    return sorted(found)


@dataclass(frozen=True, eq=False)
class LatticePolytope:
    """A full-dimensional lattice polytope with facet data.

    Build with :meth:`from_vertices` or :meth:`from_facets`; the missing
    representation is computed lazily.
    """

    dim: int
    facets: tuple[FacetData, ...]
    _vertices: tuple[LatticeVector, ...] | Callable[[], Sequence[LatticeVector]] | None = None

    @classmethod
    def from_vertices(cls, vertices: Iterable[Sequence[int]]) -> "LatticePolytope":
        verts = sorted(set(_vec(v) for v in vertices))
        facets = facets_from_vertices(verts)
        # keep only genuine vertices (drop points interior to faces)
        n = len(verts[0])
        tight = []
        for v in verts:
            active = [f.normal for f in facets if f.value(v) == 0]
            if bareiss_rank(active) == n:
                tight.append(v)
        return cls(n, tuple(facets), tuple(tight))

    @classmethod
    def from_facets(cls, dim: int, facets: Iterable[FacetData | tuple[Sequence[int], int]]) -> "LatticePolytope":
        fs = []
        for f in facets:
            if not isinstance(f, FacetData):
                normal, offset = f
                normal = _vec(normal)
                g = math.gcd(*normal)
                if g == 0:
                    raise DomainError("facet normal is zero")
                if offset % g:
                    raise ValidationError(f"facet {normal} >= {offset} cannot be written with a primitive normal "
                                          "and integer offset")
                f = FacetData(tuple(c // g for c in normal), offset // g)
            if len(f.normal) != dim:
                raise DimensionMismatchError(f"facet normal {f.normal} does not have dimension {dim}")
            fs.append(f)
        if not fs:
            raise DegeneracyError("no facets")
        return cls(dim, tuple(fs))

    @cached_property
    def vertices(self) -> tuple[LatticeVector, ...]:
        if callable(self._vertices):
            return tuple(self._vertices())
        if self._vertices is not None:
            return self._vertices
        verts = tuple(vertices_from_facets(self.dim, self.facets))
        if affine_rank(verts) != self.dim:
            raise DegeneracyError("polytope is not full-dimensional")
        return verts

    def check(self) -> bool:
        """Spot-check that the V- and H-representations agree."""
        verts = self.vertices
        if affine_rank(list(verts)) != self.dim:
            return False
        for f in self.facets:
            if not all(f.contains(v) for v in verts):
                return False
            tight = [v for v in verts if f.value(v) == 0]
            if affine_rank(tight) < self.dim - 1:
                return False
        return True


def normal_fan_rays(p: LatticePolytope) -> list[LatticeVector]:
    """Primitive inner facet normals, one per facet."""
    return [f.normal for f in p.facets]


def lattice_points(p: LatticePolytope, cap: int = DEFAULT_POINT_CAP) -> list[LatticeVector]:
    verts = p.vertices
    lo = [min(v[i] for v in verts) for i in range(p.dim)]
    hi = [max(v[i] for v in verts) for i in range(p.dim)]
    box = math.prod(h - l + 1 for l, h in zip(lo, hi))
    if box > cap:
        raise ResourceLimitError(f"bounding box has {box} candidate points, cap is {cap}")
    ranges = [range(l, h + 1) for l, h in zip(lo, hi)]
    return [y for y in itertools.product(*ranges) if all(f.contains(y) for f in p.facets)]


@dataclass(frozen=True)
class Renormalizer:
    """Isomorphism from ``base + L`` onto Z^rank, where L has the given HNF basis."""

    base: LatticeVector
    basis: tuple[LatticeVector, ...]
    pivots: tuple[int, ...]

    def apply(self, point: Sequence[int]) -> LatticeVector:
        d = [a - b for a, b in zip(point, self.base)]
        x = solve_upper_echelon(self.basis, self.pivots, d)
        if x is None or any(c.denominator != 1 for c in x):
            raise DomainError(f"{tuple(point)} is not in the affine lattice")
        return tuple(int(c) for c in x)


@dataclass(frozen=True)
class SpanReport:
    spans: bool
    index: int
    rank: int
    renormalizer: Renormalizer | None


def affine_span_check(points: Iterable[Sequence[int]]) -> SpanReport:
    """Does the affine lattice generated by ``points`` equal Z^n?

    ``index`` is the lattice index of the difference lattice in Z^n, i.e. the
    product of the HNF pivots; it is reported as 0 when the differences do not
    have full rank (infinite index).
    """
    pts = [_vec(p) for p in points]
    if not pts:
        raise ValidationError("need at least one point")
    n = len(pts[0])
    base = pts[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    h, _ = hermite_normal_form(diffs, n)
    basis = [tuple(r) for r in h if any(r)]
    pivots = tuple(next(j for j, c in enumerate(r) if c) for r in basis)
    rank = len(basis)
    index = math.prod(basis[i][pivots[i]] for i in range(rank)) if rank == n else 0
    spans = index == 1
    renorm = None if spans else Renormalizer(base, tuple(basis), pivots)
    return SpanReport(spans, index, rank, renorm)
