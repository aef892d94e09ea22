"""Brute-force verifier built from the codimension-one cell structure.

The smooth locus is glued from 2^n top cells ``(Delta, xi)``; the cells
``xi`` and ``xi + g`` share the facet with isotropy generator ``g``.  Two
independent checks live here:

* the signed Cayley graph on GF(2)^n, which is bipartite iff a sign labelling
  ``n_xi = -n_(xi+g)`` exists, i.e. iff the top cellular homology is nonzero;
* the integer boundary matrix C_n -> C_(n-1), whose kernel rank is computed
  exactly.

Nothing here calls the GF(2) elimination code.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from . import kernels
from .errors import ResourceLimitError
from .intmat import bareiss_rank
from .lattice import LatticePolytope
from .orientability import SmallCoverSpec, spherical_spec

DEFAULT_GRAPH_CAP = 12
DEFAULT_BOUNDARY_CAP = 10


def _cap(default: int) -> int:
    env = os.environ.get("TORIENTED_ORACLE_CAP")
    return int(env) if env else default


def graph_cap() -> int:
    return _cap(DEFAULT_GRAPH_CAP)


def boundary_cap() -> int:
    return _cap(DEFAULT_BOUNDARY_CAP)


def _require(n: int, cap: int, what: str):
    if n > cap:
        raise ResourceLimitError(f"{what}: n={n} exceeds cap {cap} (set TORIENTED_ORACLE_CAP to raise it)")


@dataclass(frozen=True)
class SignedCayleyGraph:
    n: int
    generators: tuple[int, ...]

    @property
    def vertices(self) -> range:
        return range(1 << self.n)

    def edges(self):
        """Yield ``(xi, xi ^ g, generator_index)`` once per unordered edge."""
        for xi in self.vertices:
            for idx, g in enumerate(self.generators):
                eta = xi ^ g
                if xi < eta:
                    yield xi, eta, idx

    def neighbours(self, xi: int) -> list[int]:
        return [xi ^ g for g in self.generators]


def cayley_graph(spec: SmallCoverSpec) -> SignedCayleyGraph:
    return SignedCayleyGraph(spec.n, tuple(g.word for g in spec.generators))


@dataclass(frozen=True)
class BoundaryMatrix:
    """Rows are facet classes ``(sigma, {xi, xi+g_sigma})``, columns are cells ``xi``."""

    row_labels: tuple[tuple[int, int], ...]
    entries: tuple[tuple[int, ...], ...]
    ncols: int


def boundary_matrix(spec: SmallCoverSpec) -> BoundaryMatrix:
    _require(spec.n, boundary_cap(), "boundary matrix")
    size = 1 << spec.n
    labels = []
    rows = []
    for s, g in enumerate(spec.generators):
        w = g.word
        for xi in range(size):
            eta = xi ^ w
            if xi > eta:
                continue
            row = [0] * size
            # facets oriented so that d(Delta) is the plain sum of facets
            row[xi] += 1
            row[eta] += 1
            labels.append((s, xi))
            rows.append(tuple(row))
    return BoundaryMatrix(tuple(labels), tuple(rows), size)


def oracle_orientable(spec: SmallCoverSpec) -> bool:
    _require(spec.n, graph_cap(), "Cayley graph oracle")
    bipartite, _ = kernels.cayley_color(spec.n, [g.word for g in spec.generators])
    return bipartite


def oracle_components(spec: SmallCoverSpec) -> int:
    _require(spec.n, graph_cap(), "Cayley graph oracle")
    _, ncomp = kernels.cayley_color(spec.n, [g.word for g in spec.generators])
    return ncomp


def boundary_kernel_rank(spec: SmallCoverSpec) -> int:
    bm = boundary_matrix(spec)
    return bm.ncols - bareiss_rank(bm.entries)


def oracle_spherical(p: LatticePolytope) -> tuple[bool, int]:
    spec = spherical_spec(p)
    _require(spec.n, graph_cap(), "spherical oracle")
    return kernels.cayley_color(spec.n, [g.word for g in spec.generators])
