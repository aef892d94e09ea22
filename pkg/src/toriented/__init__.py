"""Orientability and component counts of real toric varieties, spherical toric
varieties and small covers, with checkable GF(2) certificates."""

from .errors import (DegeneracyError, DimensionMismatchError, DomainError, ResourceLimitError,
                     TorientedError, ValidationError)
from .gf2 import (Gf2Matrix, Gf2Vector, OddBasis, OddDependenceWitness, find_odd_basis, in_span,
                  odd_dependence, row_reduce)
from .kernels import BACKEND
from .lattice import (FacetData, LatticePolytope, SpanReport, affine_span_check, facets_from_vertices,
                      lattice_points, normal_fan_rays, primitive)
from .orientability import (ComponentIndex, LowerBoundReport, OrientabilityVerdict, SmallCoverSpec,
                            components, lower_bound_report, small_cover_orientable,
                            spherical_facet_vectors, spherical_orientable, toric_orientable)
from .oracle import boundary_kernel_rank, oracle_components, oracle_orientable, oracle_spherical
from .posets import (ChainReport, FinitePoset, maximal_chains, order_polytope, theorem4_check,
                     theorem6_check)

__version__ = "0.1.0"
