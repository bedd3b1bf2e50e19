"""Exact-arithmetic root systems, alcoved polytopes, and minimum generating sets.

Everything runs over arbitrary-precision rationals: root system
realizations, support values by exact simplex, vertex enumeration by double
description, face counting, minimum generating sets by branch-and-bound set
cover, the explicit symmetric-polytope constructions, and a min-plus
tropical kernel for type A.  `alcove.claims` re-verifies every shipped
statement; the `alcove` CLI fronts it all.
"""

from .constructions import (SymmetricSpec, an_generators, coxeter_orbit,
                            f4_case, f4_duality, rank2_generators, seed_vertex,
                            symmetric_alcoved, symmetric_generators,
                            verify_e8_incidences)
from .cover import (CoverInstance, CoverSolution, build_cover_instance,
                    cover_lower_bound, greedy_cover, min_cover)
from .errors import (AlcoveError, EmptyPolytopeError, NoFiniteOrderError,
                     ResourceLimitError, SingularMatrixError,
                     UnboundedPolytopeError, VerificationError, WindowError)
from .polytopes import (HPolytope, IncidenceStructure, VPolytope, alcoved_hull,
                        f_vector, incidence, is_generating_set, is_simple,
                        lp_max, make_alcoved, normalize_point, support_value,
                        vertices)
from .rational import dot, matrix_order, solve_linear
from .rootsystems import (RootSystem, build_root_system, coxeter_element,
                          coxeter_number, e8_paper_data, gamma_orbit_partition,
                          highest_root, reflect, theta_roots)
from .tropical import trop_combine, trop_hull_contains, trop_hull_vs_alcoved

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
