"""Exact integer programming with bounded subdeterminants.

Flatness-based solvers for integer feasibility and optimization over
polyhedra ``{x : A x <= b}`` whose constraint matrix has small ``r x r`` minors,
together with the exact linear algebra, LP, group relaxation and brute-force
tools they are built from.
"""
from .au import solve_almost_unimodular, solve_k_almost_unimodular
from .corner import (CornerSystem, GroupSystem, build_group_system, group_feasible,
                     group_optimize, solve_identity_case)
from .errors import (DegenerateInputError, DomainError, ParameterError, ParseError,
                     PreconditionError, RankError, ShapeError, SingularMatrixError,
                     SizeLimitError, SubdetError)
from .exact import det, inverse_rat, rank, snf
from .flat import SolveReport, solve_round_down, solve_simplex_feasible, solve_simplex_optimize
from .instances import (InstanceFile, count_cone_edges, emit_instance, gen_cube_cone,
                        parse_instance)
from .lp import Polyhedron, enumerate_vertices, lp_optimize, tangent_cone
from .spectrum import (DetSpectrum, compute_spectrum, is_almost_unimodular,
                       is_k_almost_unimodular, is_k_modular, is_totally_k_modular)
from .width import WidthResult, width_exact

__version__ = "0.1.0"
