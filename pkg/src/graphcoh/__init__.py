"""Cochain complexes of graphs over finite-rank commutative graded
integer algebras: exact integer cohomology (free ranks and torsion,
bigraded), chromatic polynomials, and executable structural checks.
"""

from .algebra import (AlgebraSpecError, Endomorphism, GradedAlgebra, RingParams,
                      builtin, load_algebra, ring_invariant, rings_isomorphic,
                      unit_complement, verify_algebra, verify_endomorphism)
from .chromatic import chromatic_delete_contract, chromatic_state_sum, evaluate_at_qdim
from .cochain import (BigradedComplex, EnhancedState, build_complex, edge_sign,
                      per_edge_map, state_basis)
from .errors import InputError, ResourceCapError
from .graph import (ComponentPartition, ContractionResult, EdgeSubset, Graph,
                    GraphParseError, load_graph, parse_graph)
from .homology import (GroupInvariant, cohomology, graded_euler, group_tensor,
                       group_tor, kunneth_predict, smith_normal_form)
from .linalg import SNFResult, SparseIntMatrix
from .polynomial import IntPolynomial
from .verify import CheckReport, run_checks

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpecError",
    "BigradedComplex",
    "CheckReport",
    "ComponentPartition",
    "ContractionResult",
    "EdgeSubset",
    "Endomorphism",
    "EnhancedState",
    "GradedAlgebra",
    "Graph",
    "GraphParseError",
    "GroupInvariant",
    "InputError",
    "IntPolynomial",
    "ResourceCapError",
    "RingParams",
    "SNFResult",
    "SparseIntMatrix",
    "build_complex",
    "builtin",
    "chromatic_delete_contract",
    "chromatic_state_sum",
    "cohomology",
    "edge_sign",
    "evaluate_at_qdim",
    "graded_euler",
    "group_tensor",
    "group_tor",
    "kunneth_predict",
    "load_algebra",
    "load_graph",
    "parse_graph",
    "per_edge_map",
    "ring_invariant",
    "rings_isomorphic",
    "run_checks",
    "smith_normal_form",
    "state_basis",
    "unit_complement",
    "verify_algebra",
    "verify_endomorphism",
]
