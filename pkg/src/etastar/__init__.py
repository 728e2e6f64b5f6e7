"""Finite semigroups, their least nilpotent quotient, and the structure around it."""
from .errors import (AssociativityError, BudgetExceeded, FormatError, NotDiagonalError,
                     SemigroupError, TheoremViolation, WellDefinednessError)
from .semigroup import (Congruence, FiniteSemigroup, SemigroupMorphism, congruence_closure,
                        direct_product, is_isomorphic, make_semigroup, quotient, restrict)
from .groups import builtin_group, is_nilpotent_group, lower_central_series, nilpotent_residual
from .green import FactorKind, compute_green, principal_series
from .rees import (ReesStructure, build_rees, component_partition, incidence_graph,
                   is_cs_diagonal, rees, rees_coordinates)
from .malcev import (SKIP, is_malcev_nilpotent, is_neumann_taylor, is_positively_engel,
                     lambda_rho, nilpotency_class, nonnilpotent_witness)
from .etastar import (all_roots, canonical_projection, eta_star, eta_star_bruteforce,
                      eta_star_root, g_eta_star, rees_eta_star_quotient)
from .representation import (PartialTransformation, factor_representation, gamma_pattern_search,
                             min_nonnilpotent_representation, orbit_notation,
                             parse_orbit_notation, theorem_d2_audit, upper_nonnilpotent_graph)
from .pseudovarieties import (containment_audit, is_block_group, is_clifford, is_completely_regular,
                              is_inverse_semigroup, membership, semilattice_decomposition)
from .corpus import builtin, build_f7, build_paper_example, enumerate_small
from .formats import emit_cayley, emit_rees, load, parse_cayley, parse_rees

__version__ = "0.1.0"

__all__ = [
    "AssociativityError", "BudgetExceeded", "FormatError", "NotDiagonalError", "SemigroupError",
    "TheoremViolation", "WellDefinednessError", "Congruence", "FiniteSemigroup",
    "SemigroupMorphism", "congruence_closure", "direct_product", "is_isomorphic", "make_semigroup",
    "quotient", "restrict", "builtin_group", "is_nilpotent_group", "lower_central_series",
    "nilpotent_residual", "FactorKind", "compute_green", "principal_series", "ReesStructure",
    "build_rees", "component_partition", "incidence_graph", "is_cs_diagonal", "rees",
    "rees_coordinates", "SKIP", "is_malcev_nilpotent", "is_neumann_taylor", "is_positively_engel",
    "lambda_rho", "nilpotency_class", "nonnilpotent_witness", "all_roots", "canonical_projection",
    "eta_star", "eta_star_bruteforce", "eta_star_root", "g_eta_star", "rees_eta_star_quotient",
    "PartialTransformation", "factor_representation", "gamma_pattern_search",
    "min_nonnilpotent_representation", "orbit_notation", "parse_orbit_notation",
    "theorem_d2_audit", "upper_nonnilpotent_graph", "containment_audit", "is_block_group",
    "is_clifford", "is_completely_regular", "is_inverse_semigroup", "membership",
    "semilattice_decomposition", "builtin", "build_f7", "build_paper_example", "enumerate_small",
    "emit_cayley", "emit_rees", "load", "parse_cayley", "parse_rees",
]
