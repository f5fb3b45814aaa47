"""Exact computation of quasidegree sets of multigraded modules.

The package computes, over Q and with no floating point anywhere:

* standard pairs and degrees of monomial ideals,
* Groebner bases, syzygies, and free resolutions over multigraded
  polynomial rings,
* quasidegree sets (Zariski closures of the set of nonzero graded pieces)
  of finitely generated modules,
* toric ideals of integer matrices and their normalized volumes,
* degree loci of local cohomology via graded duality, including the
  rank-jump membership test for individual parameter vectors.
"""

from .groebner import (
    GroebnerBasis,
    buchberger,
    divide,
    ideal_equal,
    initial_ideal,
    module_groebner,
    normal_form,
    saturate,
    syzygies,
)
from .homology import (
    FreeResolution,
    GradedPresentation,
    ext_presentation,
    free_resolution,
    qlc,
    qlc_total,
)
from .linalg import IntMatrix, integer_kernel
from .parse import (
    ParseError,
    UnknownVariableError,
    parse_polynomial,
    parse_vector,
    render_polynomial,
)
from .planes import AffinePlane, QuasidegreeSet, plane_contains, remove_redundancy
from .poly import (
    GREVLEX,
    LEX,
    ColumnLatticeError,
    Elimination,
    GradedRing,
    GradingError,
    GradingNotPositiveError,
    GrevLex,
    Lex,
    Polynomial,
    find_heft,
    graded_ring,
    standard_graded_ring,
)
from .qdeg import (
    InhomogeneousError,
    MonomialMatrix,
    NonMonomialEntryError,
    NonSplittingError,
    monomial_matrix_from_vectors,
    quasidegrees_module,
    quasidegrees_monomial,
)
from .stdpairs import StandardPair, degree_via_pairs, standard_pairs
from .toric import (
    lattice_basis_binomials,
    normalized_volume,
    to_a_graded_ring,
    toric_ideal,
)

__all__ = [
    "AffinePlane",
    "ColumnLatticeError",
    "Elimination",
    "FreeResolution",
    "GREVLEX",
    "GradedPresentation",
    "GradedRing",
    "GradingError",
    "GradingNotPositiveError",
    "GrevLex",
    "GroebnerBasis",
    "InhomogeneousError",
    "IntMatrix",
    "LEX",
    "Lex",
    "MonomialMatrix",
    "NonMonomialEntryError",
    "NonSplittingError",
    "ParseError",
    "Polynomial",
    "QuasidegreeSet",
    "StandardPair",
    "UnknownVariableError",
    "buchberger",
    "degree_via_pairs",
    "divide",
    "ext_presentation",
    "find_heft",
    "free_resolution",
    "graded_ring",
    "ideal_equal",
    "initial_ideal",
    "integer_kernel",
    "lattice_basis_binomials",
    "module_groebner",
    "monomial_matrix_from_vectors",
    "normal_form",
    "normalized_volume",
    "parse_polynomial",
    "parse_vector",
    "plane_contains",
    "qlc",
    "qlc_total",
    "quasidegrees_module",
    "quasidegrees_monomial",
    "remove_redundancy",
    "render_polynomial",
    "saturate",
    "standard_graded_ring",
    "standard_pairs",
    "syzygies",
    "to_a_graded_ring",
    "toric_ideal",
]
