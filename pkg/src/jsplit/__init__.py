"""Exact computation in orthosymplectic Jordan superalgebras.

Structure-constant construction of Josp(n|2m) and its irreducible modules,
graded identity verification, Peirce decompositions, and an exact linear
solver that either lifts a square-zero radical extension to a Wedderburn
splitting or certifies that no splitting exists.
"""

from .ratlinalg import (
    GaussSolver,
    LinearSolution,
    RatMatrix,
    Rational,
    nullspace,
    rank,
    solve_linear,
)
from .superalgebra import (
    Element,
    GrassmannAlgebra,
    IdentityReport,
    Superalgebra,
    check_plain_jordan,
    check_super_jordan,
    check_supercommutative,
    envelope_jordan_report,
    grassmann_envelope,
    multiply,
)
from .josp import (
    JIdx,
    SkewIdx,
    SuperMatrix,
    build_josp_matrix,
    build_josp_table,
    josp_basis,
    josp_dim,
    osp,
    skew_basis,
    skew_dim,
    structure_iso_check,
    superinvolution_laws,
)
from .bimodule import (
    BurnsideResult,
    Superbimodule,
    direct_sum,
    hom_space,
    is_irreducible_burnside,
    opposite,
    regular_bimodule,
    skew_bimodule,
    split_null_extension,
)
from .structure import (
    IdempotentFamily,
    PeirceDecomposition,
    peirce_decompose,
    verify_idempotent_family,
    verify_peirce_relations,
)
from .splitting import (
    CorrectionMap,
    JordanValidationError,
    MarkedExtension,
    SplitCertificate,
    build_counterexample,
    build_skew11_extension,
    perturb_section,
    radical_bimodule,
    solve_splitting,
    splitting_system,
    trivial_extension,
    verify_lemma_relations,
    verify_splitting,
)

__version__ = "0.1.0"
