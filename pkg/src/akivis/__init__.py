"""Exact computer algebra for Z2-graded nonassociative algebras.

The package represents finite-dimensional superalgebras over the rationals
by their structure constants, derives and verifies Akivis-superalgebra
structures (superanticommutative bracket plus a compatible ternary map),
ships the classical examples (octonions with their Z2-grading, matrix
quasialgebras), and computes in a degree-filtered enveloping algebra whose
basis is explicit PBW-style monomials.

Modules:

* core      -- graded bases, exact sparse vectors, product tables, Akivis
               specs, super-commutators/associators, identity building blocks
* identities-- sweep checks (Akivis, superanticommutativity, Lie,
               Malcev-style) with witness reports and classification
* catalog   -- bundled example algebras and seeded random generators
* envelope  -- graded dimensions, PBW monomial bases, the filtered product,
               embedding and leading-term verification
* algfile   -- a line-based text format for algebras, parse and emit
* exprs     -- bracket/ternary/product expressions over a basis, evaluated
               against tables, specs, or the envelope
* cli       -- the `akivis` command
"""

from .algfile import AlgebraFileError, emit_algebra, load_algebra, parse_algebra
from .catalog import (
    CATALOG,
    build_matrix_quasialgebra,
    build_octonions,
    build_quaternions,
    build_trivial_akivis,
    catalog_names,
)
from .core import (
    AkivisSpec,
    AlgebraError,
    BasisMismatchError,
    GradedBasis,
    GradingError,
    SuperTable,
    Vector,
    associator,
    bracket_eval,
    derive_akivis,
    koszul,
    linear_combine,
    multiply,
    super_commutator,
    super_jacobian,
    ternary_eval,
)
from .envelope import (
    CapacityError,
    EnvElement,
    NotApplicableError,
    PBWMonomial,
    TruncationError,
    TruncationPolicy,
    env_eval,
    graded_dim,
    iota_roundtrip,
    pbw_basis,
    star,
    star_associator,
    star_super_commutator,
    verify_embedding_relations,
    verify_leading_term,
)
from .exprs import ExprError, eval_in_envelope, eval_in_spec, eval_in_table, parse_expr
from .identities import (
    CheckReport,
    Witness,
    check_akivis_identity,
    check_lie,
    check_malcev_instance,
    check_malcev_ternary,
    check_superanticommutative,
    classify,
    run_check,
)

__version__ = "0.1.0"

__all__ = [
    "AkivisSpec",
    "AlgebraError",
    "AlgebraFileError",
    "BasisMismatchError",
    "CATALOG",
    "CapacityError",
    "CheckReport",
    "EnvElement",
    "ExprError",
    "GradedBasis",
    "GradingError",
    "NotApplicableError",
    "PBWMonomial",
    "SuperTable",
    "TruncationError",
    "TruncationPolicy",
    "Vector",
    "Witness",
    "associator",
    "bracket_eval",
    "build_matrix_quasialgebra",
    "build_octonions",
    "build_quaternions",
    "build_trivial_akivis",
    "catalog_names",
    "check_akivis_identity",
    "check_lie",
    "check_malcev_instance",
    "check_malcev_ternary",
    "check_superanticommutative",
    "classify",
    "derive_akivis",
    "emit_algebra",
    "env_eval",
    "eval_in_envelope",
    "eval_in_spec",
    "eval_in_table",
    "graded_dim",
    "iota_roundtrip",
    "koszul",
    "linear_combine",
    "load_algebra",
    "multiply",
    "parse_algebra",
    "parse_expr",
    "pbw_basis",
    "run_check",
    "star",
    "star_associator",
    "star_super_commutator",
    "super_commutator",
    "super_jacobian",
    "ternary_eval",
    "verify_embedding_relations",
    "verify_leading_term",
]
