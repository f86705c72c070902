"""Exact computation and verification for the two-mode boson realization
of sp(4,R) and its q-deformations on a truncated Fock space.

Coefficients are Laurent polynomials in s = q^(1/4) over exact rationals;
every algebraic identity is checked on a truncation-safe subspace, with
tolerance-checked numeric evaluation as a second, independent route.
"""

from .algebras import (
    CASIMIR_NAMES,
    FAMILIES,
    GeneratorSet,
    Relation,
    build,
    canonical_relations,
    casimir,
    casimir_family,
    catalog_manifest,
    exact_context,
    find_relation,
    numeric_context,
    relation_catalog,
    resolve_casimirs,
)
from .fock import FockSpace, FockState, TripleConvention, TripleLabel
from .ops import QOperator, SafeSubspace, diagonal_spectrum, first_witness
from .qnum import LaurentPoly, Q, QRationalFn, q_bracket, q_factorial, q_int
from .verify import (
    Report,
    SpectrumTable,
    casimir_table,
    check_all,
    check_basis_construction,
    check_ladder_actions,
    check_relation,
    check_series_expansions,
    classical_degeneration,
    full_suite,
    pyramid_text,
    reports_to_json,
    spectrum_table_text,
    structural_checks,
    summarize,
)

__version__ = "0.1.0"

__all__ = [
    "CASIMIR_NAMES",
    "FAMILIES",
    "FockSpace",
    "FockState",
    "GeneratorSet",
    "LaurentPoly",
    "Q",
    "QOperator",
    "QRationalFn",
    "Relation",
    "Report",
    "SafeSubspace",
    "SpectrumTable",
    "TripleConvention",
    "TripleLabel",
    "build",
    "canonical_relations",
    "casimir",
    "casimir_family",
    "casimir_table",
    "catalog_manifest",
    "check_all",
    "check_basis_construction",
    "check_ladder_actions",
    "check_relation",
    "check_series_expansions",
    "classical_degeneration",
    "diagonal_spectrum",
    "exact_context",
    "find_relation",
    "first_witness",
    "full_suite",
    "numeric_context",
    "pyramid_text",
    "q_bracket",
    "q_factorial",
    "q_int",
    "relation_catalog",
    "reports_to_json",
    "resolve_casimirs",
    "spectrum_table_text",
    "structural_checks",
    "summarize",
]
