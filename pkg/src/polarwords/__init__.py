"""polarwords: one number counted three ways over F_2.

g(n) = (2^n + 1)(2^(n-1) + 1)/3 shows up as the size of a 4-letter
restricted-growth language, as the size of a family of subspaces of F_2^n
cut out by four echelon-basis conditions, and as the dimension of the
GF(2) point module of the rank-n symplectic polar space modulo its
line-sum relations.  This package computes all three, the explicit
bijection between the first two, and exhaustive cross-checks.
"""

from .bijection import (
    BijectionReport,
    BijectionTable,
    base_table,
    full_table,
    subspace_to_word,
    verify_bijection,
    word_to_subspace,
)
from .errors import GuardError, InvalidWordError
from .gf2 import (
    Gf2Subspace,
    Gf2Vector,
    canonicalize,
    delete_coordinate,
    enumerate_subspaces,
    gaussian_binomial,
    insert_zero_coordinate,
    order_gt,
    rank,
)
from .language import (
    CaseLabel,
    classify_word,
    count_words,
    enumerate_words,
    erase,
    g,
    is_valid,
    word_expand,
    word_reduce,
)
from .nset import (
    NMembershipReport,
    classify_subspace,
    enumerate_N,
    is_N,
    subspace_expand,
    subspace_reduce,
)
from .polarspace import (
    PolarGeometry,
    QuotientBasis,
    StrataReport,
    build_geometry,
    export_incidence,
    quotient_basis,
    strata,
    symplectic_form,
    udim,
)

__version__ = "0.1.0"

__all__ = [
    "BijectionReport",
    "BijectionTable",
    "CaseLabel",
    "Gf2Subspace",
    "Gf2Vector",
    "GuardError",
    "InvalidWordError",
    "NMembershipReport",
    "PolarGeometry",
    "QuotientBasis",
    "StrataReport",
    "base_table",
    "build_geometry",
    "canonicalize",
    "classify_subspace",
    "classify_word",
    "count_words",
    "delete_coordinate",
    "enumerate_N",
    "enumerate_subspaces",
    "enumerate_words",
    "erase",
    "export_incidence",
    "full_table",
    "g",
    "gaussian_binomial",
    "insert_zero_coordinate",
    "is_N",
    "is_valid",
    "order_gt",
    "quotient_basis",
    "rank",
    "strata",
    "subspace_expand",
    "subspace_reduce",
    "subspace_to_word",
    "symplectic_form",
    "udim",
    "verify_bijection",
    "word_expand",
    "word_reduce",
    "word_to_subspace",
]
