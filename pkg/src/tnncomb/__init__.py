"""Exact computations around totally nonnegative matrices.

Submodules: ``exact_core`` (rational matrices, minors, factorization),
``planar_network``, ``tableaux`` and ``lr`` (partitions, tableaux, jeu de
taquin, Littlewood-Richardson), ``symfunc``, ``minor_ineq`` and
``realroots``.
"""

from .errors import (
    DegreeBoundError,
    DomainError,
    GuardExceeded,
    InvalidNetworkError,
    NotTotallyNonnegativeError,
    SingularMatrixError,
)
from .exact_core import (
    Matrix,
    char_poly,
    exterior_power,
    is_totally_nonnegative,
    is_totally_positive,
    minor,
    neville_factorize,
    parse_matrix,
)
from .lr import lr_multiply, skew_schur_expand
from .minor_ineq import Coloring, compare, lattice_partition, poset, tl_basis, tl_subset, verify_inequality_on
from .planar_network import (
    PlanarNetwork,
    concatenate,
    disjoint_family_weight,
    elementary_network,
    network_from_tnn,
    validate,
    vandermonde_network,
    weight_matrix,
)
from .polynomial import Poly, parse_poly
from .rational import Rat
from .realroots import (
    certify_real_distinct,
    hankel_matrix,
    power_sums_from_coeffs,
    sturm_real_root_count,
    toeplitz_refute,
)
from .symfunc import SymFn, convert, is_schur_positive, jacobi_trudi, monomial_expansion, schur_positive_difference
from .tableaux import SkewShape, Tableau, column_suffix, content, enumerate_ssyt, jeu_de_taquin, reading_word

__all__ = [
    "Coloring",
    "DegreeBoundError",
    "DomainError",
    "GuardExceeded",
    "InvalidNetworkError",
    "Matrix",
    "NotTotallyNonnegativeError",
    "PlanarNetwork",
    "Poly",
    "Rat",
    "SingularMatrixError",
    "SkewShape",
    "SymFn",
    "Tableau",
    "certify_real_distinct",
    "char_poly",
    "column_suffix",
    "compare",
    "concatenate",
    "content",
    "convert",
    "disjoint_family_weight",
    "elementary_network",
    "enumerate_ssyt",
    "exterior_power",
    "hankel_matrix",
    "is_schur_positive",
    "is_totally_nonnegative",
    "is_totally_positive",
    "jacobi_trudi",
    "jeu_de_taquin",
    "lattice_partition",
    "lr_multiply",
    "minor",
    "monomial_expansion",
    "neville_factorize",
    "network_from_tnn",
    "parse_matrix",
    "parse_poly",
    "poset",
    "power_sums_from_coeffs",
    "reading_word",
    "schur_positive_difference",
    "skew_schur_expand",
    "sturm_real_root_count",
    "tl_basis",
    "tl_subset",
    "toeplitz_refute",
    "validate",
    "vandermonde_network",
    "verify_inequality_on",
    "weight_matrix",
]
