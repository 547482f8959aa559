"""Exact combinatorics of graded blocks over Weyl groups.

Integer and rational arithmetic only: root systems and Weyl group
combinatorics, Kazhdan-Lusztig bases of Hecke algebras, the coinvariant
algebra with its Schubert basis and symmetrizing forms, and the graded
decomposition, Cartan and translation matrices of singular-parabolic
blocks, with every result cross-validated along an independent route.

>>> from klblocks import hecke_algebra, weyl_group
>>> g = weyl_group("A3")
>>> h = hecke_algebra("A3")
>>> h.kl_polynomial(g.word_elem((2,)), g.word_elem((2, 1, 3, 2))).render("q")
'1+q'
"""

from functools import lru_cache

from .blocks import (
    BlockDesc,
    BSReport,
    GradedMatrix,
    NotAntidominantError,
    NotReducedError,
    UnsupportedBlockError,
    bott_samelson_decomposition,
    decomposition_matrix,
    graded_cartan_matrix,
    graded_length_report,
    inverse_decomposition_matrix,
    make_block,
    parabolic_case_decomposition,
    projective_verma_flag,
    singular_case_decomposition,
    standard_block,
    standard_weight,
    translate_onto_wall,
    translate_out_of_wall,
    translation_composite,
    ungraded_specialization,
    vp_center,
    vp_graded_dimension,
)
from .checks import CheckResult, run_all_checks
from .hecke import HeckeAlgebra, HeckeElem, KLTable
from .klcache import cache_path, load_kl_table, save_kl_table
from .laurent import LaurentPoly
from .linalg import det, int_matrix_inverse, rank, rref, solve
from .ratpoly import NonDivisibleError, RatPoly, divide_by_linear
from .roots import RootDatum, UnknownTypeError, build_root_system, cartan_matrix
from .schubert import (
    CellularDatum,
    CoinvariantAlgebra,
    FreeBasisReport,
    NotFreeError,
    NotInParabolicError,
    SchubertElem,
)
from .serialize import (
    matrix_from_csv,
    matrix_from_json,
    matrix_to_csv,
    matrix_to_json,
    matrix_to_table,
    parse_word_label,
    word_label,
)
from .weyl import NotCanonicalError, WeylElem, WeylGroup, weyl_group_of_kind

__version__ = "0.1.0"

__all__ = [
    "BSReport",
    "BlockDesc",
    "CellularDatum",
    "CheckResult",
    "CoinvariantAlgebra",
    "FreeBasisReport",
    "GradedMatrix",
    "HeckeAlgebra",
    "HeckeElem",
    "KLTable",
    "LaurentPoly",
    "NonDivisibleError",
    "NotAntidominantError",
    "NotCanonicalError",
    "NotFreeError",
    "NotInParabolicError",
    "NotReducedError",
    "RatPoly",
    "RootDatum",
    "SchubertElem",
    "UnknownTypeError",
    "UnsupportedBlockError",
    "WeylElem",
    "WeylGroup",
    "bott_samelson_decomposition",
    "build_root_system",
    "cache_path",
    "cartan_matrix",
    "coinvariant_algebra",
    "decomposition_matrix",
    "det",
    "divide_by_linear",
    "graded_cartan_matrix",
    "graded_length_report",
    "hecke_algebra",
    "int_matrix_inverse",
    "inverse_decomposition_matrix",
    "load_kl_table",
    "make_block",
    "matrix_from_csv",
    "matrix_from_json",
    "matrix_to_csv",
    "matrix_to_json",
    "matrix_to_table",
    "parabolic_case_decomposition",
    "parse_word_label",
    "projective_verma_flag",
    "rank",
    "rref",
    "run_all_checks",
    "save_kl_table",
    "singular_case_decomposition",
    "solve",
    "standard_block",
    "standard_weight",
    "translate_onto_wall",
    "translate_out_of_wall",
    "translation_composite",
    "ungraded_specialization",
    "vp_center",
    "vp_graded_dimension",
    "weyl_group",
    "weyl_group_of_kind",
    "word_label",
]


@lru_cache(maxsize=None)
def weyl_group(kind: str) -> WeylGroup:
    """Shared Weyl group instance for a type string like 'B3'."""
    return weyl_group_of_kind(kind)


@lru_cache(maxsize=None)
def hecke_algebra(kind: str) -> HeckeAlgebra:
    """Shared Hecke algebra over the shared group of this type."""
    return HeckeAlgebra(weyl_group(kind))


@lru_cache(maxsize=None)
def coinvariant_algebra(kind: str) -> CoinvariantAlgebra:
    """Shared coinvariant algebra over the shared group of this type."""
    return CoinvariantAlgebra(weyl_group(kind))
