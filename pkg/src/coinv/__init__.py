"""coinv: exact characters and dimensions of level-k affine sl2 coinvariants.

Five independent computation routes are provided and cross-checked: direct
enumeration of admissible words, transfer-matrix products, closed q-binomial
and fermionic forms, the fusion-ring recursion, and a brute-force straightening
oracle over the Heisenberg current algebra.  All arithmetic is exact.
"""

from .laurent import (
    LaurentPoly,
    TruncatedSeries,
    gauss_binomial,
    inv_qfactorial,
    substitute_scaled,
    truncate_var,
)
from .fusion import (
    dim_coinvariants,
    fuse_element,
    fuse_pair,
    fusion_coefficient,
    fusion_matrix,
    pairing_power,
    reduce_matrix,
)
from .ehf import (
    EhfWord,
    count_ehf,
    direct_character,
    enumerate_ehf,
    is_ehf,
    tilde_transfer,
    transfer_character,
    transfer_product_row,
)
from .fermi import c_vector, char_fermionic, discover_offset
from .wspace import (
    EfWord,
    FhWord,
    check_recursions,
    ef_basis,
    ef_character,
    fh_basis,
    fh_character,
    full_w_character,
    limit_character,
    lkn_character,
    lkn_from_w,
    w_character,
)
from .heis import (
    BudgetError,
    NormalWord,
    Vec,
    apply_generator,
    dual_dim,
    relation_space,
    reorder_check,
    w_component_dim,
    word,
)
from .verify import run_suite

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "TruncatedSeries",
    "gauss_binomial",
    "inv_qfactorial",
    "substitute_scaled",
    "truncate_var",
    "dim_coinvariants",
    "fuse_element",
    "fuse_pair",
    "fusion_coefficient",
    "fusion_matrix",
    "pairing_power",
    "reduce_matrix",
    "EhfWord",
    "count_ehf",
    "direct_character",
    "enumerate_ehf",
    "is_ehf",
    "tilde_transfer",
    "transfer_character",
    "transfer_product_row",
    "c_vector",
    "char_fermionic",
    "discover_offset",
    "EfWord",
    "FhWord",
    "check_recursions",
    "ef_basis",
    "ef_character",
    "fh_basis",
    "fh_character",
    "full_w_character",
    "limit_character",
    "lkn_character",
    "lkn_from_w",
    "w_character",
    "BudgetError",
    "NormalWord",
    "Vec",
    "apply_generator",
    "dual_dim",
    "relation_space",
    "reorder_check",
    "w_component_dim",
    "word",
    "run_suite",
]
