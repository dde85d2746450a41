"""Z_p Z_{p^2}-additive codes: Gray map, rank, kernel, duality and witness constructions."""

from .analysis import (
    KernelReport,
    RankReport,
    UnsupportedPrime,
    is_gray_linear,
    kernel,
    kernel_code,
    min_hamming_distance,
    rank,
    span_code,
)
from .constructions import (
    AchievabilityTable,
    ColumnDictionary,
    InadmissibleTarget,
    achievability_table,
    construct_kernel_code,
    construct_pair_code,
    construct_rank_code,
    kernel_range,
    pair_range,
    rank_range,
)
from .gray import big_phi, big_phi_inverse, carry_P, hom_distance, hom_weight, p_carry_Pprime, phi, phi_inverse
from .mixed_code import (
    DEFAULT_CAP,
    AdditiveCode,
    CapExceeded,
    CodeType,
    DependentRows,
    GeneratorMatrix,
    InvalidType,
    MalformedCodeFile,
    StandardForm,
    compute_type,
    dual,
    inner_product,
    load_code,
    save_code,
    standardize,
)
from .words import MixedWord

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CAP",
    "achievability_table",
    "AchievabilityTable",
    "AdditiveCode",
    "big_phi",
    "big_phi_inverse",
    "CapExceeded",
    "carry_P",
    "CodeType",
    "ColumnDictionary",
    "compute_type",
    "construct_kernel_code",
    "construct_pair_code",
    "construct_rank_code",
    "DependentRows",
    "dual",
    "GeneratorMatrix",
    "hom_distance",
    "hom_weight",
    "InadmissibleTarget",
    "inner_product",
    "InvalidType",
    "is_gray_linear",
    "kernel",
    "kernel_code",
    "kernel_range",
    "KernelReport",
    "load_code",
    "MalformedCodeFile",
    "min_hamming_distance",
    "MixedWord",
    "p_carry_Pprime",
    "pair_range",
    "phi",
    "phi_inverse",
    "rank",
    "rank_range",
    "RankReport",
    "save_code",
    "span_code",
    "StandardForm",
    "standardize",
    "UnsupportedPrime",
]
