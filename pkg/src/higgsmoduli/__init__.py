"""
Exact topological invariants of rank-2 moduli spaces over a genus-g curve.

Everything is computed in exact integer (or rational) arithmetic: Poincare
polynomials of the moduli spaces of stable bundles and of Higgs bundles,
each by two independent pipelines; the rank-2 topological mirror-symmetry
identity between E-polynomials, checked element by element; dimension and
spectral-curve numerology; and a combinatorial GIT stability toolkit.
"""

from .exactpoly import (
    BivarPoly,
    IntPoly,
    NonDivisible,
    TailNonzero,
    TruncSeries,
    ZeroConstantTerm,
    bivar_eval_signed_binomial,
    coeff_extract_x,
    poly_exact_div,
    series_expand,
)
from .bundles import (
    classifying_space_poly,
    poincare_N_closed,
    poincare_N_recursion,
    recursion_strata_count,
    strata_equivariant_poly,
)
from .higgs import (
    DegreeOverflow,
    StratumIndex,
    bb_codimension,
    fixed_locus_poincare,
    poincare_M_closed,
    poincare_M_stratified,
)
from .mirror import (
    Character,
    Gamma2Element,
    IdentityViolation,
    LengthMismatch,
    MirrorReport,
    TrivialCharacter,
    TrivialElement,
    e_poly_kappa_lhs,
    e_poly_rhs,
    fermionic_shift,
    mirror_verify,
    prym_e_poly,
    weil_pairing,
)
from .geometry import (
    HNType,
    IncompatibleTypes,
    ModuliParams,
    SpectralNumbers,
    UnsupportedCombination,
    hilbert_poly,
    hitchin_base_dim,
    hn_codim_rank2,
    hn_leq,
    moduli_dim,
    spectral_numbers,
)
from .stability import (
    Block,
    EmptyProfile,
    ExpressionMismatch,
    FiltrationData,
    NonIntegerWeight,
    NonPositiveEuler,
    Stability,
    WeightProfile,
    hm_weight,
    quotient_semistability_test,
    torus_classify,
)

__version__ = "0.1.0"

__all__ = [
    "BivarPoly",
    "IntPoly",
    "NonDivisible",
    "TailNonzero",
    "TruncSeries",
    "ZeroConstantTerm",
    "bivar_eval_signed_binomial",
    "coeff_extract_x",
    "poly_exact_div",
    "series_expand",
    "classifying_space_poly",
    "poincare_N_closed",
    "poincare_N_recursion",
    "recursion_strata_count",
    "strata_equivariant_poly",
    "DegreeOverflow",
    "StratumIndex",
    "bb_codimension",
    "fixed_locus_poincare",
    "poincare_M_closed",
    "poincare_M_stratified",
    "Character",
    "Gamma2Element",
    "IdentityViolation",
    "LengthMismatch",
    "MirrorReport",
    "TrivialCharacter",
    "TrivialElement",
    "e_poly_kappa_lhs",
    "e_poly_rhs",
    "fermionic_shift",
    "mirror_verify",
    "prym_e_poly",
    "weil_pairing",
    "HNType",
    "IncompatibleTypes",
    "ModuliParams",
    "SpectralNumbers",
    "UnsupportedCombination",
    "hilbert_poly",
    "hitchin_base_dim",
    "hn_codim_rank2",
    "hn_leq",
    "moduli_dim",
    "spectral_numbers",
    "Block",
    "EmptyProfile",
    "ExpressionMismatch",
    "FiltrationData",
    "NonIntegerWeight",
    "NonPositiveEuler",
    "Stability",
    "WeightProfile",
    "hm_weight",
    "quotient_semistability_test",
    "torus_classify",
    "__version__",
]
