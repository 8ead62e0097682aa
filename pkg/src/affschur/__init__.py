"""Exact-arithmetic engine for affine Schur algebras over the integers, their
stabilized multiplication with integer-valued-polynomial structure constants,
and the integral loop-algebra realization built on top of it, together with
an independent double-coset oracle that certifies the closed product formulas
on small instances."""

from .intpoly import IntPoly, binom, multinom, weight_binom
from .loopalg import (
    BracketElement,
    PBWMonomial,
    VElement,
    coproduct_gen,
    coproduct_word,
    eval_at_level,
    from_pbw,
    from_power_basis,
    generator_words,
    loop_relations_report,
    mul_diag,
    mul_lowering,
    mul_raising,
    surjectivity_certificates,
    to_power_basis,
    vmul,
)
from .periodic import PeriodicMatrix, Weight, corner_leq, corner_lt, theta_matrices
from .schur import (
    SchurElement,
    TriangularityViolation,
    bracket,
    brace,
    chunk_decomposition,
    mul,
    mul_ss_lower,
    mul_ss_upper,
    radical_word,
    tau,
    triangular_basis,
)
from .stab import (
    KElement,
    kmul,
    kmul_ss_lower,
    kmul_ss_upper,
    specialize_at_zero,
    stabilization_report,
    truncate_to_schur,
)
from .weyl import (
    AffinePermutation,
    CosetTriple,
    coset_to_matrix,
    double_coset,
    is_min_rep,
    matrix_to_coset,
    oracle_mul,
    young_subgroup,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
