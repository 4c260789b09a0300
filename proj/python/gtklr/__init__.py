"""Exact characters of KLRW simple modules and Gelfand-Tsetlin block tables.

Thin wrapper over the C++ core.  Words are strings of digits (ranks up to
9) or comma-separated integers; Laurent polynomials in q are dicts mapping
exponent to integer coefficient.
"""

from ._core import (
    DomainError,
    ResourceError,
    StructuralError,
    block_table,
    canonical_class,
    canonical_form,
    count_red_good,
    enumerate_red_good,
    enumerate_words,
    essentially_same,
    factorize_red_good,
    gk_dimension,
    gl_dim,
    is_essential,
    is_realizable_singular,
    is_red_good,
    iws_predicate,
    product_multiplicity,
    quantum_factorial,
    run_divisor,
    semi_pattern_support,
    simple_characters,
    std_character,
    verify_gl_relations,
    verma_word,
    weight_to_word,
)

__all__ = [
    "DomainError",
    "ResourceError",
    "StructuralError",
    "block_table",
    "canonical_class",
    "canonical_form",
    "count_red_good",
    "enumerate_red_good",
    "enumerate_words",
    "essentially_same",
    "factorize_red_good",
    "gk_dimension",
    "gl_dim",
    "is_essential",
    "is_realizable_singular",
    "is_red_good",
    "iws_predicate",
    "product_multiplicity",
    "quantum_factorial",
    "run_divisor",
    "semi_pattern_support",
    "simple_characters",
    "std_character",
    "verify_gl_relations",
    "verma_word",
    "weight_to_word",
]
