"""Exact twist-group cocycle computations on the character lattice.

Classes are coordinate tuples (a1, b1, ..., ag, bg). Sparse vectors are dicts
from classes to coefficients; a coefficient is a rational (int, Fraction or
"p/q") or an (re, im) pair. Results always come back as (re, im) Fraction pairs.
"""

from ._core import (
    CocycleError,
    DimensionError,
    DomainError,
    Error,
    LookupError,
    MetadataError,
    OverflowError,
    ParseError,
    act,
    builtin_catalog,
    choose_increasing_twist,
    coboundary,
    decay_constant,
    evaluate,
    intersection,
    is_symplectic,
    orbit,
    s_norms,
    solve,
    transvect,
    twist_matrix,
    verify_relations,
    word_matrix,
)

__all__ = [
    "CocycleError",
    "DimensionError",
    "DomainError",
    "Error",
    "LookupError",
    "MetadataError",
    "OverflowError",
    "ParseError",
    "act",
    "builtin_catalog",
    "choose_increasing_twist",
    "coboundary",
    "decay_constant",
    "evaluate",
    "intersection",
    "is_symplectic",
    "orbit",
    "s_norms",
    "solve",
    "transvect",
    "twist_matrix",
    "verify_relations",
    "word_matrix",
]
