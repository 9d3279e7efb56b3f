"""Permutations, permutation groups, and two ranking schemes.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its public names. Composition applies the right factor first:
``(p * q)[k] == p[q[k]]``.
"""

from ._core import (
    Perm,
    PermError,
    PermGroup,
    RandomSource,
    commutator_subgroup,
    factorial,
    gcd,
    inversion_vector,
    lcm,
    parse_cycles,
    random_perm,
    rank_lex,
    rank_mr,
    to_cycle_text,
    unrank_lex,
    unrank_mr,
)

__all__ = [
    "Perm",
    "PermError",
    "PermGroup",
    "RandomSource",
    "commutator_subgroup",
    "factorial",
    "gcd",
    "inversion_vector",
    "lcm",
    "parse_cycles",
    "random_perm",
    "rank_lex",
    "rank_mr",
    "to_cycle_text",
    "unrank_lex",
    "unrank_mr",
]

__version__ = "0.1.0"
