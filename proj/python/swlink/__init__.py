"""Exact braid invariants and torus-surgery calculus.

The heavy lifting lives in the compiled extension; this package re-exports
its surface. Polynomials are `LaurentPoly` objects; blocks, triples, and
verdicts travel as plain dicts in the same shape the CLI prints.
"""

from swlink._core import (
    BraidWord,
    DomainError,
    LaurentPoly,
    ParseError,
    __version__,
    adjunction_check,
    alexander,
    associate_equal,
    basic_classes,
    check_symmetry,
    collapse_to,
    cover_pushforward,
    distinguish,
    family_equal,
    family_membership,
    fibersum_relative,
    hosokawa,
    knot_surgery,
    link_surgery,
    mms_evaluate,
    normalize_units,
    simple_cover_obstruction,
    specialize,
    strands_from_genus,
    symmetrize,
    vanishing_flag,
)

__all__ = [
    "BraidWord",
    "DomainError",
    "LaurentPoly",
    "ParseError",
    "__version__",
    "adjunction_check",
    "alexander",
    "associate_equal",
    "basic_classes",
    "check_symmetry",
    "collapse_to",
    "cover_pushforward",
    "distinguish",
    "family_equal",
    "family_membership",
    "fibersum_relative",
    "hosokawa",
    "knot_surgery",
    "link_surgery",
    "mms_evaluate",
    "normalize_units",
    "simple_cover_obstruction",
    "specialize",
    "strands_from_genus",
    "symmetrize",
    "vanishing_flag",
]
