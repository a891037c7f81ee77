"""Exact reals on digit streams, interleaving codecs, and monotone-cover analysis."""

from .core_reals import (
    UNDETERMINED,
    CauchyReal,
    DigitStream,
    Ordering,
    RationalInterval,
    SeparationWitness,
    add,
    approx,
    as_fraction,
    compare_separated,
    from_rational,
    mul,
    negate,
    reciprocal,
    to_digits,
)
from . import errors

__all__ = [
    "UNDETERMINED",
    "CauchyReal",
    "DigitStream",
    "Ordering",
    "RationalInterval",
    "SeparationWitness",
    "add",
    "approx",
    "as_fraction",
    "compare_separated",
    "errors",
    "from_rational",
    "mul",
    "negate",
    "reciprocal",
    "to_digits",
]
