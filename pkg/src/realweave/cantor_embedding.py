"""The doubling map between binary sequences and the ternary Cantor set.

Bit i becomes ternary digit 2*bit at position i+1, so the image is exactly
the reals in [0, 1] whose base-3 expansion avoids the digit 1.  The map is
a bijection, strictly order-preserving, and position-local in both
directions, which is what makes it degree-preserving.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core_reals import DigitStream
from .errors import NotInCantorSetError

CANTOR_BASE = 3


def _check_bits(bits: Iterable[int]) -> tuple[int, ...]:
    out = tuple(bits)
    for b in out:
        if b not in (0, 1):
            raise ValueError(f"bit strings may only contain 0 and 1, got {b!r}")
    return out


@dataclass(frozen=True)
class CantorPoint:
    """A base-3 stream whose digits all lie in {0, 2}."""

    stream: DigitStream

    def __post_init__(self):
        if self.stream.base != CANTOR_BASE:
            raise ValueError("Cantor points live in base 3")
        if self.stream.sign < 0 or self.stream.int_part != 0:
            raise NotInCantorSetError("value outside [0, 1]")
        for d in self.stream.prefix(self.stream.known_prefix_len):
            if d == 1:
                raise NotInCantorSetError("ternary digit 1 is not in the Cantor set")

    def value(self) -> Fraction:
        return self.stream.fraction_value()


def to_cantor(bits: Sequence[int]) -> CantorPoint:
    """Send bit b_i to ternary digit 2*b_i at position i+1."""
    checked = _check_bits(bits)
    digits = [2 * b for b in checked]
    return CantorPoint(DigitStream.from_digits(CANTOR_BASE, digits))


def from_cantor(point: CantorPoint, num_bits: int | None = None) -> tuple[int, ...]:
    """Exact inverse of to_cantor; rejects streams that leave the Cantor set."""
    stream = point.stream
    if num_bits is None:
        num_bits = stream.known_prefix_len
    bits = []
    for k in range(1, num_bits + 1):
        d = stream.digit_at(k)
        if d == 1:
            raise NotInCantorSetError(f"ternary digit 1 at position {k}")
        bits.append(d // 2)
    return tuple(bits)


def cantor_value(bits: Sequence[int]) -> Fraction:
    """Exact rational value of the image point: sum 2*b_i * 3**-(i+1)."""
    return to_cantor(bits).value()
