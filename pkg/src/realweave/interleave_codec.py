"""Digit-spreading codecs.

A *spread* relocates digit i of a unit-interval stream to position
``stride*i + offset``, leaving every other position zero.  Two spreads with
different offsets modulo the stride have disjoint digit supports, so their
sum is carry-free and each source stream can be read back off by a fixed
positional procedure.  On top of this sit the pair encoding
(z = -spread(x), w = spread(x) + spread(y), so z + w recovers the spread of
y), the join encoding (w alone, with both inputs recoverable), and the
eight-term sum representation that splits y by digit-position residue class.

All operations evaluate exactly on finite digit prefixes; trailing digits
are zero.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core_reals import DigitStream, _check_base
from .errors import DomainError

DEFAULT_STRIDE = 4
PAIR_OFFSET_X = 1
PAIR_OFFSET_Y = 3


@dataclass(frozen=True)
class SpreadSpec:
    """Placement rule for a digit spread: target position stride*i + offset."""

    stride: int = DEFAULT_STRIDE
    offset: int = PAIR_OFFSET_X
    base: int = 10

    def __post_init__(self):
        _check_base(self.base)
        if self.stride < 1:
            raise ValueError(f"stride must be positive, got {self.stride}")
        if not 1 <= self.offset <= self.stride:
            raise ValueError(
                f"offset must lie in [1, {self.stride}], got {self.offset}"
            )

    def target_position(self, i: int) -> int:
        """1-indexed output position of 0-indexed source digit i."""
        return self.stride * i + self.offset

    def output_length(self, prefix_len: int) -> int:
        return 0 if prefix_len == 0 else self.target_position(prefix_len - 1)


@dataclass(frozen=True)
class CodecPair:
    """The pair encoding: z is the negated spread of x, w the carry-free sum
    of both spreads; z + w equals the spread of y exactly."""

    z: DigitStream
    w: DigitStream
    spec_x: SpreadSpec
    spec_y: SpreadSpec


def _require_unit_interval(x: DigitStream, who: str) -> None:
    if x.sign < 0 or x.int_part != 0:
        raise DomainError(f"{who} must lie in [0, 1): sign +, integer part 0")


def digitwise_add(a: DigitStream, b: DigitStream) -> DigitStream:
    """Positionwise sum of two non-negative streams with disjoint supports."""
    if a.base != b.base:
        raise ValueError(f"mixed bases: {a.base} vs {b.base}")
    if a.sign < 0 or b.sign < 0:
        raise ValueError("digitwise addition expects non-negative streams")
    n = max(a.known_prefix_len, b.known_prefix_len)
    da, db = a.prefix(n), b.prefix(n)
    out = []
    for pos, (x, y) in enumerate(zip(da, db), start=1):
        if x and y:
            raise ValueError(f"digit supports collide at position {pos}")
        out.append(x + y)
    return DigitStream.from_digits(a.base, out, int_part=a.int_part + b.int_part)


def supports_disjoint(a: DigitStream, b: DigitStream, upto: int) -> bool:
    """True when no position <= upto has nonzero digits in both streams."""
    da, db = a.prefix(upto), b.prefix(upto)
    return all(not (x and y) for x, y in zip(da, db))


def spread(x: DigitStream, spec: SpreadSpec, prefix_len: int) -> DigitStream:
    """Relocate digit i of x to position stride*i + offset; exact, carry-free."""
    _require_unit_interval(x, "spread input")
    if x.base != spec.base:
        raise ValueError(f"stream base {x.base} differs from spec base {spec.base}")
    source = x.prefix(prefix_len)
    out = [0] * spec.output_length(prefix_len)
    out[spec.offset - 1 :: spec.stride] = source
    return DigitStream.from_digits(spec.base, out)


def unspread(s: DigitStream, spec: SpreadSpec, prefix_len: int) -> DigitStream:
    """Read off the digits at positions stride*i + offset; left inverse of spread."""
    window = s.prefix(spec.output_length(prefix_len))
    return DigitStream.from_digits(spec.base, window[spec.offset - 1 :: spec.stride])


def encode_pair(x: DigitStream, y: DigitStream, prefix_len: int) -> CodecPair:
    """Encode (x, y) into (z, w) with z + w equal to the spread of y."""
    base = x.base
    spec_x = SpreadSpec(DEFAULT_STRIDE, PAIR_OFFSET_X, base)
    spec_y = SpreadSpec(DEFAULT_STRIDE, PAIR_OFFSET_Y, base)
    _require_unit_interval(y, "pair input y")
    s = spread(x, spec_x, prefix_len)
    t = spread(y, spec_y, prefix_len)
    w = digitwise_add(s, t)
    z = DigitStream.from_digits(base, s.prefix(s.known_prefix_len), sign=-1)
    return CodecPair(z=z, w=w, spec_x=spec_x, spec_y=spec_y)


def join_encode(x: DigitStream, y: DigitStream, prefix_len: int) -> DigitStream:
    """The carry-free two-offset join; both inputs recoverable by unspread."""
    return encode_pair(x, y, prefix_len).w


def residue_component(y: DigitStream, k: int, prefix_len: int) -> DigitStream:
    """y's digits at positions congruent to k modulo the stride, kept in place."""
    if not 1 <= k <= DEFAULT_STRIDE:
        raise ValueError(f"residue class must lie in [1, {DEFAULT_STRIDE}]")
    digits = y.prefix(prefix_len)
    out = [
        d if (pos % DEFAULT_STRIDE) == (k % DEFAULT_STRIDE) else 0
        for pos, d in enumerate(digits, start=1)
    ]
    return DigitStream.from_digits(y.base, out)


def carrier_offset(k: int) -> int:
    """Offset used for the carrier spread paired with residue class k."""
    return (k + 1) % DEFAULT_STRIDE + 1


def sum_representation(
    x: DigitStream, y: DigitStream, prefix_len: int
) -> list[DigitStream]:
    """Express y as the exact sum of eight streams, each carrying x's digits.

    y splits as a_1 + a_2 + a_3 + a_4 by residue class of digit position;
    each a_k is emitted as the pair (z_k, w_k) where w_k adds a carrier
    spread of x at an offset disjoint from class k and z_k cancels it.
    Output order is [z_1, w_1, z_2, w_2, z_3, w_3, z_4, w_4].
    """
    _require_unit_interval(x, "sum-representation carrier x")
    _require_unit_interval(y, "sum-representation input y")
    base = x.base
    terms: list[DigitStream] = []
    for k in range(1, DEFAULT_STRIDE + 1):
        a_k = residue_component(y, k, prefix_len)
        spec_k = SpreadSpec(DEFAULT_STRIDE, carrier_offset(k), base)
        s_k = spread(x, spec_k, prefix_len)
        w_k = digitwise_add(s_k, a_k)
        z_k = DigitStream.from_digits(base, s_k.prefix(s_k.known_prefix_len), sign=-1)
        terms.append(z_k)
        terms.append(w_k)
    return terms
