"""Tests for the digit-spreading codecs.

Expected values are frozen from exact rational summation of the defining
series: a spread of digits d_0..d_{n-1} is worth
sum d_i * base**-(stride*i + offset).
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realweave import DigitStream, from_rational
from realweave.errors import DomainError
from realweave.interleave_codec import (
    CodecPair,
    SpreadSpec,
    carrier_offset,
    digitwise_add,
    encode_pair,
    join_encode,
    residue_component,
    spread,
    sum_representation,
    supports_disjoint,
    unspread,
)


def spread_series_value(digits, stride, offset, base=10) -> Fraction:
    """Independent oracle: exact rational sum of the spread series."""
    return sum(
        (Fraction(d, base ** (stride * i + offset)) for i, d in enumerate(digits)),
        Fraction(0),
    )


def unit_stream(digits, base=10) -> DigitStream:
    return DigitStream.from_digits(base, list(digits))


digit_lists = st.lists(st.integers(min_value=0, max_value=9), min_size=0, max_size=64)


class TestSpread:
    def test_offset_one_example(self):
        s = spread(unit_stream([1, 2, 3]), SpreadSpec(4, 1), 3)
        assert s.fraction_value() == Fraction(100020003, 10**9)
        assert s.fraction_value() == spread_series_value([1, 2, 3], 4, 1)

    def test_offset_three_example(self):
        s = spread(unit_stream([2, 5]), SpreadSpec(4, 3), 2)
        assert s.fraction_value() == Fraction(20005, 10**7)
        assert s.fraction_value() == spread_series_value([2, 5], 4, 3)

    def test_zero_stream(self):
        s = spread(unit_stream([0, 0, 0]), SpreadSpec(4, 1), 3)
        assert s.fraction_value() == 0

    def test_rejects_values_outside_unit_interval(self):
        with pytest.raises(DomainError):
            spread(DigitStream.from_digits(10, [5], int_part=1), SpreadSpec(), 1)
        with pytest.raises(DomainError):
            spread(DigitStream.from_digits(10, [5], sign=-1), SpreadSpec(), 1)

    @given(digits=digit_lists, offset=st.integers(1, 4))
    def test_matches_series_oracle(self, digits, offset):
        spec = SpreadSpec(4, offset)
        s = spread(unit_stream(digits), spec, len(digits))
        assert s.fraction_value() == spread_series_value(digits, 4, offset)

    @given(digits=digit_lists, offset=st.integers(1, 4))
    def test_unspread_inverts(self, digits, offset):
        spec = SpreadSpec(4, offset)
        s = spread(unit_stream(digits), spec, len(digits))
        back = unspread(s, spec, len(digits))
        assert back.prefix(len(digits)) == list(digits)

    def test_unspread_examples(self):
        s = unit_stream([1, 0, 0, 0, 2, 0, 0, 0, 3])
        assert unspread(s, SpreadSpec(4, 1), 3).prefix(3) == [1, 2, 3]
        assert unspread(unit_stream([]), SpreadSpec(4, 1), 3).fraction_value() == 0

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            SpreadSpec(4, 0)
        with pytest.raises(ValueError):
            SpreadSpec(4, 5)


class TestEncodePair:
    def test_half_quarter_example(self):
        x = unit_stream([5])
        y = unit_stream([2, 5])
        pair = encode_pair(x, y, 2)
        assert pair.z.prefix_fraction(pair.z.known_prefix_len) == Fraction(-1, 2)
        assert pair.w.fraction_value() == Fraction(5020005, 10**7)
        total = pair.z.prefix_fraction(8) + pair.w.fraction_value()
        assert total == Fraction(20005, 10**7)
        assert unspread(pair.w, pair.spec_y, 2).prefix(2) == [2, 5]

    def test_zero_y(self):
        x = unit_stream([7, 1])
        pair = encode_pair(x, unit_stream([]), 2)
        s = spread(x, pair.spec_x, 2)
        assert pair.w.fraction_value() == s.fraction_value()
        assert pair.z.prefix_fraction(8) == -s.fraction_value()
        assert pair.z.prefix_fraction(8) + pair.w.fraction_value() == 0

    def test_tenth_example(self):
        pair = encode_pair(unit_stream([1]), unit_stream([3]), 1)
        assert pair.z.prefix_fraction(4) == Fraction(-1, 10)
        assert pair.w.fraction_value() == Fraction(103, 10**3)
        residue = pair.z.prefix_fraction(4) + pair.w.fraction_value()
        assert residue == Fraction(3, 10**3)
        assert unspread(pair.w, pair.spec_y, 1).prefix(1) == [3]

    @given(xd=digit_lists, yd=digit_lists)
    @settings(max_examples=200)
    def test_pair_identity_and_round_trip(self, xd, yd):
        n = max(len(xd), len(yd))
        pair = encode_pair(unit_stream(xd), unit_stream(yd), n)
        t = spread(unit_stream(yd), pair.spec_y, n)
        z_value = pair.z.prefix_fraction(pair.z.known_prefix_len)
        assert z_value + pair.w.fraction_value() == t.fraction_value()
        assert unspread(pair.w, pair.spec_x, n).prefix(len(xd)) == list(xd)
        assert unspread(pair.w, pair.spec_y, n).prefix(len(yd)) == list(yd)

    @given(xd=digit_lists, yd=digit_lists)
    def test_carry_freedom(self, xd, yd):
        n = max(len(xd), len(yd), 1)
        sx = spread(unit_stream(xd), SpreadSpec(4, 1), n)
        sy = spread(unit_stream(yd), SpreadSpec(4, 3), n)
        upto = 4 * n + 4
        assert supports_disjoint(sx, sy, upto)
        total = digitwise_add(sx, sy)
        merged = [max(a, b) for a, b in zip(sx.prefix(upto), sy.prefix(upto))]
        assert total.prefix(upto) == merged


class TestJoinEncode:
    def test_join_example(self):
        w = join_encode(unit_stream([5]), unit_stream([2, 5]), 2)
        assert w.fraction_value() == Fraction(5020005, 10**7)
        assert unspread(w, SpreadSpec(4, 1), 2).prefix(1) == [5]
        assert unspread(w, SpreadSpec(4, 3), 2).prefix(2) == [2, 5]

    def test_join_zero(self):
        assert join_encode(unit_stream([]), unit_stream([]), 0).fraction_value() == 0

    @given(xd=digit_lists)
    def test_join_self(self, xd):
        w = join_encode(unit_stream(xd), unit_stream(xd), len(xd))
        for offset in (1, 3):
            assert unspread(w, SpreadSpec(4, offset), len(xd)).prefix(len(xd)) == list(xd)


class TestSumRepresentation:
    def test_residue_split_example(self):
        y = unit_stream([1, 2, 3, 4])
        parts = [residue_component(y, k, 4).fraction_value() for k in (1, 2, 3, 4)]
        assert parts == [
            Fraction(1, 10),
            Fraction(2, 100),
            Fraction(3, 1000),
            Fraction(4, 10000),
        ]

    def test_eight_terms_sum_to_y(self):
        x = unit_stream([9, 8])
        y = unit_stream([1, 2, 3, 4])
        terms = sum_representation(x, y, 4)
        assert len(terms) == 8
        total = sum(t.prefix_fraction(40) for t in terms)
        assert total == Fraction(1234, 10**4)

    def test_zero_case(self):
        terms = sum_representation(unit_stream([3]), unit_stream([]), 1)
        assert sum(t.prefix_fraction(16) for t in terms) == 0

    def test_y_equals_x(self):
        x = unit_stream([4, 7, 1])
        terms = sum_representation(x, x, 3)
        assert sum(t.prefix_fraction(24) for t in terms) == x.fraction_value()
        for k in range(1, 5):
            w_k = terms[2 * k - 1]
            spec = SpreadSpec(4, carrier_offset(k))
            assert unspread(w_k, spec, 3).prefix(3) == [4, 7, 1]

    @given(xd=digit_lists, yd=digit_lists)
    @settings(max_examples=100)
    def test_sum_identity_and_decodability(self, xd, yd):
        n = max(len(xd), len(yd))
        x, y = unit_stream(xd), unit_stream(yd)
        terms = sum_representation(x, y, n)
        depth = 4 * n + 8
        assert sum(t.prefix_fraction(depth) for t in terms) == y.prefix_fraction(n)
        for k in range(1, 5):
            spec = SpreadSpec(4, carrier_offset(k))
            w_k = terms[2 * k - 1]
            assert unspread(w_k, spec, n).prefix(len(xd)) == list(xd)

    def test_carrier_offsets_avoid_residue(self):
        assert [carrier_offset(k) for k in (1, 2, 3, 4)] == [3, 4, 1, 2]
        for k in range(1, 5):
            assert carrier_offset(k) % 4 != k % 4
