"""Exact real arithmetic on digit streams and nested rational intervals.

Two representations are provided and bridged:

* :class:`DigitStream` -- a base-B positional expansion, evaluated lazily,
  with deterministic digit queries.
* :class:`CauchyReal` -- a real given as an oracle from precision indices to
  nested rational intervals of width at most ``base**-n``.

All arithmetic is exact: intervals carry :class:`fractions.Fraction`
endpoints, never floats.  Comparison and reciprocal are total only in the
presence of a :class:`SeparationWitness`; digit extraction from an oracle is
fuel-bounded and may come back :data:`UNDETERMINED`.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .errors import (
    InvalidBaseError,
    OracleContractError,
    UndeterminedDigitError,
    WitnessViolationError,
)

RationalLike = Union[Fraction, int, str]


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce ints, strings like ``p/q`` or ``1.26``, and Fractions."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def _check_base(base: int) -> int:
    if not isinstance(base, int) or base < 2:
        raise InvalidBaseError(f"base must be an integer >= 2, got {base!r}")
    return base


def ceil_log(base: int, value: Fraction) -> int:
    """Smallest k >= 0 with base**k >= value."""
    k = 0
    power = Fraction(1)
    while power < value:
        power *= base
        k += 1
    return k


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: {self.lo} > {self.hi}")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, value: RationalLike) -> bool:
        v = as_fraction(value)
        return self.lo <= v <= self.hi

    def contains_interval(self, other: "RationalInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersect(self, other: "RationalInterval") -> "RationalInterval":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            raise OracleContractError(
                f"intervals [{self.lo}, {self.hi}] and [{other.lo}, {other.hi}] are disjoint"
            )
        return RationalInterval(lo, hi)

    def __add__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    def __neg__(self) -> "RationalInterval":
        return RationalInterval(-self.hi, -self.lo)

    def __mul__(self, other: "RationalInterval") -> "RationalInterval":
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RationalInterval(min(products), max(products))

    def reciprocal(self) -> "RationalInterval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval straddles zero")
        return RationalInterval(1 / self.hi, 1 / self.lo)

    def excludes_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def magnitude_bound(self) -> Fraction:
        return max(abs(self.lo), abs(self.hi))


@dataclass(frozen=True)
class SeparationWitness:
    """Caller-asserted positive lower bound on |a - b| (or on |a|)."""

    gap: Fraction

    def __post_init__(self):
        object.__setattr__(self, "gap", as_fraction(self.gap))
        if self.gap <= 0:
            raise ValueError(f"separation gap must be positive, got {self.gap}")


class _UndeterminedType:
    """Singleton returned when digit extraction runs out of fuel."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Undetermined"

    def __bool__(self):
        return False


UNDETERMINED = _UndeterminedType()


class DigitStream:
    """A real in sign * (int_part + sum digit_k * base**-k) form.

    Digits are indexed from 1 and queried through :meth:`digit_at`; queries
    are cached, so repeated queries always agree.  A stream is *finitely
    specified* when constructed from an explicit digit list, in which case
    all trailing digits are zero and the represented value is an exact
    rational.
    """

    def __init__(
        self,
        base: int,
        digits: Optional[Sequence[int]] = None,
        provider: Optional[Callable[[int], int]] = None,
        sign: int = 1,
        int_part: int = 0,
    ):
        self.base = _check_base(base)
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if int_part < 0:
            raise ValueError("int_part must be non-negative")
        self.sign = sign
        self.int_part = int_part
        self._provider = provider
        self._digits: list[int] = list(digits) if digits is not None else []
        self._explicit_len = len(self._digits)
        for d in self._digits:
            self._check_digit(d)
        self._lock = threading.Lock()

    def _check_digit(self, d: int) -> int:
        if not isinstance(d, int) or not 0 <= d < self.base:
            raise ValueError(f"digit {d!r} out of range for base {self.base}")
        return d

    @classmethod
    def from_digits(
        cls, base: int, digits: Sequence[int], sign: int = 1, int_part: int = 0
    ) -> "DigitStream":
        return cls(base, digits=digits, sign=sign, int_part=int_part)

    @property
    def is_finite(self) -> bool:
        return self._provider is None

    @property
    def known_prefix_len(self) -> int:
        return len(self._digits)

    def digit_at(self, k: int) -> int:
        """Digit at position k >= 1 (weight base**-k)."""
        if k < 1:
            raise ValueError("digit positions start at 1")
        if k <= len(self._digits):
            return self._digits[k - 1]
        if self._provider is None:
            return 0
        with self._lock:
            while len(self._digits) < k:
                d = self._check_digit(self._provider(len(self._digits) + 1))
                self._digits.append(d)
        return self._digits[k - 1]

    def prefix(self, n: int) -> list[int]:
        """The first n digits as a list."""
        if n < 0:
            raise ValueError("prefix length must be non-negative")
        if n > len(self._digits) and self._provider is not None:
            self.digit_at(n)
        got = self._digits[:n]
        if len(got) < n:
            got = got + [0] * (n - len(got))
        return got

    def prefix_fraction(self, n: int) -> Fraction:
        """Signed value of the stream truncated after n fractional digits."""
        digits = self.prefix(n)
        frac = _digits_to_fraction(digits, self.base)
        return self.sign * (self.int_part + frac)

    def fraction_value(self) -> Fraction:
        """Exact value; only meaningful for finitely specified streams."""
        if not self.is_finite:
            raise ValueError("stream is not finitely specified")
        return self.prefix_fraction(self._explicit_len)

    def as_cauchy(self) -> "CauchyReal":
        """View this stream as an interval oracle in the same base."""
        base = self.base

        def approx(n: int) -> RationalInterval:
            magnitude_lo = self.int_part + _digits_to_fraction(self.prefix(n), base)
            magnitude_hi = magnitude_lo + Fraction(1, base**n)
            if self.sign > 0:
                return RationalInterval(magnitude_lo, magnitude_hi)
            return RationalInterval(-magnitude_hi, -magnitude_lo)

        return CauchyReal(approx, base=base)

    def __repr__(self):
        shown = self._digits[:12]
        tail = "..." if (self._provider is not None or len(self._digits) > 12) else ""
        s = "-" if self.sign < 0 else ""
        return f"DigitStream(base={self.base}, {s}{self.int_part}.{shown}{tail})"


def _digits_to_fraction(digits: Sequence[int], base: int) -> Fraction:
    n = len(digits)
    if n == 0:
        return Fraction(0)
    if base <= 10:
        numerator = int("".join(map(str, digits)), base) if any(digits) else 0
    else:
        numerator = 0
        for d in digits:
            numerator = numerator * base + d
    return Fraction(numerator, base**n)


def from_rational(p: RationalLike, base: int = 10) -> DigitStream:
    """Expand a rational by long division.

    Rationals with a terminating base-B expansion get the terminating
    (trailing zero) expansion, never the one ending in repeated B-1.
    """
    _check_base(base)
    p = as_fraction(p)
    sign = -1 if p < 0 else 1
    magnitude = abs(p)
    int_part = magnitude.numerator // magnitude.denominator
    state = {"rem": magnitude.numerator % magnitude.denominator}
    den = magnitude.denominator

    def provider(_k: int) -> int:
        r = state["rem"] * base
        state["rem"] = r % den
        return r // den

    return DigitStream(base, provider=provider, sign=sign, int_part=int_part)


class CauchyReal:
    """A real presented as an oracle from precision index to interval.

    ``query(n)`` returns a rational interval containing the value, of width
    at most ``base**-n``, nested inside ``query(n-1)``.  Nestedness is
    enforced by intersecting successive raw answers, so independently
    constructed approximation functions only need to be sound and
    convergent.  Queries are memoized and safe to issue concurrently.
    """

    def __init__(self, approx_fn: Callable[[int], RationalInterval], base: int = 10):
        self.base = _check_base(base)
        self._approx = approx_fn
        self._cache: list[RationalInterval] = []
        self._lock = threading.RLock()

    @classmethod
    def from_fraction(cls, p: RationalLike, base: int = 10) -> "CauchyReal":
        p = as_fraction(p)
        point = RationalInterval(p, p)
        return cls(lambda n: point, base=base)

    def query(self, n: int) -> RationalInterval:
        if n < 0:
            raise ValueError("precision index must be non-negative")
        with self._lock:
            while len(self._cache) <= n:
                m = len(self._cache)
                raw = self._approx(m)
                if raw.width > Fraction(1, self.base**m):
                    raise OracleContractError(
                        f"approximation at precision {m} has width {raw.width}"
                    )
                if self._cache:
                    raw = raw.intersect(self._cache[-1])
                self._cache.append(raw)
            return self._cache[n]

    def __add__(self, other: "CauchyReal") -> "CauchyReal":
        return add(self, other)

    def __neg__(self) -> "CauchyReal":
        return negate(self)

    def __mul__(self, other: "CauchyReal") -> "CauchyReal":
        return mul(self, other)

    def __repr__(self):
        approx = self.query(6)
        return f"CauchyReal(~[{approx.lo}, {approx.hi}], base={self.base})"


def _require_same_base(x: CauchyReal, y: CauchyReal) -> int:
    if x.base != y.base:
        raise ValueError(f"mixed bases: {x.base} vs {y.base}")
    return x.base


def approx(x: CauchyReal, n: int) -> RationalInterval:
    """The oracle's interval at precision n (contains x, width <= base**-n)."""
    return x.query(n)


def add(x: CauchyReal, y: CauchyReal) -> CauchyReal:
    base = _require_same_base(x, y)
    return CauchyReal(lambda n: x.query(n + 1) + y.query(n + 1), base=base)


def negate(x: CauchyReal) -> CauchyReal:
    return CauchyReal(lambda n: -x.query(n), base=x.base)


def mul(x: CauchyReal, y: CauchyReal) -> CauchyReal:
    base = _require_same_base(x, y)
    bound = x.query(0).magnitude_bound() + y.query(0).magnitude_bound() + 1
    offset = ceil_log(base, bound)
    return CauchyReal(lambda n: x.query(n + offset) * y.query(n + offset), base=base)


def _separated_from_zero(x: CauchyReal, witness: SeparationWitness) -> int:
    """First precision at which x's interval excludes zero.

    Raises a witness violation once the interval sits inside
    (-gap, gap); refinement past width gap/2 always resolves one way or
    the other, so this terminates.
    """
    gap = witness.gap
    m = 0
    while True:
        interval = x.query(m)
        if -gap < interval.lo and interval.hi < gap:
            raise WitnessViolationError(
                f"interval [{interval.lo}, {interval.hi}] lies inside (-{gap}, {gap})"
            )
        if interval.excludes_zero():
            return m
        m += 1


def reciprocal(x: CauchyReal, witness: SeparationWitness) -> CauchyReal:
    """1/x, scheduled from the witness gap.  Requires gap <= |x|."""
    base = x.base
    state: dict[str, int] = {}
    lock = threading.Lock()

    def approx_fn(n: int) -> RationalInterval:
        with lock:
            if "m0" not in state:
                m0 = _separated_from_zero(x, witness)
                anchor = x.query(m0)
                floor = min(abs(anchor.lo), abs(anchor.hi))
                state["m0"] = m0
                state["offset"] = ceil_log(base, 1 / (floor * floor))
        m = max(state["m0"], n + state["offset"])
        return x.query(m).reciprocal()

    return CauchyReal(approx_fn, base=base)


class Ordering(Enum):
    LESS = "less"
    GREATER = "greater"


def compare_separated(
    x: CauchyReal, y: CauchyReal, witness: SeparationWitness
) -> Ordering:
    """Order two reals whose distance the caller asserts to be >= gap."""
    base = _require_same_base(x, y)
    limit = ceil_log(base, 2 / witness.gap) + 1
    for m in range(limit + 1):
        ix = x.query(m)
        iy = y.query(m)
        if ix.hi < iy.lo:
            return Ordering.LESS
        if iy.hi < ix.lo:
            return Ordering.GREATER
    raise WitnessViolationError(
        f"no separation found down to width {Fraction(1, base ** limit)}; gap {witness.gap} is wrong"
    )


class _DigitCommitter:
    """Shared state for fuel-bounded digit extraction from an oracle."""

    def __init__(self, x: CauchyReal, base: int, fuel: int, sign: int, int_part: int, precision: int):
        self.x = x
        self.base = base
        self.fuel = fuel
        self.sign = sign
        self.prefix_value = Fraction(int_part)
        self.precision = precision
        self.position = 0
        self.lock = threading.Lock()

    def magnitude(self, interval: RationalInterval) -> RationalInterval:
        if self.sign > 0:
            return interval
        return -interval

    def commit_next(self) -> Optional[int]:
        """Commit the next fractional digit, or None when fuel runs out."""
        with self.lock:
            cell = Fraction(1, self.base ** (self.position + 1))
            for _step in range(self.fuel + 1):
                mag = self.magnitude(self.x.query(self.precision))
                offset = (mag.lo - self.prefix_value) / cell
                d = offset.numerator // offset.denominator
                if 0 <= d < self.base:
                    cell_lo = self.prefix_value + d * cell
                    cell_hi = cell_lo + cell
                    if mag.lo >= cell_lo and mag.hi < cell_hi:
                        self.prefix_value = cell_lo
                        self.position += 1
                        return d
                if _step == self.fuel:
                    break
                self.precision += 1
            return None


def to_digits(
    x: CauchyReal, base: int, fuel: int, num_digits: int = 16
) -> Union[DigitStream, _UndeterminedType]:
    """Extract a digit stream from an oracle, spending at most ``fuel``
    refinement steps per committed item.

    Commits the sign, the integer part, and ``num_digits`` fractional digits
    eagerly; the returned stream keeps committing lazily beyond that.  If any
    item fails to commit within fuel (typical near digit-cell boundaries),
    returns :data:`UNDETERMINED`.
    """
    _check_base(base)
    if fuel < 1:
        raise ValueError("fuel must be >= 1")

    sign = 0
    precision = 0
    for step in range(fuel + 1):
        interval = x.query(precision)
        if interval.lo > 0:
            sign = 1
            break
        if interval.hi < 0:
            sign = -1
            break
        if interval.lo == interval.hi == 0:
            return DigitStream(base, digits=[], sign=1, int_part=0)
        if step == fuel:
            return UNDETERMINED
        precision += 1
    if sign == 0:
        return UNDETERMINED

    int_part = None
    for step in range(fuel + 1):
        interval = x.query(precision)
        mag_lo, mag_hi = (
            (interval.lo, interval.hi) if sign > 0 else (-interval.hi, -interval.lo)
        )
        candidate = mag_lo.numerator // mag_lo.denominator
        if candidate >= 0 and mag_hi < candidate + 1:
            int_part = candidate
            break
        if step == fuel:
            return UNDETERMINED
        precision += 1
    if int_part is None:
        return UNDETERMINED

    committer = _DigitCommitter(x, base, fuel, sign, int_part, precision)
    committed: list[int] = []
    for _ in range(num_digits):
        d = committer.commit_next()
        if d is None:
            return UNDETERMINED
        committed.append(d)

    def provider(k: int) -> int:
        # digit_at fills sequentially, so k is always position + 1 here
        d = committer.commit_next()
        if d is None:
            raise UndeterminedDigitError(
                f"digit {k} failed to commit within fuel {fuel}"
            )
        return d

    stream = DigitStream(base, digits=committed, provider=provider, sign=sign, int_part=int_part)
    return stream
