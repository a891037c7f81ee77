"""Root isolation for odd-degree polynomials over computable reals.

Sign determination at a point is only semi-decidable, so the search bound
comes from the leading-coefficient witness (a Cauchy-style root bound) and
each bisection step picks its cut from a small ladder of candidate points:
a polynomial of degree d has at most d roots, so at least two candidates
admit a sign decision.  Plain bisection, no Newton or Sturm refinement:
the goal is a terminating, exact bracketing procedure.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core_reals import (
    CauchyReal,
    RationalInterval,
    RationalLike,
    SeparationWitness,
    _separated_from_zero,
    as_fraction,
    ceil_log,
)
from .errors import DegreeError, WitnessViolationError


@dataclass(frozen=True)
class Polynomial:
    """Coefficients by ascending power, plus a nonzero-ness witness for the
    leading coefficient."""

    coeffs: tuple[CauchyReal, ...]
    lead_witness: SeparationWitness

    def __post_init__(self):
        if not self.coeffs:
            raise DegreeError("polynomial needs at least one coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def base(self) -> int:
        return self.coeffs[0].base

    @classmethod
    def from_rationals(
        cls,
        coeffs: Sequence[RationalLike],
        lead_gap: RationalLike | None = None,
        base: int = 10,
    ) -> "Polynomial":
        exact = [as_fraction(c) for c in coeffs]
        if lead_gap is None:
            if not exact or exact[-1] == 0:
                raise DegreeError("leading coefficient must be nonzero")
            lead_gap = abs(exact[-1])
        return cls(
            coeffs=tuple(CauchyReal.from_fraction(c, base=base) for c in exact),
            lead_witness=SeparationWitness(as_fraction(lead_gap)),
        )


def eval_poly(p: Polynomial, x: CauchyReal) -> CauchyReal:
    """Evaluate by interval Horner, scheduled so the width contract holds.

    Magnitude bounds from precision-0 queries give a factor F with
    width(result at precision m) <= F * base**-m; querying the inputs at
    n + ceil(log_base F) + 1 then meets the contract at precision n.
    """
    base = x.base
    x_bound = x.query(0).magnitude_bound()
    coeff_bounds = [c.query(0).magnitude_bound() for c in p.coeffs]

    running = coeff_bounds[-1]
    factor = Fraction(1)
    for k in range(p.degree - 1, -1, -1):
        factor = factor * x_bound + running + 1
        running = running * x_bound + coeff_bounds[k]
    offset = ceil_log(base, max(factor, 1)) + 1

    def approx(n: int) -> RationalInterval:
        m = n + offset
        xi = x.query(m)
        acc = p.coeffs[-1].query(m)
        for k in range(p.degree - 1, -1, -1):
            acc = acc * xi + p.coeffs[k].query(m)
        return acc

    return CauchyReal(approx, base=base)


def _decide_signs(values: list[CauchyReal]) -> tuple[int, int]:
    """Return (index, sign) of the first value that resolves.

    Values are probed in order at increasing precision; an exactly-zero
    value (degenerate [0, 0] interval) is retired.  Callers guarantee at
    least one value is nonzero, which makes this total.
    """
    dead = [False] * len(values)
    m = 0
    while True:
        for idx, v in enumerate(values):
            if dead[idx]:
                continue
            box = v.query(m)
            if box.lo > 0:
                return idx, 1
            if box.hi < 0:
                return idx, -1
            if box.lo == box.hi == 0:
                dead[idx] = True
        if all(dead):
            raise ArithmeticError("all candidate values are exactly zero")
        m += 1


def _sign_at(p: Polynomial, point: Fraction) -> int:
    value = eval_poly(p, CauchyReal.from_fraction(point, base=p.base))
    _idx, sign = _decide_signs([value])
    return sign


def search_bound(p: Polynomial) -> Fraction:
    """Rational M with every real root of p inside (-M, M).

    M = 1 + (max coarse coefficient magnitude) / gap; coarse magnitudes are
    precision-0 upper bounds and gap underestimates the leading
    coefficient, so this dominates the classical Cauchy root bound.
    """
    top = max(c.query(0).magnitude_bound() for c in p.coeffs)
    return 1 + top / p.lead_witness.gap


def cut_candidates(a: Fraction, b: Fraction, degree: int) -> list[Fraction]:
    """Midpoint first, then degree+1 interior points: more candidates than
    p can have roots, so a sign decision always exists among them."""
    width = b - a
    ladder = [a + width * Fraction(j, degree + 2) for j in range(1, degree + 2)]
    return [a + width / 2] + ladder


def isolate_odd_root(p: Polynomial, eps: RationalLike) -> RationalInterval:
    """A width <= eps rational bracket on which p changes sign.

    Odd degree plus the leading-coefficient witness puts a sign change on
    [-M, M], so termination is guaranteed; only a sign-change bracket is
    promised (even-multiplicity tangential roots are invisible to it).
    """
    eps = as_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if p.degree % 2 == 0:
        raise DegreeError(f"degree {p.degree} is even; an odd degree is required")

    # determine the leading sign first: it certifies the bracket endpoints
    _separated_from_zero(p.coeffs[-1], p.lead_witness)

    bound = search_bound(p)
    a, b = -bound, bound
    sign_a = _sign_at(p, a)
    sign_b = _sign_at(p, b)
    if sign_a == sign_b:
        raise WitnessViolationError(
            "no sign change on the search interval; the leading witness is wrong"
        )

    while b - a > eps:
        candidates = cut_candidates(a, b, p.degree)
        values = [
            eval_poly(p, CauchyReal.from_fraction(c, base=p.base)) for c in candidates
        ]
        idx, sign = _decide_signs(values)
        cut = candidates[idx]
        if sign == sign_a:
            a = cut
        else:
            b = cut
    return RationalInterval(a, b)
