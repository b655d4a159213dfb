"""Rigorous enclosures of the entire trigonometric building blocks.

Everything certified in this package is assembled from four entire
functions, each enclosed through a truncated power series plus a
certified remainder:

    cos x
    sinc x = sin x / x               (= 1 at x = 0)
    p x    = (sin x - x cos x) / x^3 (= 1/3 at x = 0, "sine defect ratio")
    tan x  = sinc(x) * x / cos(x)    (never expanded in series itself)

cos and sinc use the Lagrange-style tail bound |x|^K / K!; p is an
alternating series with provably decreasing terms on the call domain, so
its truncation error is bounded by (and signed like) the first omitted
term.  The series for p,

    p(x) = sum_{m>=0} (-1)^m 2(m+1) x^(2m) / (2m+3)!,

is not taken on faith: the test suite re-derives it from an exact
rational subtraction of the sin and x*cos series through degree 30.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import CosNotPositive, DomainError
from .interval import (
    Interval,
    _HALF_PI_LO,
    _HALF_PI_HI,
    certainly_positive,
    int_pow,
    rational_enclosure,
)

N_TERMS = 20  # series terms per direct enclosure; tails < 1e-36 on the guard domain


@dataclass(frozen=True)
class SeriesTerm:
    """One term sign * coefficient * x^(2*index) of an alternating series."""

    index: int
    coefficient: Fraction  # always > 0
    sign: int  # +1 or -1, alternating with index

    def signed(self) -> Fraction:
        return self.sign * self.coefficient


def p_series_term(m: int) -> SeriesTerm:
    """Term m of (sin x - x cos x)/x^3 = sum (-1)^m 2(m+1) x^(2m)/(2m+3)!."""
    return SeriesTerm(m, Fraction(2 * (m + 1), factorial(2 * m + 3)), (-1) ** m)


def _coeff_table(gen, n):
    return tuple(rational_enclosure(gen(m)) for m in range(n))


_COS_COEFFS = _coeff_table(lambda m: Fraction((-1) ** m, factorial(2 * m)), N_TERMS)
_SINC_COEFFS = _coeff_table(lambda m: Fraction((-1) ** m, factorial(2 * m + 1)), N_TERMS)
_P_COEFFS = _coeff_table(lambda m: p_series_term(m).signed(), N_TERMS)

# 1/(2N)! as an interval, for the cos/sinc tail bound mag^(2N)/(2N)!
_INV_FACT_2N = rational_enclosure(Fraction(1, factorial(2 * N_TERMS)))
# first omitted p term: 2(N+1)/(2N+3)! * x^(2N)
_P_OMITTED = rational_enclosure(Fraction(2 * (N_TERMS + 1), factorial(2 * N_TERMS + 3)))


def _check_p_terms_decreasing(x_sq_max: Fraction, m_max: int = 256) -> None:
    # t_m = 2(m+1) x^(2m)/(2m+3)!; consecutive ratio must stay < 1 so the
    # first-omitted-term bound is valid from every truncation point.
    for m in range(m_max):
        ratio = (
            Fraction(m + 2, m + 1) * x_sq_max / ((2 * m + 4) * (2 * m + 5))
        )
        if ratio >= 1:
            raise AssertionError(f"p-series terms not decreasing at m={m}")


# call domain is [0, pi/2 + 1 ulp]; (pi/2 + ulp)^2 < 5/2
_check_p_terms_decreasing(Fraction(5, 2))


def _even_series(coeffs, x: Interval) -> Interval:
    u = int_pow(x, 2)
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * u + c
    return acc


def _lagrange_tail(x: Interval) -> Interval:
    # |tail| <= mag(x)^(2N)/(2N)! for both the cos and the sinc series
    # (the sinc tail is even smaller term by term).
    m = x.mag()
    t = (int_pow(Interval.point(m), 2 * N_TERMS) * _INV_FACT_2N).hi
    return Interval(-t, t)


def cos_enc(x: Interval) -> Interval:
    """Enclosure of cos over x; requires |x| <= 2."""
    if x.mag() > 2.0:
        raise DomainError(f"cos_enc guard |x|<=2 violated: {x}")
    return _even_series(_COS_COEFFS, x) + _lagrange_tail(x)


def sinc_enc(x: Interval) -> Interval:
    """Enclosure of sin(x)/x (value 1 at 0); requires |x| <= 2."""
    if x.mag() > 2.0:
        raise DomainError(f"sinc_enc guard |x|<=2 violated: {x}")
    return _even_series(_SINC_COEFFS, x) + _lagrange_tail(x)


# Tripled-argument variants for the lemma's direct trig form (3x reaches
# 3*pi/2); the Lagrange tail is still < 2e-20 at |x| = 5.
def _cos_enc_any(x: Interval) -> Interval:
    if x.mag() > 5.0:
        raise DomainError(f"wide cos guard |x|<=5 violated: {x}")
    return _even_series(_COS_COEFFS, x) + _lagrange_tail(x)


def _sinc_enc_any(x: Interval) -> Interval:
    if x.mag() > 5.0:
        raise DomainError(f"wide sinc guard |x|<=5 violated: {x}")
    return _even_series(_SINC_COEFFS, x) + _lagrange_tail(x)


def p_enc(x: Interval) -> Interval:
    """Enclosure of (sin x - x cos x)/x^3 (value 1/3 at 0) on [0, pi/2 + ulp]."""
    if x.lo < 0.0 or x.hi > _HALF_PI_HI:
        raise DomainError(f"p_enc domain [0, pi/2 + ulp] violated: {x}")
    acc = _even_series(_P_COEFFS, x)
    # alternating remainder: signed like the first omitted term, evaluated at x.hi
    t = (int_pow(Interval.point(x.mag()), 2 * N_TERMS) * _P_OMITTED).hi
    if p_series_term(N_TERMS).sign > 0:
        return acc + Interval(0.0, t)
    return acc + Interval(-t, 0.0)


def tan_enc(x: Interval) -> Interval:
    """Enclosure of tan over x in [0, pi/2); raises CosNotPositive on wide boxes."""
    if x.lo < 0.0 or x.hi > _HALF_PI_LO:
        raise DomainError(f"tan_enc domain [0, pi/2) violated: {x}")
    c = cos_enc(x)
    if not certainly_positive(c):
        raise CosNotPositive(f"cos enclosure touches 0 on {x}")
    t = sinc_enc(x) * x / c
    # tan x >= x on this domain; adopt the sharper lower endpoint only after
    # confirming the independent quotient enclosure is consistent with it.
    if t.hi < x.lo:
        raise AssertionError("tan enclosure inconsistent with tan x >= x")
    return Interval(max(t.lo, x.lo), t.hi)


def r_enc(x: Interval) -> Interval:
    """Enclosure of (tan x - x)/x^3 = p(x)/cos(x); value 1/3 at 0."""
    if x.lo < 0.0 or x.hi > _HALF_PI_LO:
        raise DomainError(f"r_enc domain [0, pi/2) violated: {x}")
    c = cos_enc(x)
    if not certainly_positive(c):
        raise CosNotPositive(f"cos enclosure touches 0 on {x}")
    return p_enc(x) / c


def s_enc(x: Interval) -> Interval:
    """Enclosure of tan(x)/x = sinc(x)/cos(x); value 1 at 0."""
    if x.lo < 0.0 or x.hi > _HALF_PI_LO:
        raise DomainError(f"s_enc domain [0, pi/2) violated: {x}")
    c = cos_enc(x)
    if not certainly_positive(c):
        raise CosNotPositive(f"cos enclosure touches 0 on {x}")
    return sinc_enc(x) / c
