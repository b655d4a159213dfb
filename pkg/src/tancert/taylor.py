"""Taylor models: interval-coefficient polynomials with certified remainders.

A model (center, coefficients, remainder, radius) asserts that for every
x with |x - center| <= radius the function value lies in

    sum_k  c_k (x - center)^k  +  remainder

under interval evaluation.  Centers are 0 and pi/2; at pi/2 the local
variable is s = x - pi/2 and pi enters through its stored enclosure.

Models for cos / sinc / p at center 0 come straight from their exact
rational series (tails as in `enclosures`).  At pi/2 they are composed:
cos(pi/2+s) = -sin s, sinc = cos(s)/(pi/2+s) with a rigorously tailed
geometric reciprocal, and p from its defining combination.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import DomainError, RadiusTooLarge
from .interval import (
    Interval,
    _mul_up,
    _pow_up,
    half_pi_enclosure,
    int_pow,
    pi_enclosure,
    rational_enclosure,
)
from .series import exp_tail_bound

CENTER_ZERO = "0"
CENTER_HALF_PI = "pi/2"

_DEFAULT_DEGREE = 16

_ZERO_IV = Interval.point(0.0)
_ONE_IV = Interval.point(1.0)


class TaylorModel:
    __slots__ = ("center", "coeffs", "remainder", "radius")

    def __init__(self, center: str, coeffs, remainder: Interval, radius: float):
        if center not in (CENTER_ZERO, CENTER_HALF_PI):
            raise DomainError(f"unsupported center {center!r}")
        if radius <= 0.0:
            raise DomainError("TaylorModel radius must be positive")
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "remainder", remainder)
        object.__setattr__(self, "radius", float(radius))

    def __setattr__(self, name, value):
        raise AttributeError("TaylorModel is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def center_enclosure(self) -> Interval:
        return _ZERO_IV if self.center == CENTER_ZERO else half_pi_enclosure()

    def __repr__(self) -> str:
        return (
            f"TaylorModel(center={self.center}, degree={self.degree}, "
            f"radius={self.radius}, remainder={self.remainder})"
        )


def _local_range(k: int, radius: float) -> Interval:
    """Enclosure of s^k over |s| <= radius."""
    t = _pow_up(radius, k)
    if k % 2 == 0:
        return Interval(0.0, t)
    return Interval(-t, t)


def _poly_range(coeffs, radius: float) -> Interval:
    s = Interval(-radius, radius)
    acc = _ZERO_IV
    for c in reversed(coeffs):
        acc = acc * s + c
    return acc


def tm_eval(model: TaylorModel, x: Interval) -> Interval:
    """Evaluate the model over x; x must lie within the validity radius."""
    s = x - model.center_enclosure()
    if s.mag() > model.radius:
        raise DomainError("TaylorModel evaluated outside its radius")
    acc = _ZERO_IV
    for c in reversed(model.coeffs):
        acc = acc * s + c
    return acc + model.remainder


def tm_add(a: TaylorModel, b: TaylorModel) -> TaylorModel:
    if a.center != b.center:
        raise DomainError("TaylorModel center mismatch")
    radius = min(a.radius, b.radius)
    n = max(len(a.coeffs), len(b.coeffs))
    ca = list(a.coeffs) + [_ZERO_IV] * (n - len(a.coeffs))
    cb = list(b.coeffs) + [_ZERO_IV] * (n - len(b.coeffs))
    return TaylorModel(
        a.center,
        [x + y for x, y in zip(ca, cb)],
        a.remainder + b.remainder,
        radius,
    )


def tm_scale(a: TaylorModel, c) -> TaylorModel:
    if not isinstance(c, Interval):
        c = rational_enclosure(Fraction(c))
    return TaylorModel(
        a.center, [x * c for x in a.coeffs], a.remainder * c, a.radius
    )


def tm_neg(a: TaylorModel) -> TaylorModel:
    return TaylorModel(a.center, [-x for x in a.coeffs], -a.remainder, a.radius)


def tm_sub(a: TaylorModel, b: TaylorModel) -> TaylorModel:
    return tm_add(a, tm_neg(b))


def tm_mul(a: TaylorModel, b: TaylorModel, degree: int | None = None) -> TaylorModel:
    """Product model; polynomial tail and remainder cross terms fold into
    the remainder conservatively."""
    if a.center != b.center:
        raise DomainError("TaylorModel center mismatch")
    radius = min(a.radius, b.radius)
    if degree is None:
        degree = max(a.degree, b.degree)
    da, db = a.degree, b.degree
    conv = [_ZERO_IV] * (da + db + 1)
    for i, ca in enumerate(a.coeffs):
        if ca.lo == 0.0 and ca.hi == 0.0:
            continue
        for j, cb in enumerate(b.coeffs):
            if cb.lo == 0.0 and cb.hi == 0.0:
                continue
            conv[i + j] = conv[i + j] + ca * cb
    rem = _ZERO_IV
    for k in range(degree + 1, da + db + 1):
        rem = rem + conv[k] * _local_range(k, radius)
    pa = _poly_range(a.coeffs, radius)
    pb = _poly_range(b.coeffs, radius)
    rem = rem + pa * b.remainder + pb * a.remainder + a.remainder * b.remainder
    return TaylorModel(a.center, conv[: degree + 1], rem, radius)


def tm_int_pow(a: TaylorModel, k: int) -> TaylorModel:
    if k < 0:
        raise DomainError("tm_int_pow exponent must be non-negative")
    result = TaylorModel(a.center, [_ONE_IV], _ZERO_IV, a.radius)
    base = a
    while k:
        if k & 1:
            result = tm_mul(result, base)
        k >>= 1
        if k:
            base = tm_mul(base, base)
    return result


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def _series_model_at_zero(f: str, degree: int, radius: float) -> TaylorModel:
    coeffs = []
    for k in range(degree + 1):
        if k % 2 == (1 if f == "sin" else 0):
            m = k // 2
            if f == "cos":
                q = Fraction((-1) ** m, factorial(k))
            elif f == "sin":
                q = Fraction((-1) ** m, factorial(k))
            elif f == "sinc":
                q = Fraction((-1) ** m, factorial(k + 1))
            else:  # p
                q = Fraction((-1) ** m * 2 * (m + 1), factorial(k + 3))
            coeffs.append(rational_enclosure(q))
        else:
            coeffs.append(_ZERO_IV)
    if f == "p":
        # alternating: first omitted even term, with its sign
        m0 = degree // 2 + 1
        t = (
            int_pow(Interval.point(radius), 2 * m0)
            * rational_enclosure(Fraction(2 * (m0 + 1), factorial(2 * m0 + 3)))
        ).hi
        rem = Interval(0.0, t) if m0 % 2 == 0 else Interval(-t, 0.0)
    else:
        # first omitted index of the series' parity
        parity = 1 if f == "sin" else 0
        first = degree + 1
        if first % 2 != parity:
            first += 1
        t = exp_tail_bound(first, radius)
        rem = Interval(-t, t)
    return TaylorModel(CENTER_ZERO, coeffs, rem, radius)


def _reciprocal_of_x_at_half_pi(degree: int, radius: float) -> TaylorModel:
    # 1/(pi/2 + s) = sum_k (-1)^k (2/pi)^(k+1) s^k, |s| <= radius < pi/2
    two_over_pi = Interval(2.0, 2.0) / pi_enclosure()
    q = _mul_up(two_over_pi.hi, radius)
    if q >= 1.0:
        raise RadiusTooLarge("reciprocal series needs radius < pi/2")
    coeffs = []
    for k in range(degree + 1):
        c = int_pow(two_over_pi, k + 1)
        coeffs.append(c if k % 2 == 0 else -c)
    # geometric tail: (2/pi)^(degree+2) r^(degree+1) / (1 - 2r/pi)
    t = (
        int_pow(two_over_pi, degree + 2)
        * Interval.point(_pow_up(radius, degree + 1))
        / (Interval(1.0, 1.0) - Interval.point(q))
    ).hi
    return TaylorModel(CENTER_HALF_PI, coeffs, Interval(-t, t), radius)


def _as_center(model: TaylorModel, center: str) -> TaylorModel:
    return TaylorModel(center, model.coeffs, model.remainder, model.radius)


def tm_build(f: str, center, degree: int, radius: float) -> TaylorModel:
    """Build a certified model of f in {cos, sinc, p} about 0 or pi/2."""
    if f not in ("cos", "sinc", "p"):
        raise DomainError(f"tm_build supports cos/sinc/p, not {f!r}")
    if degree < 2:
        raise DomainError("tm_build needs degree >= 2")
    center = CENTER_HALF_PI if center in (CENTER_HALF_PI, "half_pi") else (
        CENTER_ZERO if center in (CENTER_ZERO, 0, 0.0) else None
    )
    if center is None:
        raise DomainError("center must be 0 or pi/2")
    if center == CENTER_ZERO:
        if radius > 1.0:
            raise RadiusTooLarge("center-0 models require radius <= 1")
        return _series_model_at_zero(f, degree, radius)
    if radius > 0.5:
        raise RadiusTooLarge("center-pi/2 models require radius <= 0.5")
    # local variable s = x - pi/2
    sin_s = _as_center(_series_model_at_zero("sin", degree, radius), CENTER_HALF_PI)
    cos_s = _as_center(_series_model_at_zero("cos", degree, radius), CENTER_HALF_PI)
    if f == "cos":
        return tm_neg(sin_s)  # cos(pi/2 + s) = -sin s
    recip = _reciprocal_of_x_at_half_pi(degree, radius)
    if f == "sinc":
        return tm_mul(cos_s, recip)  # sin(pi/2+s)/x = cos(s)/(pi/2+s)
    # p = (sin x - x cos x)/x^3 = (cos s + (pi/2+s) sin s) / (pi/2+s)^3
    x_poly = TaylorModel(
        CENTER_HALF_PI, [half_pi_enclosure(), _ONE_IV], _ZERO_IV, radius
    )
    numerator = tm_add(cos_s, tm_mul(x_poly, sin_s))
    return tm_mul(numerator, tm_int_pow(recip, 3))
