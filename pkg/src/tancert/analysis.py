"""Sharpness numerics: the exponent ratio, optimal-exponent scan,
crossover points between the upper/lower tangent bounds, and a
high-precision replay of the proof identities.

The exponent ratio

    ExponentRatio(x) = log(3 (tan x - x) / x^3) / log(tan x / x)

interpolates between its boundary limits 6/5 (at 0) and 1 (at pi/2);
its range staying strictly inside (1, 6/5) is the pointwise face of the
optimality of those exponents.  It needs logarithms, so it is computed
with arbitrary-precision arithmetic and is deliberately NOT
certificate-grade; the rigorous claims of this module are confined to
the sign certifications inside the crossover brackets, which use
log-free reductions evaluated in interval arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import mpmath as mp

from .enclosures import tan_enc
from .errors import DomainError, IdentityViolation, NoSignChange
from .interval import (
    Interval,
    certainly_negative,
    certainly_positive,
    int_pow,
    pi_enclosure,
    rational_enclosure,
)
from fractions import Fraction

_HALF_PI_FLOOR = 1.5707963267948966  # float just below pi/2


@dataclass(frozen=True)
class RatioSample:
    x: float
    phi: float
    precision_bits: int


@dataclass(frozen=True)
class ScanReport:
    samples: tuple[RatioSample, ...]
    inf_phi: float
    sup_phi: float
    all_inside_open_interval: bool  # every sample strictly in (1, 6/5)


@dataclass(frozen=True)
class CrossoverResult:
    id: str  # "upper_x0" | "lower_x1"
    bracket: Interval
    iterations: int


@dataclass(frozen=True)
class ReplayReport:
    identity: str
    samples: int
    tol: float
    worst_x: float
    worst_residual: float


def exponent_ratio(x: float, precision_bits: int = 200) -> RatioSample:
    """The exponent ratio at x, evaluated with >= precision_bits bits.

    Exploratory (not certificate-grade): trusts mpmath's transcendental
    rounding.  Precondition 1e-6 < x < pi/2 - 1e-9 keeps both logs away
    from their zeros/poles.
    """
    if not 1e-6 < x < _HALF_PI_FLOOR - 1e-9:
        raise DomainError("exponent_ratio domain is (1e-6, pi/2 - 1e-9)")
    with mp.workprec(max(precision_bits, 64)):
        mx = mp.mpf(x)
        t = mp.tan(mx)
        num = mp.log(3 * (t - mx) / mx**3)
        den = mp.log(t / mx)
        value = num / den
    return RatioSample(x=x, phi=float(value), precision_bits=precision_bits)


def optimality_scan(grid, precision_bits: int = 200) -> ScanReport:
    """Sample the exponent ratio over a grid in (0, pi/2).

    Reports inf/sup and whether every sample sits strictly inside
    (1, 6/5) — the pointwise restatement of the optimal exponent pair.
    """
    samples = tuple(sorted(
        (exponent_ratio(float(x), precision_bits) for x in grid),
        key=lambda s: s.x,
    ))
    if not samples:
        raise DomainError("optimality_scan needs a nonempty grid")
    phis = [s.phi for s in samples]
    inside = all(1.0 < p < 1.2 for p in phis)
    return ScanReport(
        samples=samples,
        inf_phi=min(phis),
        sup_phi=max(phis),
        all_inside_open_interval=inside,
    )


# ---------------------------------------------------------------------------
# crossover brackets (rigorous sign certification, log-free reductions)
# ---------------------------------------------------------------------------

_C_1_3 = rational_enclosure(Fraction(1, 3))
_C_1_243 = rational_enclosure(Fraction(1, 243))
_TWO_OVER_PI_4 = int_pow(Interval(2.0, 2.0) / pi_enclosure(), 4)


def _upper_gap(x: Interval) -> Interval:
    """D(x) = x^9 tan^6 x / 243 - (x^3/3 + (2/pi)^4 x^4 tan x)^5.

    Fifth-power comparison of the two upper-bound excesses over x; both
    excesses are positive, so D and their difference share sign.  D < 0
    where the exponent-form upper bound is the sharper one.
    """
    t = tan_enc(x)
    lhs = int_pow(x, 9) * int_pow(t, 6) * _C_1_243
    rhs = int_pow(int_pow(x, 3) * _C_1_3 + _TWO_OVER_PI_4 * int_pow(x, 4) * t, 5)
    return lhs - rhs


def _lower_gap(x: Interval) -> Interval:
    """G(x) = tan x (5 - 2x^2) - 5x.

    Difference of the two lower-bound excesses, rescaled by 15/x^2 > 0;
    valid as a sign surrogate while 5 - 2x^2 > 0 (x < 1.58).  G > 0
    where the exponent-form lower bound is the sharper one.
    """
    t = tan_enc(x)
    return t * (Interval(5.0, 5.0) - int_pow(x, 2).scale(2)) - x.scale(5)


def _certified_sign(f, x: float) -> int:
    v = f(Interval.point(x))
    if certainly_positive(v):
        return 1
    if certainly_negative(v):
        return -1
    return 0


def _certified_bisection(f, lo: float, hi: float, tol: float, which: str) -> CrossoverResult:
    s_lo = _certified_sign(f, lo)
    s_hi = _certified_sign(f, hi)
    if s_lo == 0 or s_hi == 0 or s_lo == s_hi:
        raise NoSignChange(
            f"{which}: could not certify opposite signs on [{lo}, {hi}]"
        )
    iterations = 0
    while hi - lo > tol:
        width = hi - lo
        mid = lo + 0.5 * width
        s_mid = 0
        # a midpoint can land unresolvably close to the root; nudge it
        for shift in (0.0, width / 64, -width / 64, width / 16, -width / 16):
            candidate = mid + shift
            if not lo < candidate < hi:
                continue
            s_mid = _certified_sign(f, candidate)
            if s_mid != 0:
                mid = candidate
                break
        if s_mid == 0:
            raise NoSignChange(f"{which}: sign unresolvable near {mid}")
        iterations += 1
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return CrossoverResult(id=which, bracket=Interval(lo, hi), iterations=iterations)


def crossover_upper(tol: float = 1e-3) -> CrossoverResult:
    """Certified bracket of the upper-bound crossover near 1.233."""
    if tol < 1e-6:
        raise DomainError("crossover tolerance must be >= 1e-6")
    return _certified_bisection(_upper_gap, 1.0, 1.4, tol, "upper_x0")


def crossover_lower(tol: float = 1e-3) -> CrossoverResult:
    """Certified bracket of the lower-bound crossover near 1.525."""
    if tol < 1e-6:
        raise DomainError("crossover tolerance must be >= 1e-6")
    return _certified_bisection(_lower_gap, 1.4, 1.56, tol, "lower_x1")


# ---------------------------------------------------------------------------
# high-precision replay of the proof identities (non-rigorous)
# ---------------------------------------------------------------------------

def _derivative(f, x, h):
    # central difference with one Richardson extrapolation step
    d1 = (f(x + h) - f(x - h)) / (2 * h)
    h2 = h / 2
    d2 = (f(x + h2) - f(x - h2)) / (2 * h2)
    return (4 * d2 - d1) / 3


def _replay_pairs(which: str):
    """Return (lhs, rhs) callables on mpmath floats for one identity."""
    if which == "eq22_factorization":
        def lhs(x):
            g = lambda y: 3 - y**2 - 3 * y * mp.cot(y)
            return _derivative(g, x, mp.mpf(10) ** -12)

        def rhs(x):
            t = mp.tan(x)
            h = x - 3 * t / (3 + t**2)
            return (1 + 3 * mp.cot(x) ** 2) * h

        return lhs, rhs
    if which == "eq24_quotient":
        def lhs(x):
            g = lambda y: 6 * mp.log(mp.tan(y) / y) - 5 * mp.log(
                3 * (mp.tan(y) - y) / y**3
            )
            return _derivative(g, x, mp.mpf(10) ** -12)

        def rhs(x):
            phi = (9 - 24 * x**2) * mp.cos(x) - 9 * mp.cos(3 * x) - 4 * x * mp.sin(
                3 * x
            )
            return phi / (4 * x * mp.cos(x) ** 2 * mp.sin(x) * (mp.tan(x) - x))

        return lhs, rhs
    if which == "thm_a_h_prime":
        def lhs(x):
            h = lambda y: y - 3 * mp.tan(y) / (3 + mp.tan(y) ** 2)
            return _derivative(h, x, mp.mpf(10) ** -12)

        def rhs(x):
            # exact simplification of 1 - 3(3 - t^2)(1 + t^2)/(3 + t^2)^2:
            # the numerator (3 + t^2)^2 - 3(3 - t^2)(1 + t^2) collapses to 4 t^4
            t = mp.tan(x)
            return 4 * t**4 / (3 + t**2) ** 2

        return lhs, rhs
    raise DomainError(f"unknown identity {which!r}")


REPLAY_IDENTITIES = ("eq22_factorization", "eq24_quotient", "thm_a_h_prime")


def replay_identity(
    which: str, samples: int = 50, tol: float = 1e-25, seed: int = 20260809
) -> ReplayReport:
    """Check one proof identity at random points to relative tolerance tol.

    Left and right sides are evaluated independently (derivatives by
    central differences with step extrapolation) at 80-digit precision.
    Raises IdentityViolation when the worst residual exceeds tol.
    """
    if samples < 10:
        raise DomainError("replay_identity needs samples >= 10")
    lhs, rhs = _replay_pairs(which)
    rng = random.Random(seed)
    worst_x, worst_res = 0.0, 0.0
    with mp.workdps(80):
        for _ in range(samples):
            x = mp.mpf(rng.uniform(0.05, 1.5))
            left = lhs(x)
            right = rhs(x)
            res = abs(left - right) / max(1, abs(right))
            if res > worst_res:
                worst_res = float(res)
                worst_x = float(x)
    if worst_res > tol:
        raise IdentityViolation(
            f"{which}: residual {worst_res:.3e} at x={worst_x} exceeds {tol:.3e}"
        )
    return ReplayReport(
        identity=which,
        samples=samples,
        tol=tol,
        worst_x=worst_x,
        worst_residual=worst_res,
    )
