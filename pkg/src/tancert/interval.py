"""Outward-rounded interval arithmetic kernel.

Every rigorous computation in the package flows through the `Interval`
type defined here.  Endpoints are binary64 floats and every operation
keeps the enclosure contract: if a is in A and b is in B then the exact
real op(a, b) lies in op_interval(A, B).

Directed rounding is realized by next-representable adjustment, made
tight through error-free transformations: TwoSum for addition, Dekker's
two-product for multiplication, and an exact rational comparison for
division.  Each endpoint is therefore the correctly rounded-down (or
rounded-up) value of the exact endpoint, so exact operations (adding
zero, products of small integers) stay exact.
"""

from __future__ import annotations

import math
import sys
from fractions import Fraction

from .errors import DomainError

_INF = math.inf
_MAX = sys.float_info.max
_SPLITTER = 134217729.0  # 2**27 + 1, Dekker splitting constant
_DEKKER_BIG = 1e290      # |operand| above this risks overflow inside the splitter
_DEKKER_TINY = 1e-290    # |product| below this risks an inexact error term


# ---------------------------------------------------------------------------
# directed-rounding scalar kernel
# ---------------------------------------------------------------------------

def _add_down(a: float, b: float) -> float:
    s = a + b
    if math.isinf(s):
        return _MAX if s > 0.0 else s
    if abs(s) > 1e300:
        return math.nextafter(s, -_INF)
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    if err < 0.0:
        return math.nextafter(s, -_INF)
    return s


def _add_up(a: float, b: float) -> float:
    s = a + b
    if math.isinf(s):
        return -_MAX if s < 0.0 else s
    if abs(s) > 1e300:
        return math.nextafter(s, _INF)
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    if err > 0.0:
        return math.nextafter(s, _INF)
    return s


def _sub_down(a: float, b: float) -> float:
    return _add_down(a, -b)


def _sub_up(a: float, b: float) -> float:
    return _add_up(a, -b)


def _product_error(a: float, b: float, p: float) -> float:
    # Dekker: exact a*b - p, valid away from overflow/underflow (guarded by callers)
    c = _SPLITTER * a
    ah = c - (c - a)
    al = a - ah
    c = _SPLITTER * b
    bh = c - (c - b)
    bl = b - bh
    return ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _mul_down(a: float, b: float) -> float:
    p = a * b
    if math.isinf(p):
        return _MAX if p > 0.0 else p
    if (
        abs(a) > _DEKKER_BIG
        or abs(b) > _DEKKER_BIG
        or (p != 0.0 and abs(p) < _DEKKER_TINY)
        or (p == 0.0 and a != 0.0 and b != 0.0)
    ):
        return math.nextafter(p, -_INF)
    if _product_error(a, b, p) < 0.0:
        return math.nextafter(p, -_INF)
    return p


def _mul_up(a: float, b: float) -> float:
    p = a * b
    if math.isinf(p):
        return -_MAX if p < 0.0 else p
    if (
        abs(a) > _DEKKER_BIG
        or abs(b) > _DEKKER_BIG
        or (p != 0.0 and abs(p) < _DEKKER_TINY)
        or (p == 0.0 and a != 0.0 and b != 0.0)
    ):
        return math.nextafter(p, _INF)
    if _product_error(a, b, p) > 0.0:
        return math.nextafter(p, _INF)
    return p


def _div_down(a: float, b: float) -> float:
    q = a / b
    if math.isinf(q):
        return _MAX if q > 0.0 else q
    if math.isinf(a) or math.isinf(b):
        return q
    # exact: sign(a/b - q) = sign(a - q*b) * sign(b)
    diff = Fraction(a) - Fraction(q) * Fraction(b)
    if diff == 0:
        return q
    if (diff > 0) == (b > 0.0):
        return q  # true quotient above q: q already a lower bound
    return math.nextafter(q, -_INF)


def _div_up(a: float, b: float) -> float:
    q = a / b
    if math.isinf(q):
        return -_MAX if q < 0.0 else q
    if math.isinf(a) or math.isinf(b):
        return q
    diff = Fraction(a) - Fraction(q) * Fraction(b)
    if diff == 0:
        return q
    if (diff > 0) == (b > 0.0):
        return math.nextafter(q, _INF)
    return q


def _pow_down(x: float, k: int) -> float:
    # x >= 0; lower bounds compose monotonically for nonnegative factors
    r = 1.0
    base = x
    while k:
        if k & 1:
            r = _mul_down(r, base)
        k >>= 1
        if k:
            base = _mul_down(base, base)
    return r


def _pow_up(x: float, k: int) -> float:
    r = 1.0
    base = x
    while k:
        if k & 1:
            r = _mul_up(r, base)
        k >>= 1
        if k:
            base = _mul_up(base, base)
    return r


# ---------------------------------------------------------------------------
# the Interval type
# ---------------------------------------------------------------------------

class Interval:
    """Closed interval [lo, hi] of binary64 floats; immutable by convention.

    NaN endpoints are rejected; lo <= hi always.  An infinite hi is
    representable (the tangent quotient can legitimately explode near
    pi/2) but no kernel operation manufactures one from finite input.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float):
        lo = float(lo)
        hi = float(hi)
        if math.isnan(lo) or math.isnan(hi):
            raise DomainError("NaN interval endpoint")
        if lo > hi:
            raise DomainError(f"inverted interval [{lo!r}, {hi!r}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("Interval is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def point(cls, x: float) -> "Interval":
        return cls(x, x)

    @classmethod
    def from_hex(cls, lo_hex: str, hi_hex: str) -> "Interval":
        return cls(float.fromhex(lo_hex), float.fromhex(hi_hex))

    # -- serialization -----------------------------------------------------

    def to_hex(self) -> tuple[str, str]:
        """Hex-float string pair; round trips bit-exactly."""
        return (self.lo.hex(), self.hi.hex())

    # -- predicates and measures -------------------------------------------

    @property
    def width(self) -> float:
        return _sub_up(self.hi, self.lo)

    @property
    def mid(self) -> float:
        m = self.lo + 0.5 * (self.hi - self.lo)
        if not (self.lo <= m <= self.hi):
            m = 0.5 * self.lo + 0.5 * self.hi
        return min(max(m, self.lo), self.hi)

    def mag(self) -> float:
        """sup |x| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    def mig(self) -> float:
        """inf |x| over the interval."""
        if self.lo <= 0.0 <= self.hi:
            return 0.0
        return min(abs(self.lo), abs(self.hi))

    def contains(self, x) -> bool:
        """Membership of an exact value (float, int, or Fraction)."""
        if isinstance(x, Fraction):
            return Fraction(self.lo) <= x <= Fraction(self.hi)
        return self.lo <= x <= self.hi

    def is_subset_of(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(_add_down(self.lo, other.lo), _add_up(self.hi, other.hi))

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(_sub_down(self.lo, other.hi), _sub_up(self.hi, other.lo))

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other: "Interval") -> "Interval":
        a, b = self.lo, self.hi
        c, d = other.lo, other.hi
        if a >= 0.0:
            if c >= 0.0:
                return Interval(_mul_down(a, c), _mul_up(b, d))
            if d <= 0.0:
                return Interval(_mul_down(b, c), _mul_up(a, d))
            return Interval(_mul_down(b, c), _mul_up(b, d))
        if b <= 0.0:
            if c >= 0.0:
                return Interval(_mul_down(a, d), _mul_up(b, c))
            if d <= 0.0:
                return Interval(_mul_down(b, d), _mul_up(a, c))
            return Interval(_mul_down(a, d), _mul_up(a, c))
        if c >= 0.0:
            return Interval(_mul_down(a, d), _mul_up(b, d))
        if d <= 0.0:
            return Interval(_mul_down(b, c), _mul_up(a, c))
        return Interval(
            min(_mul_down(a, d), _mul_down(b, c)),
            max(_mul_up(a, c), _mul_up(b, d)),
        )

    def __truediv__(self, other: "Interval") -> "Interval":
        if other.lo <= 0.0 <= other.hi:
            raise DomainError(f"division by interval containing 0: {other}")
        lo = min(
            _div_down(self.lo, other.lo),
            _div_down(self.lo, other.hi),
            _div_down(self.hi, other.lo),
            _div_down(self.hi, other.hi),
        )
        hi = max(
            _div_up(self.lo, other.lo),
            _div_up(self.lo, other.hi),
            _div_up(self.hi, other.lo),
            _div_up(self.hi, other.hi),
        )
        return Interval(lo, hi)

    def scale(self, k) -> "Interval":
        """Multiply by an exact int/float scalar."""
        k = float(k)
        if k >= 0.0:
            return Interval(_mul_down(self.lo, k), _mul_up(self.hi, k))
        return Interval(_mul_down(self.hi, k), _mul_up(self.lo, k))

    def shift(self, k) -> "Interval":
        """Add an exact int/float scalar."""
        k = float(k)
        return Interval(_add_down(self.lo, k), _add_up(self.hi, k))

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Interval)
            and self.lo == other.lo
            and self.hi == other.hi
        )

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __str__(self) -> str:
        return f"[{self.lo:.17g}, {self.hi:.17g}]"


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------

_OPS = {
    "add": Interval.__add__,
    "sub": Interval.__sub__,
    "mul": Interval.__mul__,
    "div": Interval.__truediv__,
}


def arith(op: str, a: Interval, b: Interval) -> Interval:
    """Dispatch one of {add, sub, mul, div} with outward rounding."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise DomainError(f"unknown op {op!r}") from None
    return fn(a, b)


def int_pow(a: Interval, k: int) -> Interval:
    """Enclosure of {x**k : x in a} for a non-negative integer k."""
    if k < 0:
        raise DomainError("int_pow exponent must be non-negative")
    if k == 0:
        return Interval(1.0, 1.0)
    if k == 1:
        return a
    if k % 2 == 0:
        return Interval(_pow_down(a.mig(), k), _pow_up(a.mag(), k))
    lo = _pow_down(a.lo, k) if a.lo >= 0.0 else -_pow_up(-a.lo, k)
    hi = _pow_up(a.hi, k) if a.hi >= 0.0 else -_pow_down(-a.hi, k)
    return Interval(lo, hi)


def certainly_positive(a: Interval) -> bool:
    return a.lo > 0.0


def certainly_negative(a: Interval) -> bool:
    return a.hi < 0.0


def split(a: Interval) -> tuple[Interval, Interval]:
    """Halve at the midpoint; the halves share one endpoint and union to a."""
    m = a.mid
    return Interval(a.lo, m), Interval(m, a.hi)


# Stored enclosures of pi and pi/2.  The hex floats are the binary64
# neighbours of the true constants (pi and pi/2 are not representable, so
# each pair is 1 ulp wide); the test suite revalidates both against a
# 50-digit independent computation.
_PI_LO = float.fromhex("0x1.921fb54442d18p+1")
_PI_HI = float.fromhex("0x1.921fb54442d19p+1")
_HALF_PI_LO = float.fromhex("0x1.921fb54442d18p+0")
_HALF_PI_HI = float.fromhex("0x1.921fb54442d19p+0")


def pi_enclosure() -> Interval:
    """Validated enclosure of pi, width 1 ulp."""
    return Interval(_PI_LO, _PI_HI)


def half_pi_enclosure() -> Interval:
    """Validated enclosure of pi/2; .lo < pi/2 < .hi strictly."""
    return Interval(_HALF_PI_LO, _HALF_PI_HI)


def rational_enclosure(q) -> Interval:
    """Tightest Interval containing an exact rational (one outward step)."""
    q = Fraction(q)
    f = float(q)  # correctly rounded to nearest
    if math.isinf(f):
        raise DomainError("rational overflows binary64 range")
    fq = Fraction(f)
    if fq == q:
        return Interval(f, f)
    if fq < q:
        return Interval(f, math.nextafter(f, _INF))
    return Interval(math.nextafter(f, -_INF), f)
