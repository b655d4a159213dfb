"""Exact truncated power series with rigorous tail-coefficient bounds.

This is the engine behind the near-endpoint proofs.  A `PowerSeries`
represents, on |u| <= radius,

    f(u)  in  sum_{k<=D} c_k u^k  +  [-tail, tail] * u^(D+1),

where the polynomial coefficients c_k are EXACT elements of Q[pi, 1/pi]
(type `PiPoly`) and only the scalar `tail` is a rounded-up float.  The
crucial property over an additive-remainder model: dividing by u^k is a
plain coefficient shift, because the error term carries its own power of
u.  That is what makes "divide out the vanishing order, then bound the
quotient below" sound on a half-open interval (0, b].

Exact coefficients also mean that structurally zero coefficients cancel
exactly, even when pi enters the expansion (the endpoint pi/2 is not a
float, so expansions there live in Q[pi, 1/pi] rather than Q).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import DomainError, OrderMismatch
from .interval import Interval, int_pow, pi_enclosure, rational_enclosure, _add_up, _mul_up, _pow_up


# ---------------------------------------------------------------------------
# Laurent polynomials in pi over Q
# ---------------------------------------------------------------------------

class PiPoly:
    """Exact element of Q[pi, 1/pi]: a map {power of pi -> Fraction}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, v in terms.items():
                v = Fraction(v)
                if v != 0:
                    clean[int(k)] = v
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PiPoly is immutable")

    @classmethod
    def rational(cls, q) -> "PiPoly":
        return cls({0: Fraction(q)})

    @classmethod
    def pi_power(cls, k: int, coeff=1) -> "PiPoly":
        return cls({k: Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return set(self.terms) <= {0}

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("PiPoly has pi-dependent terms")
        return self.terms.get(0, Fraction(0))

    def __add__(self, other: "PiPoly") -> "PiPoly":
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, Fraction(0)) + v
        return PiPoly(t)

    def __sub__(self, other: "PiPoly") -> "PiPoly":
        return self + (-other)

    def __neg__(self) -> "PiPoly":
        return PiPoly({k: -v for k, v in self.terms.items()})

    def __mul__(self, other) -> "PiPoly":
        if not isinstance(other, PiPoly):
            other = PiPoly.rational(other)
        t = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                k = ka + kb
                t[k] = t.get(k, Fraction(0)) + va * vb
        return PiPoly(t)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, PiPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def enclosure(self) -> Interval:
        """Tight interval containing the exact value."""
        acc = Interval.point(0.0)
        pi = pi_enclosure()
        for k in sorted(self.terms):
            c = rational_enclosure(self.terms[k])
            if k == 0:
                term = c
            elif k > 0:
                term = c * int_pow(pi, k)
            else:
                term = c / int_pow(pi, -k)
            acc = acc + term
        return acc

    def __repr__(self) -> str:
        if not self.terms:
            return "PiPoly(0)"
        bits = []
        for k in sorted(self.terms):
            v = self.terms[k]
            if k == 0:
                bits.append(f"{v}")
            else:
                bits.append(f"{v}*pi^{k}")
        return "PiPoly(" + " + ".join(bits) + ")"


_ZERO = PiPoly()
_ONE = PiPoly.rational(1)


# ---------------------------------------------------------------------------
# tail-bound helpers
# ---------------------------------------------------------------------------

def exp_tail_bound(first_index: int, radius: float) -> float:
    """Upper bound of sum_{k>=K} r^k/k!, for series with |c_k| <= 1/k!."""
    r = Fraction(radius)
    k = first_index
    if r >= k + 1:
        raise DomainError("exp tail bound needs radius < first_index + 1")
    exact = (r**k / factorial(k)) * (Fraction(1) / (1 - r / (k + 1)))
    return rational_enclosure(exact).hi


def _sup_abs(coeff_encs, radius: float) -> Interval:
    """Enclosure of the polynomial over |u| <= radius (interval Horner)."""
    u = Interval(-radius, radius)
    acc = Interval.point(0.0)
    for c in reversed(coeff_encs):
        acc = acc * u + c
    return acc


def _u_power_range(k: int, radius: float) -> float:
    return _pow_up(radius, k)


# ---------------------------------------------------------------------------
# the PowerSeries type
# ---------------------------------------------------------------------------

class PowerSeries:
    __slots__ = ("coeffs", "tail", "radius", "_encs")

    def __init__(self, coeffs, tail: float, radius: float):
        if radius <= 0.0:
            raise DomainError("PowerSeries radius must be positive")
        if tail < 0.0:
            raise DomainError("PowerSeries tail must be non-negative")
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "tail", float(tail))
        object.__setattr__(self, "radius", float(radius))
        object.__setattr__(self, "_encs", None)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient_enclosures(self):
        if self._encs is None:
            object.__setattr__(
                self, "_encs", tuple(c.enclosure() for c in self.coeffs)
            )
        return self._encs

    # -- ring operations ---------------------------------------------------

    def _check_compatible(self, other: "PowerSeries") -> None:
        if self.degree != other.degree or self.radius != other.radius:
            raise DomainError("PowerSeries degree/radius mismatch")

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        self._check_compatible(other)
        coeffs = [a + b for a, b in zip(self.coeffs, other.coeffs)]
        return PowerSeries(coeffs, _add_up(self.tail, other.tail), self.radius)

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        return self + (-other)

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self.coeffs], self.tail, self.radius)

    def scale(self, c) -> "PowerSeries":
        if not isinstance(c, PiPoly):
            c = PiPoly.rational(c)
        mag = c.enclosure().mag()
        return PowerSeries(
            [c * a for a in self.coeffs], _mul_up(self.tail, mag), self.radius
        )

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        self._check_compatible(other)
        d = self.degree
        r = self.radius
        conv = [_ZERO] * (2 * d + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                conv[i + j] = conv[i + j] + a * b
        # overflow terms (power > d) fold into the tail coefficient:
        # |c_k u^k| <= |c_k| r^(k-d-1) * |u|^(d+1)
        overflow = Interval.point(0.0)
        for k in range(d + 1, 2 * d + 1):
            if conv[k].is_zero():
                continue
            m = conv[k].enclosure().mag()
            overflow = overflow + Interval.point(
                _mul_up(m, _u_power_range(k - d - 1, r))
            )
        sup1 = _sup_abs(self.coefficient_enclosures(), r).mag()
        sup2 = _sup_abs(other.coefficient_enclosures(), r).mag()
        tail = (
            Interval.point(overflow.hi)
            + Interval.point(_mul_up(sup1, other.tail))
            + Interval.point(_mul_up(sup2, self.tail))
            + Interval.point(
                _mul_up(_mul_up(self.tail, other.tail), _u_power_range(d + 1, r))
            )
        ).hi
        return PowerSeries(conv[: d + 1], tail, r)

    def int_pow(self, k: int) -> "PowerSeries":
        if k < 0:
            raise DomainError("PowerSeries.int_pow exponent must be non-negative")
        result = ps_const(_ONE, self.degree, self.radius)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, j: int) -> "PowerSeries":
        """Multiply by u^j, keeping the degree fixed."""
        if j == 0:
            return self
        d = self.degree
        r = self.radius
        coeffs = [_ZERO] * j + list(self.coeffs[: d + 1 - j])
        extra = Interval.point(0.0)
        for k in range(d + 1 - j, d + 1):
            if self.coeffs[k].is_zero():
                continue
            m = self.coeffs[k].enclosure().mag()
            extra = extra + Interval.point(_mul_up(m, _u_power_range(k + j - d - 1, r)))
        tail = _add_up(extra.hi, _mul_up(self.tail, _u_power_range(j, r)))
        return PowerSeries(coeffs, tail, r)

    # -- endpoint-proof operations ------------------------------------------

    def divide_power(self, k: int) -> "PowerSeries":
        """Exact division by u^k; the first k coefficients must vanish exactly."""
        for i in range(k):
            if not self.coeffs[i].is_zero():
                raise OrderMismatch(
                    f"coefficient of u^{i} is {self.coeffs[i]!r}, expected exact 0"
                )
        return PowerSeries(self.coeffs[k:], self.tail, self.radius)

    def eval(self, u: Interval) -> Interval:
        if u.mag() > self.radius:
            raise DomainError("PowerSeries evaluated outside its radius")
        acc = Interval.point(0.0)
        for c in reversed(self.coefficient_enclosures()):
            acc = acc * u + c
        t = _mul_up(self.tail, _pow_up(u.mag(), self.degree + 1))
        return acc + Interval(-t, t)

    def __repr__(self) -> str:
        return (
            f"PowerSeries(degree={self.degree}, tail={self.tail:.3e}, "
            f"radius={self.radius})"
        )


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def ps_const(c: PiPoly, degree: int, radius: float) -> PowerSeries:
    coeffs = [c] + [_ZERO] * degree
    return PowerSeries(coeffs, 0.0, radius)


def ps_poly(terms: dict, degree: int, radius: float) -> PowerSeries:
    """Exact polynomial; `terms` maps power -> PiPoly/Fraction/int."""
    coeffs = [_ZERO] * (degree + 1)
    for k, v in terms.items():
        if k > degree:
            raise DomainError("ps_poly term beyond requested degree")
        coeffs[k] = v if isinstance(v, PiPoly) else PiPoly.rational(v)
    return PowerSeries(coeffs, 0.0, radius)


def _entire_series(coeff_at, degree: int, radius: float) -> PowerSeries:
    coeffs = [PiPoly.rational(coeff_at(k)) for k in range(degree + 1)]
    return PowerSeries(coeffs, exp_tail_bound(degree + 1, radius), radius)


def ps_cos(degree: int, radius: float) -> PowerSeries:
    return _entire_series(
        lambda k: Fraction((-1) ** (k // 2), factorial(k)) if k % 2 == 0 else 0,
        degree,
        radius,
    )


def ps_sin(degree: int, radius: float) -> PowerSeries:
    return _entire_series(
        lambda k: Fraction((-1) ** (k // 2), factorial(k)) if k % 2 == 1 else 0,
        degree,
        radius,
    )


def ps_sinc(degree: int, radius: float) -> PowerSeries:
    return _entire_series(
        lambda k: Fraction((-1) ** (k // 2), factorial(k + 1)) if k % 2 == 0 else 0,
        degree,
        radius,
    )


def ps_p(degree: int, radius: float) -> PowerSeries:
    # coefficients (-1)^m 2(m+1)/(2m+3)! at power 2m; majorized by 1/k! as well
    return _entire_series(
        lambda k: (
            Fraction((-1) ** (k // 2) * 2 * (k // 2 + 1), factorial(k + 3))
            if k % 2 == 0
            else 0
        ),
        degree,
        radius,
    )
