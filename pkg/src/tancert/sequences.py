"""Exact verification of the alternating-series lemma behind the main bound.

The trigonometric combination

    phi(x) = (9 - 24 x^2) cos x - 9 cos 3x - 4x sin 3x

expands as 3 * sum_{n>=4} (-1)^n T_n x^(2n) / (2n)! with

    T_n = 2(4n-1)^2 + 1 + (8n-27) * 9^(n-1),

an integer sequence whose first four entries vanish.  Positivity of
phi on (0, pi/2] reduces to the exact combinatorial facts checked here:
T_n > 0 for n >= 4, and the decrease of the terms T_n x^(2n)/(2n)! on
(0, sqrt 3], which is equivalent to positivity of

    U_n = (2n+2)(2n+1) T_n - 3 T_{n+1} = B_n + A_n * 9^(n-1),

    A_n = 32n^3 - 60n^2 - 362n + 459,
    B_n = 128n^4 + 128n^3 - 116n^2 - 158n - 51.

Everything in this module is exact integer/rational arithmetic except
phi_lemma_enc, which evaluates the alternating partial sum in interval
arithmetic with a first-omitted-term remainder.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError, IdentityMismatch
from .interval import Interval, int_pow, rational_enclosure

_A_COEFFS = (459, -362, -60, 32)
_B_COEFFS = (-51, -158, -116, 128, 128)
# expanded forms of B(n+1) and A(n+4); the grouped display "437n + 69(n-1)"
# is the same linear part 506n - 69
_B_SHIFT1_EXPECTED = (-69, 506, 1036, 640, 128)
_A_SHIFT4_EXPECTED = (99, 694, 324, 32)


@functools.lru_cache(maxsize=None)
def t_seq(n: int) -> Fraction:
    """Exact T_n; integer-valued even at n=0 where 9^(n-1) is 1/9."""
    if n < 0:
        raise DomainError("t_seq requires n >= 0")
    value = 2 * Fraction(4 * n - 1) ** 2 + 1 + (8 * n - 27) * Fraction(9) ** (n - 1)
    if value.denominator != 1:
        raise AssertionError(f"T_{n} is not an integer: {value}")
    return value


def _poly_eval(coeffs, n: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc


@dataclass(frozen=True)
class SeqTerm:
    """Exact values of all four sequences at one index.

    T is kept rational because its 9^(n-1) factor is 1/9 at n = 0 before
    the whole expression collapses to an integer; integrality is asserted,
    not assumed.
    """

    n: int
    T: Fraction
    U: int
    A: int
    B: int


def seq_term(n: int) -> SeqTerm:
    via_rec, closed = u_seq(n)
    assert via_rec == closed
    return SeqTerm(n=n, T=t_seq(n), U=via_rec, A=a_seq(n), B=b_seq(n))


def a_seq(n: int) -> int:
    """Exact A_n = 32n^3 - 60n^2 - 362n + 459."""
    return _poly_eval(_A_COEFFS, n)


def b_seq(n: int) -> int:
    """Exact B_n = 128n^4 + 128n^3 - 116n^2 - 158n - 51."""
    return _poly_eval(_B_COEFFS, n)


def u_seq(n: int) -> tuple[int, int]:
    """U_n by both routes: the T recombination and the closed form.

    Returns (via_recurrence, via_closed_form); the two are equal for
    every n as an exact identity.
    """
    if n < 0:
        raise DomainError("u_seq requires n >= 0")
    via_rec = (2 * n + 2) * (2 * n + 1) * t_seq(n) - 3 * t_seq(n + 1)
    closed = _poly_eval(_B_COEFFS, n) + _poly_eval(_A_COEFFS, n) * Fraction(9) ** (
        n - 1
    )
    if via_rec.denominator != 1 or closed.denominator != 1:
        raise AssertionError(f"U_{n} not integral")
    return int(via_rec), int(closed)


def _compose_shift(coeffs, shift: int) -> tuple[int, ...]:
    """Exact coefficients of p(n + shift) from those of p(n)."""
    out = [0] * len(coeffs)
    for k, c in enumerate(coeffs):
        # c * (n + shift)^k via binomial expansion
        binom = 1
        power = 1
        for j in range(k, -1, -1):
            out[j] += c * binom * power
            if j:
                binom = binom * j // (k - j + 1)
                power *= shift
    return tuple(out)


@dataclass(frozen=True)
class ShiftIdentityReport:
    n_max: int
    b_shift_coeffs: tuple[int, ...]
    a_shift_coeffs: tuple[int, ...]
    shifted_coeffs_imply_positivity: bool
    scan_all_positive: bool
    u_routes_agree: bool

    @property
    def ok(self) -> bool:
        return self.shifted_coeffs_imply_positivity and self.scan_all_positive and self.u_routes_agree


def verify_shift_identities(n_max: int) -> ShiftIdentityReport:
    """Check the shifted closed forms of A and B by exact expansion.

    Raises IdentityMismatch if any coefficient disagrees.  Beyond the
    identity itself, records why A_n, B_n > 0 for all n >= 4: the
    coefficients of A(n+4) are all positive, and B(n+1) has positive
    leading coefficients with linear part 506n - 69 > 0 for n >= 1.
    """
    if n_max < 8:
        raise DomainError("verify_shift_identities requires n_max >= 8")
    b1 = _compose_shift(_B_COEFFS, 1)
    if b1 != _B_SHIFT1_EXPECTED:
        bad = next(i for i, (x, y) in enumerate(zip(b1, _B_SHIFT1_EXPECTED)) if x != y)
        raise IdentityMismatch(
            f"B(n+1) coefficient of n^{bad}: computed {b1[bad]}, stated {_B_SHIFT1_EXPECTED[bad]}"
        )
    a4 = _compose_shift(_A_COEFFS, 4)
    if a4 != _A_SHIFT4_EXPECTED:
        bad = next(i for i, (x, y) in enumerate(zip(a4, _A_SHIFT4_EXPECTED)) if x != y)
        raise IdentityMismatch(
            f"A(n+4) coefficient of n^{bad}: computed {a4[bad]}, stated {_A_SHIFT4_EXPECTED[bad]}"
        )
    # all-n>=4 positivity from the shifted coefficient signs
    a_positive = all(c > 0 for c in a4)
    # B(n+1): nonneg high coefficients and 506n - 69 > 0 for n >= 1 gives
    # B(m) > 0 for m >= 2 (in particular m >= 4)
    b_positive = all(c > 0 for c in b1[1:]) and b1[1] + b1[0] > 0
    scan = all(
        _poly_eval(_A_COEFFS, n) > 0 and _poly_eval(_B_COEFFS, n) > 0
        for n in range(4, n_max + 1)
    )
    routes = True
    for n in range(n_max + 1):
        via_rec, closed = u_seq(n)
        if via_rec != closed:
            raise IdentityMismatch(f"U_{n} routes disagree: {via_rec} != {closed}")
        if n >= 4 and via_rec <= 0:
            routes = False
    return ShiftIdentityReport(
        n_max=n_max,
        b_shift_coeffs=b1,
        a_shift_coeffs=a4,
        shifted_coeffs_imply_positivity=a_positive and b_positive,
        scan_all_positive=scan,
        u_routes_agree=routes,
    )


# ---------------------------------------------------------------------------
# interval evaluation of phi via the alternating series
# ---------------------------------------------------------------------------

_MAX_TERMS = 200


@functools.lru_cache(maxsize=None)
def _phi_coeff(n: int) -> Interval:
    return rational_enclosure(Fraction((-1) ** n * 3 * t_seq(n), factorial(2 * n)))


@functools.lru_cache(maxsize=1)
def _term_decrease_verified() -> bool:
    # decrease of T_n x^(2n)/(2n)! on (0, sqrt3] from index 4 on is exactly
    # U_n > 0; check it once for every index the enclosure may ever omit
    for n in range(4, _MAX_TERMS + 8):
        via_rec, closed = u_seq(n)
        if via_rec <= 0 or closed <= 0:
            return False
    return True


def phi_lemma_enc(x: Interval, terms: int = 24) -> Interval:
    """Enclosure of phi(x) on x within [0, sqrt 3], via the series in T_n.

    The remainder is the first omitted term evaluated at x.hi, signed
    like that term (alternating series with exactly-verified decrease).
    """
    if terms < 2 or terms > _MAX_TERMS:
        raise DomainError("phi_lemma_enc needs 2 <= terms <= 200")
    if x.lo < 0.0:
        raise DomainError("phi_lemma_enc domain starts at 0")
    if Fraction(x.hi) ** 2 > 3:
        raise DomainError("phi_lemma_enc domain ends at sqrt(3)")
    if not _term_decrease_verified():
        raise AssertionError("alternating term decrease failed")  # pragma: no cover
    u = int_pow(x, 2)
    acc = _phi_coeff(4 + terms - 1)
    for n in range(4 + terms - 2, 3, -1):
        acc = acc * u + _phi_coeff(n)
    acc = acc * int_pow(x, 8)
    n0 = 4 + terms
    t = (
        int_pow(Interval.point(x.mag()), 2 * n0)
        * rational_enclosure(Fraction(3 * t_seq(n0), factorial(2 * n0)))
    ).hi
    if n0 % 2 == 0:
        return acc + Interval(0.0, t)
    return acc + Interval(-t, 0.0)


def phi_trig_enc(x: Interval) -> Interval:
    """phi by direct interval evaluation of its trig form.

    cos 3x and sin 3x are evaluated at the tripled argument enclosure
    (no triple-angle polynomial identities); 4x sin 3x is written
    12 x^2 sinc(3x) to stay division-free.  Cross-check for the series
    route, not used by certificates.
    """
    from .enclosures import _cos_enc_any, _sinc_enc_any

    x3 = x.scale(3)
    poly = Interval(9.0, 9.0) - int_pow(x, 2).scale(24)
    return (
        poly * _cos_enc_any(x)
        - _cos_enc_any(x3).scale(9)
        - int_pow(x, 2).scale(12) * _sinc_enc_any(x3)
    )


def certify_phi_positive(delta: float = 0.25, max_depth: int = 48):
    """Prove phi > 0 on (0, pi/2]; returns the engine's Certificate."""
    if not 0.0 < delta < 1.0:
        raise DomainError("certify_phi_positive needs 0 < delta < 1")
    from .certifier import CertifyConfig, certify  # local import: layering

    cfg = CertifyConfig(delta=delta, max_depth=max_depth)
    return certify("lemma_phi", cfg)
