"""Shared oracle helpers: arbitrary-precision reference values via mpmath.

Containment checks compare mpf values against interval endpoints
directly; mpmath converts binary64 endpoints exactly, so `contains`
is itself exact.
"""

from fractions import Fraction

import mpmath as mp
import pytest

ORACLE_DPS = 60


def contains(iv, value) -> bool:
    """Exact membership of an mpf/int/Fraction in an Interval."""
    if isinstance(value, (int, Fraction)):
        return Fraction(iv.lo) <= value <= Fraction(iv.hi)
    return mp.mpf(iv.lo) <= value <= mp.mpf(iv.hi)


@pytest.fixture(scope="session")
def oracle():
    with mp.workdps(ORACLE_DPS):
        yield mp


def mp_p(x):
    """(sin x - x cos x)/x^3 with the limit value at 0."""
    x = mp.mpf(x)
    if x == 0:
        return mp.mpf(1) / 3
    return (mp.sin(x) - x * mp.cos(x)) / x**3


def mp_sinc(x):
    x = mp.mpf(x)
    if x == 0:
        return mp.mpf(1)
    return mp.sin(x) / x


def mp_phi(x):
    x = mp.mpf(x)
    return (9 - 24 * x**2) * mp.cos(x) - 9 * mp.cos(3 * x) - 4 * x * mp.sin(3 * x)


def mp_form(inequality_id, x):
    """The entire-form numerator F at a point, straight from its definition."""
    x = mp.mpf(x)
    c = mp.cos(x)
    s = mp_sinc(x)
    p = mp_p(x)
    if inequality_id == "prop1_lower":
        return 3 * p - c
    if inequality_id == "prop1_upper":
        return x * (x**2 * s**3 - 3 * s * c**2 + 3 * c**3)
    if inequality_id == "main_lower":
        return 3 * p - s
    if inequality_id == "main_upper":
        return s**6 - 243 * p**5 * c
    if inequality_id == "bs_lower":
        return x * s * (mp.pi**2 - 4 * x**2) - 8 * x * c
    if inequality_id == "bs_upper":
        return mp.pi**2 * x * c - x * s * (mp.pi**2 - 4 * x**2)
    if inequality_id == "qi_lower":
        return x * s - (x + x**3 / 3) * c - mp.mpf(2) / 15 * x**4 * (x * s)
    if inequality_id == "qi_upper":
        return (x + x**3 / 3) * c + (2 / mp.pi) ** 4 * x**4 * (x * s) - x * s
    if inequality_id == "lemma_phi":
        return mp_phi(x)
    raise ValueError(inequality_id)
