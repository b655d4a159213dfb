import random
from fractions import Fraction

import mpmath as mp
import pytest

from tancert.enclosures import cos_enc, p_enc, sinc_enc
from tancert.errors import DomainError, RadiusTooLarge
from tancert.interval import Interval, half_pi_enclosure
from tancert.taylor import (
    CENTER_HALF_PI,
    CENTER_ZERO,
    tm_add,
    tm_build,
    tm_eval,
    tm_int_pow,
    tm_mul,
    tm_scale,
)

from conftest import contains, mp_p, mp_sinc


def test_cos_model_textbook_coefficients():
    m = tm_build("cos", 0, 4, 0.25)
    assert contains(m.coeffs[0], 1)
    assert contains(m.coeffs[2], Fraction(-1, 2))
    assert contains(m.coeffs[4], Fraction(1, 24))
    assert m.coeffs[1] == Interval.point(0.0)
    # Lagrange-style bound at the next omitted order: 0.25^6/6! ~ 3.4e-7
    assert max(abs(m.remainder.lo), abs(m.remainder.hi)) <= 4e-7


def test_p_model_coefficients():
    m = tm_build("p", 0, 4, 0.25)
    assert contains(m.coeffs[0], Fraction(1, 3))
    assert contains(m.coeffs[2], Fraction(-1, 30))


def test_model_product_contains_cos_squared(oracle):
    m = tm_build("cos", 0, 4, 0.25)
    sq = tm_mul(m, m)
    v = tm_eval(sq, Interval.point(0.1))
    assert contains(v, mp.cos(mp.mpf("0.1")) ** 2)


def test_model_vs_point_agreement_center_zero(oracle):
    rng = random.Random(3)
    models = {
        "cos": (tm_build("cos", 0, 16, 0.25), cos_enc),
        "sinc": (tm_build("sinc", 0, 16, 0.25), sinc_enc),
        "p": (tm_build("p", 0, 16, 0.25), p_enc),
    }
    for name, (model, direct) in models.items():
        for _ in range(50):
            x = Interval.point(rng.uniform(0.0, 0.25))
            assert tm_eval(model, x).intersects(direct(x)), name


def test_model_values_center_half_pi(oracle):
    for name, fn in [("cos", mp.cos), ("sinc", mp_sinc), ("p", mp_p)]:
        model = tm_build(name, "pi/2", 14, 0.3)
        for off in (0.0, 0.1, -0.2, 0.29):
            x = 1.5707963267948966 + off
            assert contains(tm_eval(model, Interval.point(x)), fn(mp.mpf(x))), name


def test_model_vs_direct_near_half_pi():
    model = tm_build("p", "pi/2", 14, 0.3)
    for off in (0.01, 0.12, 0.25):
        x = Interval.point(1.5707963267948966 - off)
        assert tm_eval(model, x).intersects(p_enc(x))


def test_scale_add_int_pow(oracle):
    c = tm_build("cos", 0, 10, 0.25)
    s = tm_build("sinc", 0, 10, 0.25)
    combo = tm_add(tm_scale(c, 2), tm_scale(s, Fraction(-1, 3)))
    x = Interval.point(0.2)
    expected = 2 * mp.cos(mp.mpf("0.2")) - mp_sinc(mp.mpf("0.2")) / 3
    assert contains(tm_eval(combo, x), expected)
    cube = tm_int_pow(c, 3)
    assert contains(tm_eval(cube, x), mp.cos(mp.mpf("0.2")) ** 3)


def test_radius_limits():
    with pytest.raises(RadiusTooLarge):
        tm_build("cos", 0, 8, 1.5)
    with pytest.raises(RadiusTooLarge):
        tm_build("sinc", "pi/2", 8, 0.6)
    with pytest.raises(DomainError):
        tm_build("cos", 0, 1, 0.25)
    with pytest.raises(DomainError):
        tm_build("tan", 0, 8, 0.25)


def test_eval_outside_radius_rejected():
    m = tm_build("cos", 0, 8, 0.25)
    with pytest.raises(DomainError):
        tm_eval(m, Interval.point(0.3))


def test_center_mismatch_rejected():
    a = tm_build("cos", 0, 8, 0.25)
    b = tm_build("cos", "pi/2", 8, 0.25)
    with pytest.raises(DomainError):
        tm_add(a, b)


def test_remainder_shrinks_with_degree():
    lo = tm_build("cos", 0, 6, 0.25)
    hi = tm_build("cos", 0, 12, 0.25)
    assert hi.remainder.hi < lo.remainder.hi


def test_half_pi_center_enclosure_is_half_pi():
    m = tm_build("cos", "pi/2", 8, 0.25)
    assert m.center == CENTER_HALF_PI
    assert m.center_enclosure() == half_pi_enclosure()
    z = tm_build("cos", 0, 8, 0.25)
    assert z.center == CENTER_ZERO
