import mpmath as mp
import pytest

from tancert.analysis import (
    REPLAY_IDENTITIES,
    _certified_bisection,
    _lower_gap,
    _upper_gap,
    crossover_lower,
    crossover_upper,
    exponent_ratio,
    optimality_scan,
    replay_identity,
)
from tancert.errors import DomainError, IdentityViolation, NoSignChange
from tancert.interval import Interval, certainly_negative, certainly_positive


def test_exponent_ratio_near_zero_limit():
    assert abs(exponent_ratio(0.1).phi - 1.19966) < 1e-4
    assert abs(exponent_ratio(0.01).phi - 1.2) < 1e-4


def test_exponent_ratio_near_half_pi():
    phi = exponent_ratio(1.57).phi
    assert 1.02 < phi < 1.04  # slow descent toward 1


def test_exponent_ratio_strictly_inside_at_one():
    assert 1.0 < exponent_ratio(1.0).phi < 1.2


def test_exponent_ratio_domain():
    with pytest.raises(DomainError):
        exponent_ratio(1e-7)
    with pytest.raises(DomainError):
        exponent_ratio(1.5707963267948966)


def test_precision_robustness():
    for x in (0.05, 0.7, 1.3, 1.55):
        a = exponent_ratio(x, 200).phi
        b = exponent_ratio(x, 400).phi
        assert abs(a - b) < 2.0**-40


def test_optimality_scan_dense_grid():
    grid = [0.01 + i * (1.56 - 0.01) / 199 for i in range(200)]
    report = optimality_scan(grid)
    assert report.all_inside_open_interval
    assert 1.0 < report.inf_phi and report.sup_phi < 1.2


def test_optimality_scan_near_zero_limit():
    grid = [1e-4 * 10**(i / 4) for i in range(9)]  # 1e-4 .. 1e-2
    report = optimality_scan(grid)
    assert all(abs(s.phi - 1.2) < 1e-4 for s in report.samples)


def test_optimality_scan_descends_toward_one():
    report = optimality_scan([1.45, 1.50, 1.55, 1.57])
    phis = [s.phi for s in report.samples]
    assert phis == sorted(phis, reverse=True)
    assert phis[-1] > 1.0


def test_crossover_upper_bracket(oracle):
    res = crossover_upper(1e-3)
    assert res.bracket.width <= 1e-3
    assert res.bracket.lo <= 1.2332 <= res.bracket.hi
    assert certainly_negative(_upper_gap(Interval.point(res.bracket.lo)))
    assert certainly_positive(_upper_gap(Interval.point(res.bracket.hi)))


def test_crossover_lower_bracket(oracle):
    res = crossover_lower(1e-3)
    assert res.bracket.width <= 1e-3
    assert res.bracket.lo <= 1.5255 <= res.bracket.hi
    assert certainly_negative(_lower_gap(Interval.point(res.bracket.lo)))
    assert certainly_positive(_lower_gap(Interval.point(res.bracket.hi)))


def test_gap_signs_at_reference_points(oracle):
    assert certainly_negative(_upper_gap(Interval.point(1.2)))
    assert certainly_positive(_upper_gap(Interval.point(1.3)))
    assert certainly_negative(_lower_gap(Interval.point(1.5)))
    assert certainly_positive(_lower_gap(Interval.point(1.53)))
    # the un-powered bound differences have the same signs
    for x, sign in ((mp.mpf("1.2"), -1), (mp.mpf("1.3"), 1)):
        th = x + x ** mp.mpf("1.8") * mp.tan(x) ** mp.mpf("1.2") / 3
        qi = x + x**3 / 3 + (2 / mp.pi) ** 4 * x**4 * mp.tan(x)
        assert (th - qi) * sign > 0
    for x, sign in ((mp.mpf("1.5"), -1), (mp.mpf("1.53"), 1)):
        th = x + x**2 * mp.tan(x) / 3
        qi = x + x**3 / 3 + mp.mpf(2) / 15 * x**4 * mp.tan(x)
        assert (th - qi) * sign > 0


def test_crossover_tolerance_guard():
    with pytest.raises(DomainError):
        crossover_upper(1e-9)


def test_no_sign_change():
    with pytest.raises(NoSignChange):
        _certified_bisection(_upper_gap, 1.25, 1.3, 1e-3, "test")


def test_replay_identities_pass():
    for ident in REPLAY_IDENTITIES:
        report = replay_identity(ident, samples=15)
        assert report.worst_residual < 1e-25


def test_replay_violation_raised():
    with pytest.raises(IdentityViolation):
        replay_identity("eq24_quotient", samples=10, tol=1e-60)


def test_replay_rejects_small_sample_count():
    with pytest.raises(DomainError):
        replay_identity("eq24_quotient", samples=3)


def test_replay_deterministic():
    a = replay_identity("thm_a_h_prime", samples=12)
    b = replay_identity("thm_a_h_prime", samples=12)
    assert a == b


def test_h_prime_simplification_is_exact():
    # the closed form asserted by the replay: (3+t^2)^2 - 3(3-t^2)(1+t^2) = 4 t^4
    import sympy as sp

    t = sp.symbols("t")
    assert sp.expand((3 + t**2) ** 2 - 3 * (3 - t**2) * (1 + t**2) - 4 * t**4) == 0
