"""Acceptance suite: one test per criterion, one PASS line per criterion.

Run with `pytest tests/test_acceptance.py -s` to see the lines as they
print; each test also enforces its stated runtime budget.
"""

import filecmp
import random
import time
from fractions import Fraction

import mpmath as mp
import sympy as sp

from tancert import cli
from tancert.analysis import (
    _lower_gap,
    _upper_gap,
    crossover_lower,
    crossover_upper,
    exponent_ratio,
)
from tancert.certifier import CATALOG, certify, near_zero_proof
from tancert.enclosures import cos_enc, p_enc, r_enc, s_enc, sinc_enc, tan_enc
from tancert.interval import Interval, arith, half_pi_enclosure
from tancert.sequences import phi_lemma_enc, t_seq, u_seq, verify_shift_identities

from conftest import contains, mp_p, mp_sinc

# frozen 60-digit oracle references (mpmath, this repository's test oracle)
TAN_1 = mp.mpf("1.55740772465490223050697480745836017308725077238152003838395")
EQTH_LO_1 = mp.mpf("1.51913590821830074350232493581945339102908359079384001279465")
EQTH_HI_1 = mp.mpf("1.56723305966887167573396864415203914590253747893748796660186")
BS_LO_1 = mp.mpf("1.36295386423576595058450508946542274098782063976183435884939")
BS_HI_1 = mp.mpf("1.68147693211788297529225254473271137049391031988091717942469")
QI_LO_1 = mp.mpf("1.54098769662065363073426330766111468974496676965086933845119")
QI_HI_1 = mp.mpf("1.58914645436718186905060275916840168749702431192525789725288")


def _report(n, text):
    print(f"PASS criterion {n}: {text}")


def test_criterion_1_sequence_exactness():
    t0 = time.perf_counter()
    assert [t_seq(n) for n in range(4)] == [0, 0, 0, 0]
    for n in range(4, 201):
        assert t_seq(n) > 0
        rec, closed = u_seq(n)
        assert rec == closed and rec > 0
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    _report(1, f"T0..T3 = 0; T_n, U_n > 0 with exact route agreement for n <= 200 ({elapsed:.3f}s)")


def test_criterion_2_shifted_identities():
    t0 = time.perf_counter()
    report = verify_shift_identities(200)
    assert report.ok
    assert report.b_shift_coeffs == (-69, 506, 1036, 640, 128)
    assert report.a_shift_coeffs == (99, 694, 324, 32)
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    _report(2, f"B(n+1), A(n+4) match coefficient-by-coefficient ({elapsed:.3f}s)")


def test_criterion_3_lemma_certificate():
    t0 = time.perf_counter()
    cert = certify("lemma_phi")
    assert cert.status == "certified"
    assert cert.stats.box_count <= 10**4
    v = phi_lemma_enc(half_pi_enclosure())
    with mp.workdps(60):
        assert contains(v, 2 * mp.pi)
    assert v.width <= 1e-10
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0
    _report(
        3,
        f"lemma_phi certified with {cert.stats.box_count} boxes; "
        f"phi(pi/2) encloses 2*pi within {v.width:.2e} ({elapsed:.2f}s)",
    )


def test_criterion_4_main_theorem():
    with mp.workdps(60):
        t0 = time.perf_counter()
        lower = certify("main_lower")
        t_lower = time.perf_counter() - t0
        t0 = time.perf_counter()
        upper = certify("main_upper")
        t_upper = time.perf_counter() - t0
        assert lower.status == "certified" and t_lower < 30.0
        assert upper.status == "certified" and t_upper < 30.0
        rng = random.Random(64)
        for _ in range(1000):
            x = mp.mpf(rng.uniform(1e-4, 1.5707))
            t = mp.tan(x)
            assert x + x**2 * t / 3 < t < x + x ** mp.mpf("1.8") * t ** mp.mpf("1.2") / 3
        x = mp.mpf(1)
        t = mp.tan(x)
        assert abs((x + x**2 * t / 3) - EQTH_LO_1) < 1e-12
        assert abs(t - TAN_1) < 1e-12
        assert abs((x + x ** mp.mpf("1.8") * t ** mp.mpf("1.2") / 3) - EQTH_HI_1) < 1e-12
    _report(
        4,
        "main_lower and main_upper certified; 10^3-point 60-digit oracle confirms "
        f"the original chain, x=1 values to 1e-12 ({t_lower:.2f}s / {t_upper:.2f}s)",
    )


def test_criterion_5_near_zero_leading_coefficients():
    x = sp.symbols("x")
    sinc = sp.sin(x) / x
    p = (sp.sin(x) - x * sp.cos(x)) / x**3
    oracle_forms = {
        "prop1_lower": (3 * p - sp.cos(x), 2, Fraction(2, 5)),
        "main_lower": (3 * p - sinc, 2, Fraction(1, 15)),
        "main_upper": (sinc**6 - 243 * p**5 * sp.cos(x), 4, Fraction(2, 35)),
        "qi_lower": (
            x * sinc - (x + x**3 / 3) * sp.cos(x) - sp.Rational(2, 15) * x**5 * sinc,
            7,
            Fraction(1, 105),
        ),
        "prop1_upper": (
            x * (x**2 * sinc**3 - 3 * sinc * sp.cos(x) ** 2 + 3 * sp.cos(x) ** 3),
            5,
            Fraction(3, 5),
        ),
    }
    for cid, (expr, k0, stated) in oracle_forms.items():
        series = sp.expand(sp.series(expr, x, 0, k0 + 2).removeO())
        lead = sp.nsimplify(series.coeff(x, k0))
        assert lead == sp.Rational(stated.numerator, stated.denominator), cid
        proof = near_zero_proof(cid, 0.25, 16)
        assert proof.order == k0
        assert contains(proof.leading_coefficient, stated)
        assert proof.leading_coefficient.width < 1e-12
    _report(
        5,
        "independent series oracle gives 2/5, 1/15, 2/35, 1/105, 3/5; "
        "near_zero_proof encloses each to width < 1e-12",
    )


def test_criterion_6_crossovers():
    t0 = time.perf_counter()
    up = crossover_upper(1e-3)
    lo = crossover_lower(1e-3)
    elapsed = time.perf_counter() - t0
    assert up.bracket.width <= 1e-3 and up.bracket.lo <= 1.2332 <= up.bracket.hi
    assert lo.bracket.width <= 1e-3 and lo.bracket.lo <= 1.5255 <= lo.bracket.hi
    assert _upper_gap(Interval.point(up.bracket.lo)).hi < 0
    assert _upper_gap(Interval.point(up.bracket.hi)).lo > 0
    assert _lower_gap(Interval.point(lo.bracket.lo)).hi < 0
    assert _lower_gap(Interval.point(lo.bracket.hi)).lo > 0
    assert elapsed < 5.0
    _report(
        6,
        f"sign-certified brackets [{up.bracket.lo:.5f}, {up.bracket.hi:.5f}] about 1.2332 "
        f"and [{lo.bracket.lo:.5f}, {lo.bracket.hi:.5f}] about 1.5255 ({elapsed:.2f}s)",
    )


def test_criterion_7_optimality_numerics():
    phi001 = exponent_ratio(0.01).phi
    assert 1.1999 <= phi001 <= 1.2001
    trend = [exponent_ratio(x).phi for x in (1.45, 1.50, 1.55, 1.57)]
    assert trend == sorted(trend, reverse=True) and trend[-1] > 1.0
    grid = [0.005 + i * (1.5707 - 0.005) / 999 for i in range(1000)]
    phis = [exponent_ratio(x).phi for x in grid]
    assert all(1.0 < v < 1.2 for v in phis)
    _report(
        7,
        f"phi(0.01) = {phi001:.6f}; descending trend {trend[0]:.4f}..{trend[-1]:.4f}; "
        "10^3-point sweep strictly inside (1, 1.2)",
    )


def test_criterion_8_comparison_inequalities():
    for cid in ("bs_lower", "bs_upper", "qi_lower", "qi_upper"):
        assert certify(cid).status == "certified", cid
    with mp.workdps(60):
        t = mp.tan(1)
        bs_lo = 8 / (mp.pi**2 - 4)
        bs_hi = mp.pi**2 / (mp.pi**2 - 4)
        qi_lo = 1 + mp.mpf(1) / 3 + mp.mpf(2) / 15 * t
        qi_hi = 1 + mp.mpf(1) / 3 + (2 / mp.pi) ** 4 * t
        assert bs_lo < t < bs_hi and qi_lo < t < qi_hi
        # quoted decimals at 1e-5 (the bs lower reference is the oracle value
        # 1.3629539; see the notes on the spec's 1.36294 digit slip)
        assert abs(bs_lo - BS_LO_1) < 1e-5
        assert abs(bs_hi - mp.mpf("1.68148")) < 1e-5
        assert abs(qi_lo - mp.mpf("1.54099")) < 1e-5
        assert abs(qi_hi - mp.mpf("1.58915")) < 1e-5
    _report(
        8,
        "bs/qi certificates green; x=1 oracle: "
        f"{float(bs_lo):.5f} < tan 1 < {float(bs_hi):.5f}, "
        f"{float(qi_lo):.5f} < tan 1 < {float(qi_hi):.5f}",
    )


def _exact_op(op, a, b):
    fa, fb = Fraction(a), Fraction(b)
    if op == "add":
        return fa + fb
    if op == "sub":
        return fa - fb
    if op == "mul":
        return fa * fb
    return fa / fb


def test_criterion_9_soundness_suite():
    rng = random.Random(20260809)
    ops = ("add", "sub", "mul", "div")
    checks = 0
    for _ in range(10_000):
        op = rng.choice(ops)
        a_lo, a_hi = sorted((rng.uniform(-10, 10), rng.uniform(-10, 10)))
        b_lo, b_hi = sorted((rng.uniform(-10, 10), rng.uniform(-10, 10)))
        if op == "div" and b_lo <= 0.0 <= b_hi:
            shift = 0.5 + abs(b_lo)
            b_lo, b_hi = b_lo + shift, b_hi + shift
        result = arith(op, Interval(a_lo, a_hi), Interval(b_lo, b_hi))
        r_lo, r_hi = Fraction(result.lo), Fraction(result.hi)
        for _ in range(100):
            pa = min(max(rng.uniform(a_lo, a_hi), a_lo), a_hi)
            pb = min(max(rng.uniform(b_lo, b_hi), b_lo), b_hi)
            assert r_lo <= _exact_op(op, pa, pb) <= r_hi
            checks += 1
    assert checks == 10**6

    enc_checks = 0
    with mp.workdps(40):
        while enc_checks < 10**4:
            x = rng.uniform(0.0, 1.5707)
            xi = Interval.point(x)
            mx = mp.mpf(x)
            assert contains(cos_enc(xi), mp.cos(mx))
            assert contains(sinc_enc(xi), mp_sinc(mx))
            assert contains(p_enc(xi), mp_p(mx))
            enc_checks += 3
            if 0 < x < 1.57:
                assert contains(tan_enc(xi), mp.tan(mx))
                assert contains(r_enc(xi), (mp.tan(mx) - mx) / mx**3)
                assert contains(s_enc(xi), mp.tan(mx) / mx)
                enc_checks += 3

    guarded = certify("main_lower", use_near_zero=False)
    assert guarded.status == "undecided"
    _report(
        9,
        f"{checks} interval containment checks and {enc_checks} enclosure checks, "
        "zero violations; near-zero-disabled run is undecided (never falsified)",
    )


def test_criterion_10_determinism(tmp_path):
    dirs = [tmp_path / "run1", tmp_path / "run2"]
    for d in dirs:
        code = cli.main(["--out", str(d), "certify", "all", "--threads", "8"])
        assert code == 0
    names = sorted(p.name for p in dirs[0].glob("cert-*.json"))
    assert len(names) == 9
    for name in names:
        assert filecmp.cmp(dirs[0] / name, dirs[1] / name, shallow=False), name
    for cid in CATALOG:
        assert (dirs[0] / f"cert-{cid}.json").exists()
    _report(10, "certify all --threads 8 twice: all nine certificate files byte-identical")
