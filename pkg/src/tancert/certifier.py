"""Branch-and-bound certification of the cataloged tangent inequalities.

Each inequality is recast as strict positivity of an ENTIRE form F on
(0, pi/2) — built only from cos, sinc, p, x, pi and rational constants,
with no logs, fractional powers, or divisions.  The recasting steps all
preserve positivity (multiplying by cos^k > 0 or x^k > 0, or raising two
positive sides to the 5th power); each catalog entry records its own
derivation.

A certificate for F > 0 has three parts:

  * near 0:        F vanishes to order k0, so the exact series of F is
                   divided by x^k0 and the quotient is bounded below by
                   a positive constant on (0, delta];
  * near pi/2:     same in eps = pi/2 - x for the forms whose margin
                   vanishes there (k1 > 0);
  * the middle:    adaptive bisection into boxes whose interval margins
                   are certainly positive.

The resulting record is self-contained and re-checkable from disk.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .enclosures import cos_enc, p_enc, sinc_enc
from .errors import CosNotPositive, DomainError, NotPositive, OrderMismatch
from .interval import (
    Interval,
    _HALF_PI_HI,
    _sub_up,
    certainly_negative,
    certainly_positive,
    int_pow,
    pi_enclosure,
    rational_enclosure,
    split,
)
from .sequences import phi_lemma_enc, t_seq
from .series import PiPoly, PowerSeries, ps_const, ps_cos, ps_p, ps_poly, ps_sinc

SCHEMA = "tancert-cert-v1"

_PI_SQ = int_pow(pi_enclosure(), 2)
_TWO_OVER_PI_4 = int_pow(Interval(2.0, 2.0) / pi_enclosure(), 4)
_C_1_3 = rational_enclosure(Fraction(1, 3))
_C_2_15 = rational_enclosure(Fraction(2, 15))


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InequalitySpec:
    id: str
    statement: str
    entire_form: str  # the normative division-free numerator F
    derivation: str
    vanish_order_zero: int
    leading_coeff_zero: PiPoly
    vanish_order_half_pi: int = 0
    leading_coeff_half_pi: PiPoly | None = None
    closed_at_half_pi: bool = False


CATALOG: dict[str, InequalitySpec] = {
    s.id: s
    for s in [
        InequalitySpec(
            id="prop1_lower",
            entire_form="3*p - cos",
            statement="x + x^3/3 < tan x",
            derivation=(
                "tan x - x - x^3/3 > 0; multiply by cos x > 0 and divide by x^3 > 0: "
                "F = 3p - cos with p = (sin x - x cos x)/x^3 (after scaling by 3)."
            ),
            vanish_order_zero=2,
            leading_coeff_zero=PiPoly.rational(Fraction(2, 5)),
        ),
        InequalitySpec(
            id="prop1_upper",
            entire_form="x*(x^2*sinc^3 - 3*sinc*cos^2 + 3*cos^3)",
            statement="tan x < x + tan^3(x)/3",
            derivation=(
                "tan^3(x)/3 + x - tan x > 0; multiply by 3 cos^3 x > 0 and write "
                "sin = x sinc: F = x (x^2 sinc^3 - 3 sinc cos^2 + 3 cos^3)."
            ),
            vanish_order_zero=5,
            leading_coeff_zero=PiPoly.rational(Fraction(3, 5)),
        ),
        InequalitySpec(
            id="main_lower",
            entire_form="3*p - sinc",
            statement="x^2 tan x < 3 (tan x - x)",
            derivation=(
                "3(tan x - x) - x^2 tan x > 0; multiply by cos x > 0, divide by "
                "x^3 > 0: F = 3p - sinc."
            ),
            vanish_order_zero=2,
            leading_coeff_zero=PiPoly.rational(Fraction(1, 15)),
        ),
        InequalitySpec(
            id="main_upper",
            entire_form="sinc^6 - 243*p^5*cos",
            statement="3 (tan x - x) < x^(9/5) tan^(6/5) x",
            derivation=(
                "both sides positive, so equivalent to the 5th powers "
                "243 (tan x - x)^5 < x^9 tan^6 x; multiply by cos^6 x > 0 and "
                "divide by x^15 > 0: F = sinc^6 - 243 p^5 cos."
            ),
            vanish_order_zero=4,
            leading_coeff_zero=PiPoly.rational(Fraction(2, 35)),
        ),
        InequalitySpec(
            id="bs_lower",
            entire_form="x*sinc*(pi^2 - 4*x^2) - 8*x*cos",
            statement="8x / (pi^2 - 4x^2) < tan x",
            derivation=(
                "multiply by (pi^2 - 4x^2) cos x > 0: "
                "F = x sinc (pi^2 - 4x^2) - 8x cos."
            ),
            vanish_order_zero=1,
            leading_coeff_zero=PiPoly({2: 1, 0: -8}),
            vanish_order_half_pi=2,
            leading_coeff_half_pi=PiPoly.rational(4),
        ),
        InequalitySpec(
            id="bs_upper",
            entire_form="pi^2*x*cos - x*sinc*(pi^2 - 4*x^2)",
            statement="tan x < pi^2 x / (pi^2 - 4x^2)",
            derivation=(
                "multiply by (pi^2 - 4x^2) cos x > 0: "
                "F = pi^2 x cos - x sinc (pi^2 - 4x^2)."
            ),
            vanish_order_zero=3,
            leading_coeff_zero=PiPoly({0: 4, 2: Fraction(-1, 3)}),
            vanish_order_half_pi=1,
            leading_coeff_half_pi=PiPoly({3: Fraction(1, 2), 1: -4}),
        ),
        InequalitySpec(
            id="qi_lower",
            entire_form="x*sinc - (x + x^3/3)*cos - (2/15)*x^4*x*sinc",
            statement="x + x^3/3 + (2/15) x^4 tan x < tan x",
            derivation=(
                "multiply by cos x > 0 and write sin = x sinc: "
                "F = x sinc - (x + x^3/3) cos - (2/15) x^5 sinc."
            ),
            vanish_order_zero=7,
            leading_coeff_zero=PiPoly.rational(Fraction(1, 105)),
        ),
        InequalitySpec(
            id="qi_upper",
            entire_form="(x + x^3/3)*cos + (2/pi)^4*x^4*x*sinc - x*sinc",
            statement="tan x < x + x^3/3 + (2/pi)^4 x^4 tan x",
            derivation=(
                "multiply by cos x > 0: "
                "F = (x + x^3/3) cos + (2/pi)^4 x^5 sinc - x sinc."
            ),
            vanish_order_zero=5,
            leading_coeff_zero=PiPoly({-4: 16, 0: Fraction(-2, 15)}),
            vanish_order_half_pi=1,
            leading_coeff_half_pi=PiPoly({1: Fraction(1, 2), 3: Fraction(1, 24), -1: -8}),
        ),
        InequalitySpec(
            id="lemma_phi",
            entire_form="(9 - 24*x^2)*cos - 9*cos(3x) - 4*x*sin(3x)",
            statement="(9 - 24x^2) cos x - 9 cos 3x - 4x sin 3x > 0 on (0, pi/2]",
            derivation="already entire; F = phi via its alternating series in T_n.",
            vanish_order_zero=8,
            leading_coeff_zero=PiPoly.rational(Fraction(32, 105)),
            closed_at_half_pi=True,
        ),
    ]
}


# ---------------------------------------------------------------------------
# interval evaluation of the entire forms
# ---------------------------------------------------------------------------

def _f_prop1_lower(x: Interval) -> Interval:
    return p_enc(x).scale(3) - cos_enc(x)


def _f_prop1_upper(x: Interval) -> Interval:
    s = sinc_enc(x)
    c = cos_enc(x)
    inner = (
        int_pow(x, 2) * int_pow(s, 3)
        - (s * int_pow(c, 2)).scale(3)
        + int_pow(c, 3).scale(3)
    )
    return x * inner


def _f_main_lower(x: Interval) -> Interval:
    return p_enc(x).scale(3) - sinc_enc(x)


def _f_main_upper(x: Interval) -> Interval:
    return int_pow(sinc_enc(x), 6) - (int_pow(p_enc(x), 5) * cos_enc(x)).scale(243)


def _f_bs_lower(x: Interval) -> Interval:
    weight = _PI_SQ - int_pow(x, 2).scale(4)
    return x * sinc_enc(x) * weight - (x * cos_enc(x)).scale(8)


def _f_bs_upper(x: Interval) -> Interval:
    weight = _PI_SQ - int_pow(x, 2).scale(4)
    return _PI_SQ * x * cos_enc(x) - x * sinc_enc(x) * weight


# The qi margins scale like x^7/105 and x^5/32 near 0, so their difference
# forms lose everything to cancellation there; evaluate F as x^k0 * (F/x^k0)
# with the exact divided series, whose tail is rigorous out to pi/2 at this
# degree.  (The sextic main_upper form is NOT series-evaluated: its divided
# series has exponential-type-6 coefficients whose interval Horner is far
# wider than the composed product form.)
_FACTORED_DEGREE = 40
_factored_cache: dict[str, PowerSeries] = {}


def _factored_series(inequality_id: str, k0: int) -> PowerSeries:
    if inequality_id not in _factored_cache:
        ps = form_series(inequality_id, "zero", _FACTORED_DEGREE, _HALF_PI_HI)
        _factored_cache[inequality_id] = ps.divide_power(k0)
    return _factored_cache[inequality_id]


def _f_qi_lower(x: Interval) -> Interval:
    return int_pow(x, 7) * _factored_series("qi_lower", 7).eval(x)


def _f_qi_upper(x: Interval) -> Interval:
    return int_pow(x, 5) * _factored_series("qi_upper", 5).eval(x)


def _f_lemma_phi(x: Interval) -> Interval:
    return phi_lemma_enc(x)


_FORMS = {
    "prop1_lower": _f_prop1_lower,
    "prop1_upper": _f_prop1_upper,
    "main_lower": _f_main_lower,
    "main_upper": _f_main_upper,
    "bs_lower": _f_bs_lower,
    "bs_upper": _f_bs_upper,
    "qi_lower": _f_qi_lower,
    "qi_upper": _f_qi_upper,
    "lemma_phi": _f_lemma_phi,
}


def eval_form(inequality_id: str, x: Interval) -> Interval:
    """Enclosure of the entire-form numerator F over x."""
    if inequality_id not in _FORMS:
        raise DomainError(f"unknown inequality id {inequality_id!r}")
    if x.lo < 0.0 or x.hi > _HALF_PI_HI:
        raise DomainError(f"eval_form domain [0, pi/2 + ulp] violated: {x}")
    return _FORMS[inequality_id](x)


# ---------------------------------------------------------------------------
# exact series of the forms at both endpoints
# ---------------------------------------------------------------------------

def _phi_power_series(degree: int, radius: float) -> PowerSeries:
    if degree < 8:
        raise DomainError("phi series needs degree >= 8")
    if Fraction(radius) ** 2 > 3:
        raise DomainError("phi series radius must stay within sqrt(3)")
    coeffs = [PiPoly()] * (degree + 1)
    for n in range(4, degree // 2 + 1):
        coeffs[2 * n] = PiPoly.rational(
            Fraction((-1) ** n * 3 * t_seq(n), factorial(2 * n))
        )
    n0 = degree // 2 + 1
    # alternating with exactly-verified decrease: first omitted term bounds
    # the tail; as a tail coefficient it is scaled down to power degree+1
    t = (
        int_pow(Interval.point(radius), 2 * n0 - degree - 1)
        * rational_enclosure(Fraction(3 * t_seq(n0), factorial(2 * n0)))
    ).hi
    return PowerSeries(coeffs, t, radius)


def form_series(inequality_id: str, center: str, degree: int, radius: float) -> PowerSeries:
    """Exact PowerSeries of the entire form in the local variable.

    center "zero": variable u = x.  center "half_pi": variable u = pi/2 - x,
    pi entering exactly through Q[pi, 1/pi] coefficients.
    """
    if inequality_id not in CATALOG:
        raise DomainError(f"unknown inequality id {inequality_id!r}")
    one_third = Fraction(1, 3)
    if center == "zero":
        if inequality_id == "lemma_phi":
            return _phi_power_series(degree, radius)
        cos = ps_cos(degree, radius)
        sinc = ps_sinc(degree, radius)
        if inequality_id == "prop1_lower":
            return ps_p(degree, radius).scale(3) - cos
        if inequality_id == "prop1_upper":
            inner = (
                sinc.int_pow(3).mul_monomial(2)
                - (sinc * cos.int_pow(2)).scale(3)
                + cos.int_pow(3).scale(3)
            )
            return inner.mul_monomial(1)
        if inequality_id == "main_lower":
            return ps_p(degree, radius).scale(3) - sinc
        if inequality_id == "main_upper":
            return sinc.int_pow(6) - (ps_p(degree, radius).int_pow(5) * cos).scale(243)
        if inequality_id == "bs_lower":
            weight = ps_poly({0: PiPoly({2: 1}), 2: -4}, degree, radius)
            return (sinc * weight - cos.scale(8)).mul_monomial(1)
        if inequality_id == "bs_upper":
            weight = ps_poly({0: PiPoly({2: 1}), 2: -4}, degree, radius)
            return (cos.scale(PiPoly({2: 1})) - sinc * weight).mul_monomial(1)
        if inequality_id == "qi_lower":
            cubic = ps_poly({0: 1, 2: one_third}, degree, radius)
            return (sinc - cubic * cos - sinc.mul_monomial(4).scale(Fraction(2, 15))).mul_monomial(1)
        if inequality_id == "qi_upper":
            cubic = ps_poly({0: 1, 2: one_third}, degree, radius)
            return (
                cubic * cos + sinc.mul_monomial(4).scale(PiPoly({-4: 16})) - sinc
            ).mul_monomial(1)
        raise DomainError(inequality_id)
    if center != "half_pi":
        raise DomainError(f"unknown center {center!r}")
    spec = CATALOG[inequality_id]
    if spec.vanish_order_half_pi == 0:
        raise DomainError(f"{inequality_id} needs no expansion at pi/2")
    # x = pi/2 - u;  sin x = cos u;  cos x = u sinc u
    x = ps_poly({0: PiPoly({1: Fraction(1, 2)}), 1: -1}, degree, radius)
    sin_x = ps_cos(degree, radius)
    cos_x = ps_sinc(degree, radius).mul_monomial(1)
    if inequality_id in ("bs_lower", "bs_upper"):
        weight = ps_const(PiPoly({2: 1}), degree, radius) - x.int_pow(2).scale(4)
        if inequality_id == "bs_lower":
            return sin_x * weight - (x * cos_x).scale(8)
        return (x * cos_x).scale(PiPoly({2: 1})) - sin_x * weight
    # qi_upper
    cubic = x + x.int_pow(3).scale(one_third)
    return cubic * cos_x + sin_x * (
        x.int_pow(4).scale(PiPoly({-4: 16})) - ps_const(PiPoly.rational(1), degree, radius)
    )


# ---------------------------------------------------------------------------
# endpoint proofs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EndpointProof:
    kind: str  # "zero" | "half_pi"
    bound: float  # delta, or epsilon_max
    order: int
    model_degree: int
    normalized_lower_bound: float
    leading_coefficient: Interval


def near_zero_proof(inequality_id: str, delta: float, degree: int) -> EndpointProof:
    """Certify F > 0 on (0, delta] by dividing out the vanishing order.

    Verifies that the coefficients below x^k0 vanish exactly in the
    pre-rounding exact arithmetic (hence their interval versions are the
    exact [0, 0]), that the leading coefficient matches the catalog, and
    that the quotient F/x^k0 has a positive interval lower bound on
    [0, delta].
    """
    spec = CATALOG[inequality_id]
    k0 = spec.vanish_order_zero
    if not 0.0 < delta <= 0.5:
        raise DomainError("near_zero_proof needs 0 < delta <= 0.5")
    if degree < k0 + 8:
        raise DomainError(f"near_zero_proof needs degree >= {k0 + 8}")
    ps = form_series(inequality_id, "zero", degree, delta)
    lead = ps.coeffs[k0]
    if lead != spec.leading_coeff_zero:
        raise OrderMismatch(
            f"{inequality_id}: leading coefficient {lead!r} != catalog "
            f"{spec.leading_coeff_zero!r}"
        )
    quotient = ps.divide_power(k0)  # raises OrderMismatch on nonzero low coeffs
    lb = quotient.eval(Interval(0.0, delta)).lo
    if lb <= 0.0:
        raise NotPositive(
            f"{inequality_id}: quotient bound {lb} on (0, {delta}]; "
            "shrink delta or raise degree"
        )
    return EndpointProof(
        kind="zero",
        bound=delta,
        order=k0,
        model_degree=degree,
        normalized_lower_bound=lb,
        leading_coefficient=lead.enclosure(),
    )


def near_half_pi_proof(inequality_id: str, epsilon_max: float, degree: int) -> EndpointProof:
    """Certify F > 0 on [pi/2 - epsilon_max, pi/2) via the eps-expansion."""
    spec = CATALOG[inequality_id]
    k1 = spec.vanish_order_half_pi
    if k1 == 0:
        raise DomainError(f"{inequality_id} has no vanishing margin at pi/2")
    if not 0.0 < epsilon_max <= 0.25:
        raise DomainError("near_half_pi_proof needs 0 < epsilon_max <= 0.25")
    if degree < k1 + 8:
        raise DomainError(f"near_half_pi_proof needs degree >= {k1 + 8}")
    ps = form_series(inequality_id, "half_pi", degree, epsilon_max)
    lead = ps.coeffs[k1]
    if lead != spec.leading_coeff_half_pi:
        raise OrderMismatch(
            f"{inequality_id}: eps-leading coefficient {lead!r} != catalog "
            f"{spec.leading_coeff_half_pi!r}"
        )
    lead_enc = lead.enclosure()
    if not certainly_positive(lead_enc):
        raise NotPositive(f"{inequality_id}: eps^{k1} coefficient not certified positive")
    quotient = ps.divide_power(k1)
    lb = quotient.eval(Interval(0.0, epsilon_max)).lo
    if lb <= 0.0:
        raise NotPositive(
            f"{inequality_id}: eps-quotient bound {lb} on (0, {epsilon_max}]"
        )
    return EndpointProof(
        kind="half_pi",
        bound=epsilon_max,
        order=k1,
        model_degree=degree,
        normalized_lower_bound=lb,
        leading_coefficient=lead_enc,
    )


# ---------------------------------------------------------------------------
# branch-and-bound engine
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoxRecord:
    interval: Interval
    margin: Interval
    depth: int


@dataclass(frozen=True)
class CertifyConfig:
    delta: float = 0.25
    epsilon_max: float = 0.125
    degree: int = 16
    max_depth: int = 48
    min_width: float = 2.0**-40
    threads: int = 1


@dataclass
class CertStats:
    box_count: int
    max_depth_reached: int
    wall_time: float
    worst_box: BoxRecord | None = None


@dataclass
class Certificate:
    inequality_id: str
    domain: Interval
    status: str  # certified | undecided | falsified
    near_zero_proof: EndpointProof | None
    near_half_pi_proof: EndpointProof | None
    boxes: list[BoxRecord]
    stats: CertStats
    config: CertifyConfig


def _classify(f, box: Interval, depth: int):
    try:
        margin = f(box)
    except CosNotPositive:
        return ("split", None)
    if certainly_positive(margin):
        return ("accept", BoxRecord(box, margin, depth))
    if certainly_negative(margin):
        return ("falsify", BoxRecord(box, margin, depth))
    return ("split", BoxRecord(box, margin, depth))


def _bisect_cover(f, lo: float, hi: float, cfg: CertifyConfig):
    """Cover [lo, hi] with certainly-positive boxes by adaptive bisection.

    Returns (accepted, failed, falsified_record, max_depth_reached).  The
    accepted/failed sets are independent of evaluation order, so threaded
    runs produce identical results.
    """
    accepted: list[BoxRecord] = []
    failed: list[BoxRecord] = []
    falsified: list[BoxRecord] = []
    max_depth_seen = 0

    def handle(result, box, depth, frontier):
        nonlocal max_depth_seen
        max_depth_seen = max(max_depth_seen, depth)
        kind, rec = result
        if kind == "accept":
            accepted.append(rec)
        elif kind == "falsify":
            falsified.append(rec)
        else:
            if depth >= cfg.max_depth or box.width <= cfg.min_width:
                failed.append(
                    rec if rec is not None else BoxRecord(box, Interval(-1.0, 1.0), depth)
                )
            else:
                a, b = split(box)
                frontier.append((a, depth + 1))
                frontier.append((b, depth + 1))

    frontier = [(Interval(lo, hi), 0)]
    if cfg.threads <= 1:
        while frontier:
            box, depth = frontier.pop()
            if falsified:
                break
            handle(_classify(f, box, depth), box, depth, frontier)
    else:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            while frontier and not falsified:
                wave = frontier
                frontier = []
                results = pool.map(
                    lambda item: _classify(f, item[0], item[1]), wave
                )
                for (box, depth), result in zip(wave, results):
                    handle(result, box, depth, frontier)
    accepted.sort(key=lambda r: (r.interval.lo, r.interval.hi))
    failed.sort(key=lambda r: (r.interval.lo, r.interval.hi))
    worst = min(failed, key=lambda r: r.margin.lo, default=None)
    return accepted, failed, (falsified[0] if falsified else None), max_depth_seen, worst


def certify(
    inequality_id: str,
    cfg: CertifyConfig = CertifyConfig(),
    *,
    use_near_zero: bool = True,
) -> Certificate:
    """Produce a Certificate for one catalog inequality.

    `use_near_zero=False` is a diagnostic switch documenting why the
    endpoint stage is mandatory: margins vanish at 0, so bisection alone
    must end undecided there (never falsified).
    """
    spec = CATALOG[inequality_id]
    t0 = time.perf_counter()
    nz = near_zero_proof(inequality_id, cfg.delta, cfg.degree) if use_near_zero else None
    nh = (
        near_half_pi_proof(inequality_id, cfg.epsilon_max, cfg.degree)
        if spec.vanish_order_half_pi > 0
        else None
    )
    lo = cfg.delta if nz else 0.0
    hi = _sub_up(_HALF_PI_HI, cfg.epsilon_max) if nh else _HALF_PI_HI
    f = _FORMS[inequality_id]
    accepted, failed, falsified, depth_seen, worst = _bisect_cover(f, lo, hi, cfg)
    wall = time.perf_counter() - t0
    if falsified is not None:
        status = "falsified"
        boxes = [falsified]
        worst = falsified
    elif failed:
        status = "undecided"
        boxes = accepted
    else:
        status = "certified"
        boxes = accepted
    return Certificate(
        inequality_id=inequality_id,
        domain=Interval(0.0, _HALF_PI_HI),
        status=status,
        near_zero_proof=nz,
        near_half_pi_proof=nh,
        boxes=boxes,
        stats=CertStats(
            box_count=len(boxes),
            max_depth_reached=depth_seen,
            wall_time=wall,
            worst_box=worst,
        ),
        config=cfg,
    )


def certify_all(cfg: CertifyConfig = CertifyConfig()) -> dict[str, Certificate]:
    return {cid: certify(cid, cfg) for cid in CATALOG}


# ---------------------------------------------------------------------------
# serialization (schema tancert-cert-v1; all floats as hex strings)
# ---------------------------------------------------------------------------

def _hex(x: float) -> str:
    return float(x).hex()


def _proof_to_dict(p: EndpointProof | None):
    if p is None:
        return None
    return {
        "kind": p.kind,
        "bound": _hex(p.bound),
        "order": p.order,
        "model_degree": p.model_degree,
        "normalized_lower_bound": _hex(p.normalized_lower_bound),
        "leading_coefficient": list(p.leading_coefficient.to_hex()),
    }


def _proof_from_dict(d) -> EndpointProof | None:
    if d is None:
        return None
    return EndpointProof(
        kind=d["kind"],
        bound=float.fromhex(d["bound"]),
        order=int(d["order"]),
        model_degree=int(d["model_degree"]),
        normalized_lower_bound=float.fromhex(d["normalized_lower_bound"]),
        leading_coefficient=Interval.from_hex(*d["leading_coefficient"]),
    )


def certificate_to_dict(cert: Certificate) -> dict:
    """JSON-ready dict.  wall_time and threads are execution details and
    deliberately absent so identical configs yield identical bytes."""
    return {
        "schema": SCHEMA,
        "inequality_id": cert.inequality_id,
        "status": cert.status,
        "domain": list(cert.domain.to_hex()),
        "config": {
            "delta": _hex(cert.config.delta),
            "epsilon_max": _hex(cert.config.epsilon_max),
            "degree": cert.config.degree,
            "max_depth": cert.config.max_depth,
            "min_width": _hex(cert.config.min_width),
        },
        "near_zero_proof": _proof_to_dict(cert.near_zero_proof),
        "near_half_pi_proof": _proof_to_dict(cert.near_half_pi_proof),
        "boxes": [
            [
                *b.interval.to_hex(),
                *b.margin.to_hex(),
                b.depth,
            ]
            for b in cert.boxes
        ],
        "stats": {
            "box_count": cert.stats.box_count,
            "max_depth_reached": cert.stats.max_depth_reached,
        },
    }


def certificate_from_dict(d: dict) -> Certificate:
    if d.get("schema") != SCHEMA:
        raise DomainError(f"unknown certificate schema {d.get('schema')!r}")
    cfg = CertifyConfig(
        delta=float.fromhex(d["config"]["delta"]),
        epsilon_max=float.fromhex(d["config"]["epsilon_max"]),
        degree=int(d["config"]["degree"]),
        max_depth=int(d["config"]["max_depth"]),
        min_width=float.fromhex(d["config"]["min_width"]),
    )
    boxes = [
        BoxRecord(
            Interval.from_hex(row[0], row[1]),
            Interval.from_hex(row[2], row[3]),
            int(row[4]),
        )
        for row in d["boxes"]
    ]
    return Certificate(
        inequality_id=d["inequality_id"],
        domain=Interval.from_hex(*d["domain"]),
        status=d["status"],
        near_zero_proof=_proof_from_dict(d["near_zero_proof"]),
        near_half_pi_proof=_proof_from_dict(d["near_half_pi_proof"]),
        boxes=boxes,
        stats=CertStats(
            box_count=int(d["stats"]["box_count"]),
            max_depth_reached=int(d["stats"]["max_depth_reached"]),
            wall_time=0.0,
        ),
        config=cfg,
    )


def certificate_to_json(cert: Certificate) -> str:
    return json.dumps(certificate_to_dict(cert), indent=2, sort_keys=True) + "\n"


def save_certificate(cert: Certificate, path) -> None:
    with open(path, "w") as fh:
        fh.write(certificate_to_json(cert))


def load_certificate(path) -> Certificate:
    with open(path) as fh:
        return certificate_from_dict(json.load(fh))


# ---------------------------------------------------------------------------
# independent re-verification
# ---------------------------------------------------------------------------

@dataclass
class CheckResult:
    ok: bool
    diagnoses: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def check_certificate(cert: Certificate) -> CheckResult:
    """Re-verify a certificate from scratch: margins, proofs, coverage."""
    diagnoses: list[str] = []
    spec = CATALOG.get(cert.inequality_id)
    if spec is None:
        return CheckResult(False, [f"unknown inequality id {cert.inequality_id!r}"])
    if cert.status != "certified":
        # nothing to re-establish; the record makes no positivity claim
        return CheckResult(True, [f"status is {cert.status}; no claim to check"])

    start = 0.0
    if cert.near_zero_proof is not None:
        p = cert.near_zero_proof
        try:
            fresh = near_zero_proof(cert.inequality_id, p.bound, p.model_degree)
            if fresh.order != p.order:
                diagnoses.append("near-zero proof order mismatch")
            if fresh.normalized_lower_bound != p.normalized_lower_bound:
                diagnoses.append("near-zero proof bound mismatch")
            start = p.bound
        except (NotPositive, OrderMismatch, DomainError) as exc:
            diagnoses.append(f"near-zero proof failed: {exc}")
    end = _HALF_PI_HI
    if cert.near_half_pi_proof is not None:
        p = cert.near_half_pi_proof
        try:
            fresh = near_half_pi_proof(cert.inequality_id, p.bound, p.model_degree)
            if fresh.order != p.order:
                diagnoses.append("near-pi/2 proof order mismatch")
            if fresh.normalized_lower_bound != p.normalized_lower_bound:
                diagnoses.append("near-pi/2 proof bound mismatch")
            end = _sub_up(_HALF_PI_HI, p.bound)
        except (NotPositive, OrderMismatch, DomainError) as exc:
            diagnoses.append(f"near-pi/2 proof failed: {exc}")
    elif spec.vanish_order_half_pi > 0:
        diagnoses.append("missing near-pi/2 proof for a form vanishing at pi/2")
    if cert.near_zero_proof is None:
        diagnoses.append("missing near-zero proof")

    if not cert.boxes:
        diagnoses.append("no covering boxes")
    else:
        if cert.boxes[0].interval.lo > start:
            diagnoses.append("gap at lower end of box cover")
        if cert.boxes[-1].interval.hi < end:
            diagnoses.append("gap at upper end of box cover")
        prev_hi = None
        for i, box in enumerate(cert.boxes):
            if prev_hi is not None and box.interval.lo != prev_hi:
                diagnoses.append(f"gap before box {i}")
            prev_hi = box.interval.hi
            if not certainly_positive(box.margin):
                diagnoses.append(f"box {i}: margin not positive")
                continue
            recomputed = eval_form(cert.inequality_id, box.interval)
            if not certainly_positive(recomputed):
                diagnoses.append(f"box {i}: margin not verifiable")
            elif recomputed != box.margin:
                diagnoses.append(f"box {i}: margin mismatch on re-evaluation")
    return CheckResult(not diagnoses, diagnoses)
