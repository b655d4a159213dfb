"""tancert: machine-checkable certificates for sharp tangent inequalities.

The package proves, in outward-rounded interval arithmetic, strict
inequalities for tan on (0, pi/2) — among them

    x + x^2 tan(x)/3  <  tan x  <  x + x^(9/5) tan(x)^(6/5) / 3

with the exponent pair (1, 6/5) being optimal — alongside the classical
Becker-Stark and cubic-correction bounds, and reproduces the sharpness
numerics (crossover points, exponent-ratio limits).
"""

from .interval import (
    Interval,
    arith,
    certainly_negative,
    certainly_positive,
    half_pi_enclosure,
    int_pow,
    pi_enclosure,
    rational_enclosure,
    split,
)
from .enclosures import SeriesTerm, cos_enc, p_enc, p_series_term, r_enc, s_enc, sinc_enc, tan_enc
from .taylor import TaylorModel, tm_add, tm_build, tm_eval, tm_int_pow, tm_mul, tm_scale
from .sequences import (
    SeqTerm,
    ShiftIdentityReport,
    a_seq,
    b_seq,
    certify_phi_positive,
    phi_lemma_enc,
    phi_trig_enc,
    seq_term,
    t_seq,
    u_seq,
    verify_shift_identities,
)
from .certifier import (
    CATALOG,
    InequalitySpec,
    BoxRecord,
    Certificate,
    CertifyConfig,
    CheckResult,
    EndpointProof,
    certify,
    certify_all,
    check_certificate,
    eval_form,
    load_certificate,
    near_half_pi_proof,
    near_zero_proof,
    save_certificate,
)
from .analysis import (
    CrossoverResult,
    RatioSample,
    ReplayReport,
    ScanReport,
    crossover_lower,
    crossover_upper,
    exponent_ratio,
    optimality_scan,
    replay_identity,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "Interval",
    "arith",
    "int_pow",
    "pi_enclosure",
    "half_pi_enclosure",
    "rational_enclosure",
    "certainly_positive",
    "certainly_negative",
    "split",
    "cos_enc",
    "sinc_enc",
    "SeriesTerm",
    "p_series_term",
    "p_enc",
    "tan_enc",
    "r_enc",
    "s_enc",
    "TaylorModel",
    "tm_build",
    "tm_add",
    "tm_mul",
    "tm_scale",
    "tm_int_pow",
    "tm_eval",
    "t_seq",
    "u_seq",
    "a_seq",
    "b_seq",
    "SeqTerm",
    "seq_term",
    "verify_shift_identities",
    "ShiftIdentityReport",
    "phi_lemma_enc",
    "phi_trig_enc",
    "certify_phi_positive",
    "CATALOG",
    "InequalitySpec",
    "CertifyConfig",
    "Certificate",
    "BoxRecord",
    "EndpointProof",
    "CheckResult",
    "eval_form",
    "near_zero_proof",
    "near_half_pi_proof",
    "certify",
    "certify_all",
    "check_certificate",
    "save_certificate",
    "load_certificate",
    "exponent_ratio",
    "optimality_scan",
    "crossover_upper",
    "crossover_lower",
    "replay_identity",
    "RatioSample",
    "ScanReport",
    "CrossoverResult",
    "ReplayReport",
    "errors",
]
