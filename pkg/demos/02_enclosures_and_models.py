"""The entire building blocks: cos, sinc, the sine defect ratio, and tan.

The certifier never divides inside a certificate: everything is built
from functions that stay entire on [0, pi/2], enclosed by truncated
series plus certified remainders.  tan itself is only ever the quotient
sinc(x) * x / cos(x), used by the exploratory analysis.  Run:

    python demos/02_enclosures_and_models.py
"""

import math

from tancert import (
    Interval,
    cos_enc,
    half_pi_enclosure,
    p_enc,
    r_enc,
    s_enc,
    sinc_enc,
    tan_enc,
    tm_build,
    tm_eval,
    tm_mul,
)

x = Interval.point(1.0)
print("at x = 1:")
print(f"  cos   in {cos_enc(x)}")
print(f"  sinc  in {sinc_enc(x)}")
print(f"  p     in {p_enc(x)}        # p = (sin x - x cos x)/x^3")
print(f"  tan   in {tan_enc(x)}")

print("\nremovable singularities are genuinely removable:")
zero = Interval.point(0.0)
print(f"  sinc(0) in {sinc_enc(zero)}   (== 1)")
print(f"  p(0)    in {p_enc(zero)}   (== 1/3)")
print(f"  r(0)    in {r_enc(zero)}   # (tan x - x)/x^3 -> 1/3")
print(f"  s(0)    in {s_enc(zero)}   # tan x / x -> 1")

hp = half_pi_enclosure()
print(f"\nand the endpoint is no trouble either: p(pi/2) in {p_enc(hp)}")
print(f"  (the exact value is (2/pi)^3 = {(2 / math.pi) ** 3:.12f})")

print("\nTaylor models carry interval coefficients plus a remainder:")
m = tm_build("cos", 0, 4, 0.25)
print(f"  cos about 0, degree 4, radius 0.25: remainder {m.remainder}")
sq = tm_mul(m, m)
v = tm_eval(sq, Interval.point(0.1))
print(f"  (cos model)^2 at 0.1 encloses cos^2(0.1): {v}")
print(f"  true value {math.cos(0.1) ** 2:.12f}")
