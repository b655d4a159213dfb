"""Why the exponents 1 and 6/5 are the best possible, numerically.

The ratio ExponentRatio(x) = log(3(tan x - x)/x^3) / log(tan x / x)
runs from 6/5 (at 0) down toward 1 (at pi/2), strictly inside the open
interval: no exponent pair can do better.  The crossover points locate
where these bounds beat the quartic-correction bounds.  Run:

    python demos/05_sharpness_and_crossovers.py
"""

from tancert import (
    crossover_lower,
    crossover_upper,
    exponent_ratio,
    optimality_scan,
    replay_identity,
)
from tancert.analysis import REPLAY_IDENTITIES

print("exponent ratio along the interval (arbitrary precision, non-certified):")
for x in (0.01, 0.1, 0.5, 1.0, 1.3, 1.5, 1.57):
    print(f"  phi({x:5.2f}) = {exponent_ratio(x).phi:.9f}")

report = optimality_scan([0.01 + i * 1.55 / 99 for i in range(100)])
print(
    f"\n100-point scan: inf = {report.inf_phi:.6f}, sup = {report.sup_phi:.6f}, "
    f"strictly inside (1, 6/5): {report.all_inside_open_interval}"
)

print("\ncrossovers against the quartic-correction bounds (sign-certified):")
up = crossover_upper(1e-4)
lo = crossover_lower(1e-4)
print(f"  upper bounds swap sharpness at x0 in {up.bracket}")
print(f"  lower bounds swap sharpness at x1 in {lo.bracket}")

print("\nreplaying the proof identities at 80-digit precision:")
for ident in REPLAY_IDENTITIES:
    r = replay_identity(ident, samples=25)
    print(f"  {ident:20s} worst residual {r.worst_residual:.2e}")
