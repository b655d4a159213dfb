"""The exact integer backbone of the certificate for phi > 0.

phi(x) = (9 - 24 x^2) cos x - 9 cos 3x - 4x sin 3x expands into an
alternating series 3 * sum (-1)^n T_n x^(2n)/(2n)! whose positivity on
(0, pi/2] reduces to integer facts about T_n.  Everything here is exact
big-integer arithmetic until the final interval evaluation.  Run:

    python demos/03_lemma_walkthrough.py
"""

from tancert import (
    Interval,
    certify_phi_positive,
    half_pi_enclosure,
    phi_lemma_enc,
    phi_trig_enc,
    t_seq,
    u_seq,
    verify_shift_identities,
)

print("the coefficient sequence starts flat and then explodes:")
for n in range(8):
    print(f"  T_{n} = {int(t_seq(n))}")

print("\nterm decrease on (0, sqrt 3] is equivalent to U_n > 0:")
for n in (4, 5, 10, 50):
    rec, closed = u_seq(n)
    assert rec == closed
    print(f"  U_{n} = {rec}  (recombination and closed form agree exactly)")

report = verify_shift_identities(200)
print("\nshifted closed forms, expanded coefficient-by-coefficient:")
print(f"  B(n+1) -> {report.b_shift_coeffs}")
print(f"  A(n+4) -> {report.a_shift_coeffs}")
print(f"  positivity for every n >= 4 follows: {report.shifted_coeffs_imply_positivity}")

print("\ninterval evaluation of phi, series vs direct trig form:")
for xv in (0.5, 1.0, 1.5):
    x = Interval.point(xv)
    print(f"  x={xv}: series {phi_lemma_enc(x)}")
    print(f"          direct {phi_trig_enc(x)}")

hp = half_pi_enclosure()
print(f"\nat pi/2 the series pins down phi = 2*pi: {phi_lemma_enc(hp)}")

cert = certify_phi_positive()
print(
    f"\ncertify_phi_positive -> {cert.status} "
    f"({cert.stats.box_count} boxes, near-zero order {cert.near_zero_proof.order})"
)
