"""Triple sets in PGL2: exact counts, translation equivariance, the
inversion-section count, and Folner-type ratios for towers versus boxes.

Run:  python demos/09_pgl2.py
"""

from fractions import Fraction

from charlab.fields import GF, Q, enumerate_finite, tower_map
from charlab.pgl2 import inversion_section_check, pgl2_folner_ratio, q_set, symmetrized, translate_identity_check

QQ = Q()
A = [QQ.from_int(k) for k in (0, 1, 2, 5)]
print("Q(A) for |A| = 4 has exactly 4*3*2 elements:", len(q_set(A)))
print("translation equivariance u_plus(1) Q(A) = Q(A+1):",
      translate_identity_check(A, QQ.one()))

S = symmetrized([QQ.from_int(k) for k in (1, 2, 3)])
res = inversion_section_check(S, QQ.from_int(2))
print(f"inversion-section count on A = {sorted(str(x.payload) for x in S)}: "
      f"lhs = {res['lhs']} rhs = {res['rhs']} equal = {res['equal']}")

print("\ntower ratio: the full subfield GF(16) is exactly invariant")
F16 = GF(2, 4)
b = tower_map(GF(2, 2), F16)(GF(2, 2).generator())
ratio = pgl2_folner_ratio(enumerate_finite(F16), b, "plus")
print("  |Q(A) ∩ u_plus(b) Q(A)| / |Q(A)| =", ratio["ratio"])

print("\nrational boxes never get close for the lower generator:")
for R in (30, 60, 120):
    F = [QQ.element(Fraction(k, 6)) for k in range(-R, R + 1) if k]
    A = symmetrized(F)
    r = pgl2_folner_ratio(A, QQ.one(), "minus")
    print(f"  R = {R:4d}: ratio = {float(r['ratio']):.4f}")
print("the gap from 1 mirrors the inversion asymmetry of Q itself.")
