"""Exact identity verifiers: the binomial power identity with its rank-based
independence check, the triple-correlation average, and the positive-spectrum
correlation inequality.

Run:  python demos/06_identities.py
"""

import random
from fractions import Fraction

from charlab.cyclotomic import UnitValue
from charlab.fields import GF
from charlab.identities import (
    SpectrumFunction,
    build_power_identity,
    check_linear_independence,
    poscorr_check,
    triple_mixing_check,
)

pid = build_power_identity(2, 0)
print("power identity for n = 2 over Q:")
print("  coefficients:", [str(c) for c in pid.coeffs])
print("  polynomials :", pid.polys, "(as coefficient tuples)")
print("  sum c_j p_j^2 = 0 verified symbolically on construction")
for m in (-2, -1, 3, 4):
    res = check_linear_independence(pid, m)
    print(f"  p_j^{m:+d} linearly independent: {res['independent']}")
res = check_linear_independence(pid, 2)
print("  at m = n the defining relation reappears as the kernel:", [str(b) for b in res["witness"]])

print("\ntriple-correlation average over GF(27), exact cyclotomic route:")
val = triple_mixing_check(27, 5)
print("  (1/q) sum_beta xi(1) xi(a-1) xi(-a) =", "1 exactly" if val == UnitValue.one() else val)

print("\npositive-spectrum correlation inequality over GF(7):")
desc = GF(7)
rng = random.Random(2)
spectra = [
    SpectrumFunction(desc, {b: Fraction(rng.randint(0, 5)) for b in range(7)}) for _ in range(3)
]
out = poscorr_check(desc, spectra, [1, 2, 4])  # 1 + 2 + 4 = 0 in GF(7)
print(f"  lhs = {out['lhs']}  >=  rhs = {out['rhs']}: {out['holds']} (exact rationals)")
