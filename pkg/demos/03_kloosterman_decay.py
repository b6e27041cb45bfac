"""Kloosterman sums: exact values, the square-root bound, and the decay of
subfield-tower averages up to GF(2^16).

Run:  python demos/03_kloosterman_decay.py
"""

import math

from charlab.characters import FiniteTrace
from charlab.fields import GF, enumerate_finite
from charlab.folner import SubfieldTower
from charlab.sums import folner_kloosterman_series, kloosterman_classical

print("K_3(1,1) summed over GF(3)^*:", kloosterman_classical(3, 1, 1, 1).exact,
      "=", kloosterman_classical(3, 1, 1, 1).value.real)

print("\nsquare-root cancellation across all character pairs of GF(25):")
desc = GF(5, 2)
worst = max(
    kloosterman_classical(5, 2, b1, b2).weil_ratio
    for b1 in enumerate_finite(desc)[1:]
    for b2 in enumerate_finite(desc)[1:]
)
print(f"  max |K| / (2 sqrt q) = {worst:.6f}  (< 1)")

print("\ntower averages (1/(q-1)) sum xi1(a) xi2(1/a) over GF(2^n), n = 1,2,4,8,16:")
tower = SubfieldTower(2, (1, 2, 4, 8, 16))
g = tower.field().generator()
series = folner_kloosterman_series(tower, FiniteTrace(g), FiniteTrace(g**11), 5)
for t in series.terms:
    q = t.meta["q"]
    plain = t.magnitude * (q - 1) / q
    print(f"  q = {q:6d}   |average| = {plain:.6f}   bound 2/sqrt(q) = {2/math.sqrt(q):.6f}")
print("every exact term is an integer combination of +-1 divided by q-1;")
print("the decay is the finite shadow of equidistribution over the tower.")
