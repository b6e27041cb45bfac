"""Brute-force pattern oracles: reciprocal triples on hyperbolas, 4-point
difference sets, spacetime intervals with the characteristic-2 obstruction,
and Laurent-polynomial difference hits.

Run:  python demos/07_pattern_searches.py
"""

from charlab.fields import GF, enumerate_finite
from charlab.patterns import (
    hyperbola_diffset_search,
    hyperbola_triple_search,
    laurent_fs_search,
    spacetime_counterexample_set,
    spacetime_search,
)

print("reciprocal-triple systems 1/(x+y) = 1/x + 1/y (and friends):")
for q in (5, 7, 9, 4, 8, 16):
    rep = hyperbola_triple_search(q)
    tag = "none" if not rep.hits else f"{len(rep.hits)} solutions (cube-root dilates)"
    print(f"  GF({q:2d}): {tag}")
print("solutions exist exactly in characteristic 2 with a cube root of unity.")

print("\n4-point difference sets inside a hyperbola (odd characteristic):")
for q in (3, 5, 7):
    empty = all(not hyperbola_diffset_search(q, t, 4).hits for t in range(1, q))
    print(f"  GF({q}): exhaustive search over all t finds none: {empty}")

print("\nspacetime intervals (d1^2 - d2^2 = z) and the char-2 obstruction:")
F8 = GF(2, 3)
g = F8.generator()
E = spacetime_counterexample_set(F8, [g, g * g])
rep1 = spacetime_search(F8, F8.one(), E, method="direct")
rep0 = spacetime_search(F8, F8.zero(), E, method="direct")
print(f"  |E| = {len(E)} in GF(8)^2 built from a sum-avoiding slice")
print(f"  witnesses for z = 1: {len(rep1.hits)} (the interval 1 is unreachable)")
print(f"  witnesses for z = 0: {len(rep0.hits)}")

print("\nLaurent difference hits p(a) = a + 1/a landing in E - E over GF(13):")
F13 = GF(13)
T = enumerate_finite(F13)
E = [F13.from_int(k) for k in (0, 1, 5, 8, 11)]
rep = laurent_fs_search(T, E, {1: F13.one(), -1: F13.one()})
if rep.hits:
    a, value = rep.hits[0]
    print(f"  first witness: a = {a.payload}, p(a) = {value.payload} in E - E")
else:
    print("  no witness in this truncation")
