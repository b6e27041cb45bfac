"""Tour of the exact field arithmetic: Q, finite-field towers, GF(p)(t).

Run:  python demos/01_exact_fields.py
"""

from charlab.fields import GF, Q, RatFunc, enumerate_finite, pth_root, t_element, tower_map, trace

QQ = Q()
print("rationals stay exact:", (QQ.from_int(2).inverse() + QQ.element("1/3")).payload)

F8 = GF(2, 3)
g = F8.generator()
print(f"\n{F8} with pinned modulus {F8.modulus} (coefficients low-to-high)")
print("powers of the generator:", [(g**k).payload for k in range(1, 8)])
print("inverse of g^3 is g^4:", (g**3).inverse() == g**4)

F4, F16 = GF(2, 2), GF(2, 4)
embed = tower_map(F4, F16)
a = F4.generator()
print(f"\nembedding {F4} into {F16} along compatible generators:")
print("  phi(g)           =", embed(a).payload)
print("  phi respects *:  ", embed(a * a) == embed(a) * embed(a))
print("  phi respects +:  ", embed(a + F4.one()) == embed(a) + F16.one())

print("\ntraces down to the prime field:")
for x in enumerate_finite(F4):
    print(f"  Tr({x.payload}) = {trace(x).payload}")

R3 = RatFunc(3)
t = t_element(R3)
f = (t**2 + R3.one()) / (t + R3.from_int(2))
print(f"\nGF(3)(t): (t^2+1)/(t+2) is stored reduced as {f.payload}")
cube = f**3
print("cube roots undo Frobenius:", pth_root(cube) == f)
