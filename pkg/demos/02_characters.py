"""Characters and exact roots of unity: trace characters, residue characters
on GF(p)(t), discrete-log twists, and dual-group orthogonality.

Run:  python demos/02_characters.py
"""

from charlab.characters import DlogPower, FiniteDual, FiniteTrace, ResidueAtInfinity, ValuationParity
from charlab.cyclotomic import UnitValue
from charlab.fields import GF, Q, RatFunc, t_element

F9 = GF(3, 2)
xi = FiniteTrace(F9.generator())
x, y = F9.from_int(2), F9.generator() ** 3
print("additive character values are exact cube roots of unity:")
print("  xi(x) =", xi(x), " xi(y) =", xi(y))
print("  xi(x+y) == xi(x)*xi(y):", xi(x + y) == xi(x) * xi(y))

print("\northogonality over the full dual of", F9)
for probe in (F9.zero(), F9.generator()):
    acc = UnitValue.zero(3)
    for ch in FiniteDual(F9):
        acc = acc + ch(probe)
    label = "q = 9 exactly" if acc == UnitValue.rational(9) else ("0 exactly" if acc.is_zero() else acc)
    print(f"  sum over all characters at {probe.payload}: {label}")

R3 = RatFunc(3)
t = t_element(R3)
res = ResidueAtInfinity(R3.one(), depth=32)
print("\nresidue character on GF(3)(t): reads the t^(-1) coefficient at infinity")
print("  xi(1/t) =", res(t.inverse()))
print("  xi(t^2) =", res(t * t), "(polynomials have no residue)")

F7 = GF(7)
eta = DlogPower(F7, 1)
g7 = F7.generator()
print("\nmultiplicative character on GF(7)^* via discrete logs (g =", g7.payload, ")")
print("  eta(g^3) =", eta(g7**3), "= -1:", eta(g7**3) == UnitValue.rational(-1))

vp = ValuationParity(Q(), [2])
QQ = Q()
print("\nvaluation parity at 2 on Q^*: eta(12) =", vp(QQ.from_int(12)),
      " eta(1/2) =", vp(QQ.from_int(2).inverse()))
