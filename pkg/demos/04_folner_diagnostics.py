"""Weighted Folner sets and their exactly-measured invariance defects,
including the inversion asymmetry that separates Q from unions of finite
fields.

Run:  python demos/04_folner_diagnostics.py
"""

from fractions import Fraction

from charlab.fields import GF, Q, tower_map
from charlab.folner import (
    AdditiveBox,
    DilatedBoxAverage,
    SubfieldTower,
    dilation_defect_bound,
    folner_defect,
    inverse_pushforward,
    realize,
)

QQ = Q()

print("subfield towers are the perfect case: all defects vanish exactly")
w16 = realize(SubfieldTower(2, (1, 2, 4)), 3)
a = tower_map(GF(2, 2), GF(2, 4))(GF(2, 2).generator())
for mode in ("additive", "multiplicative", "inversion"):
    d = folner_defect(w16, a, mode, drop_zero=(mode != "additive"))
    print(f"  {mode:15s} defect = {d}")

print("\ndilated-box averages over Q trade exactness for existence:")
recipe = DilatedBoxAverage(QQ, 2, 2, 4, 64)
mu = realize(recipe, 1)
two = QQ.from_int(2)
print(f"  support {mu.support_size()}, dilation-by-2 defect = "
      f"{folner_defect(mu, two, 'multiplicative')} <= bound {dilation_defect_bound(recipe, two)}")
shift = QQ.element(Fraction(1, 4))
for k in (1, 2):
    muk = realize(recipe, k)
    print(f"  index {k}: additive defect for shift 1/4 = {float(folner_defect(muk, shift, 'additive')):.5f}")

print("\ninversion flips boxes into clusters at 0 - the asymmetry is drastic:")
for R in (50, 100, 200):
    box = realize(AdditiveBox(QQ, 1, R), 1)
    inv = inverse_pushforward(box)
    d = folner_defect(inv, QQ.one(), "additive")
    print(f"  R = {R:4d}: additive defect of the inverted box = {float(d):.4f}  (never below 1/2)")
print("no Folner sequence of Q can stay Folner after inversion;")
print("over unions of finite fields the towers above do both at once.")
