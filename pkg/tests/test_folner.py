"""Folner recipes: realization, exact invariance defects, inversion asymmetry."""

import random

import pytest

from charlab.errors import EmptyAfterDrop, ZeroInSupport
from charlab.fields import GF, Q, RatFunc, enumerate_finite, tower_map
from charlab.folner import (
    AdditiveBox,
    DilatedBoxAverage,
    SubfieldTower,
    WeightedSet,
    dilation_defect_bound,
    folner_defect,
    inverse_pushforward,
    parse_recipe,
    realize,
)
from fractions import Fraction


QQ = Q()


def test_realize_tower_uniform():
    tower = SubfieldTower(2, (1, 2, 4))
    w = realize(tower, 2)
    assert w.support_size() == 4
    assert all(weight == Fraction(1, 4) for weight in w.entries.values())
    assert sum(w.entries.values()) == 1


def test_realize_additive_box():
    w = realize(AdditiveBox(QQ, 2, 4), 1)
    support = sorted(x.payload for x in w.entries)
    assert support == [Fraction(j, 2) for j in range(-4, 5) if j]
    assert all(weight == Fraction(1, 8) for weight in w.entries.values())


def test_realize_dilbox_merges_duplicates():
    # u in {1/2, 1, 2} dilating {+-1/2, +-1}: 12 raw points merge to 8
    w = realize(DilatedBoxAverage(QQ, 2, 1, 2, 2), 1)
    assert w.support_size() == 8
    assert sum(w.entries.values()) == 1
    # the merged points +-1/2, +-1 carry doubled weight
    by_val = {x.payload: wt for x, wt in w.entries.items()}
    assert by_val[Fraction(1, 2)] == Fraction(2, 12)
    assert by_val[Fraction(1, 4)] == Fraction(1, 12)


def test_mass_is_exactly_one_after_merge():
    rng = random.Random(41)
    for _ in range(5):
        R = rng.randint(2, 20)
        w = realize(DilatedBoxAverage(QQ, 3, 1, 6, R), 1)
        assert sum(w.entries.values()) == 1


def test_uniform_interval_shift_defect():
    # uniform on {1..N}, shift by 1: symmetric difference is 2 points of N
    N = 10
    w = WeightedSet.uniform(QQ, [QQ.from_int(i) for i in range(1, N + 1)])
    assert folner_defect(w, QQ.one(), "additive") == Fraction(2, N)


def test_tower_defects_vanish():
    tower = SubfieldTower(2, (1, 2, 4))
    w = realize(tower, 3)  # all of F_16
    F4 = GF(2, 2)
    emb = tower_map(F4, GF(2, 4))
    a = emb(F4.generator())
    assert folner_defect(w, a, "additive") == 0
    assert folner_defect(w, a, "multiplicative", drop_zero=True) == 0
    assert folner_defect(w, a, "inversion", drop_zero=True) == 0


def test_zero_in_support_guard():
    tower = SubfieldTower(2, (1, 2))
    w = realize(tower, 2)
    with pytest.raises(ZeroInSupport):
        folner_defect(w, GF(2, 2).one(), "multiplicative")
    with pytest.raises(ZeroInSupport):
        inverse_pushforward(w)
    with pytest.raises(EmptyAfterDrop):
        WeightedSet.uniform(QQ, [QQ.zero()]).drop_zero()


def test_dilbox_multiplicative_defect_bound():
    recipe = DilatedBoxAverage(QQ, 2, 2, 4, 64)
    w = realize(recipe, 1)
    a = QQ.from_int(2)
    defect = folner_defect(w, a, "multiplicative")
    assert defect <= dilation_defect_bound(recipe, a) == Fraction(2, 5)
    # the value stated in the recipe contract: <= 2*(2*1)/(2E+1)
    assert defect <= Fraction(4, 5)
    assert defect > 0
    # dilation by -1 is exact invariance (symmetric boxes)
    assert folner_defect(w, QQ.from_int(-1), "multiplicative") == 0


def test_dilbox_defect_halves_when_E_doubles():
    a = QQ.from_int(2)
    d2 = folner_defect(realize(DilatedBoxAverage(QQ, 2, 2, 4, 64), 1), a, "multiplicative")
    d4 = folner_defect(realize(DilatedBoxAverage(QQ, 2, 4, 16, 64), 1), a, "multiplicative")
    ratio = d4 / d2
    assert Fraction(2, 5) <= ratio <= Fraction(3, 5)


def test_additive_defect_decreases_as_R_doubles():
    beta = QQ.element(Fraction(1, 4))
    defects = []
    for R in (32, 64, 128):
        w = realize(DilatedBoxAverage(QQ, 2, 2, 4, R), 1)
        defects.append(folner_defect(w, beta, "additive"))
    assert defects[0] > defects[1] > defects[2]


def test_inverse_pushforward_examples():
    # uniform on F_q^* is inversion-invariant
    F9 = GF(3, 2)
    star = WeightedSet.uniform(F9, [x for x in enumerate_finite(F9) if not x.is_zero()])
    assert folner_defect(star, F9.one(), "inversion") == 0
    # uniform on {1, 2} -> uniform on {1, 1/2}
    w = WeightedSet.uniform(QQ, [QQ.from_int(1), QQ.from_int(2)])
    inv = inverse_pushforward(w)
    assert {x.payload for x in inv.entries} == {Fraction(1), Fraction(1, 2)}


def test_inversion_asymmetry_regression():
    # the inverse image of a growing box keeps additive defect >= 0.5:
    # a finite witness of the multiplicative asymmetry of Q
    one = QQ.one()
    for R in (50, 100, 200):
        w = realize(AdditiveBox(QQ, 1, R), 1)
        inv = inverse_pushforward(w)
        assert folner_defect(inv, one, "additive") >= Fraction(1, 2)


def test_ratfunc_box():
    R3 = RatFunc(3)
    box = AdditiveBox(R3, (1,), 2)
    w = realize(box, 1)
    assert w.support_size() == 8  # nonzero polynomials of degree < 2 over F_3
    t_shift = R3.element(((0, 1), (1,)))
    d = folner_defect(w, t_shift, "additive")
    w2 = realize(box, 2)
    d2 = folner_defect(w2, t_shift, "additive")
    assert d2 < d  # defect shrinks as the box grows


def test_recipe_literals():
    r = parse_recipe(QQ, "tower:p=2:sched=1,2,4,8")
    assert isinstance(r, SubfieldTower) and r.sched == (1, 2, 4, 8)
    r = parse_recipe(QQ, "addbox:d=720:R=100")
    assert isinstance(r, AdditiveBox) and r.d == 720 and r.R == 100
    r = parse_recipe(QQ, "dilbox:P=3:E=2:d=36:R=100")
    assert isinstance(r, DilatedBoxAverage) and r.d == 36
    with pytest.raises(Exception):
        parse_recipe(QQ, "dilbox:P=3:E=2:d=35:R=100")  # d must match the product


def test_dilbox_inverse_pushforward_defect_is_large():
    # pushing a dilated-box average through inversion destroys additive
    # near-invariance: the defect for a = 1 stays macroscopic
    w = realize(DilatedBoxAverage(QQ, 2, 2, 4, 32), 1)
    inv = inverse_pushforward(w)
    assert folner_defect(inv, QQ.one(), "additive") > Fraction(1, 2)


def test_realize_cap():
    import pytest as _pytest
    from charlab.errors import CapExceeded

    with _pytest.raises(CapExceeded):
        realize(AdditiveBox(QQ, 1, 10**9), 1, cap=1000)
    with _pytest.raises(CapExceeded):
        realize(SubfieldTower(2, (1, 16)), 2, cap=1000)
