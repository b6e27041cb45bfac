"""Additive/multiplicative characters: homomorphism laws and exact values."""

import random

import pytest

from charlab.characters import (
    Archimedean,
    DlogPower,
    FiniteDual,
    FiniteTrace,
    ResidueAtInfinity,
    Sign,
    Trivial,
    ValuationParity,
    eval_additive,
    eval_multiplicative,
    parse_additive,
    parse_multiplicative,
)
from charlab.cyclotomic import UnitValue
from charlab.errors import DepthInsufficient, ZeroArgument
from charlab.fields import GF, Q, RatFunc, enumerate_finite, t_element
from fractions import Fraction


def rand_fq(desc, rng):
    return desc.from_int(rng.randrange(desc.order))


def rand_rf(desc, rng):
    num = tuple(rng.randrange(desc.p) for _ in range(rng.randint(1, 4)))
    den = tuple(rng.randrange(desc.p) for _ in range(rng.randint(0, 2))) + (1,)
    return desc.element((num, den))


def test_trivial_trace_character():
    F9 = GF(3, 2)
    xi = FiniteTrace(F9.zero())
    assert xi.is_trivial
    assert all(xi(x).is_one() for x in enumerate_finite(F9))


def test_trace_character_on_prime_field():
    F3 = GF(3)
    xi = FiniteTrace(F3.one())
    assert eval_additive(xi, F3.one()) == UnitValue.root(3, 1)
    assert xi(F3.zero()).is_one()


def test_residue_character_on_inverse_t():
    R3 = RatFunc(3)
    xi = ResidueAtInfinity(R3.one(), depth=16)
    t = t_element(R3)
    assert xi(t.inverse()) == UnitValue.root(3, 1)
    assert xi(R3.one()).is_one()
    assert xi(t).is_one()  # polynomials have no t^(-1) coefficient


def test_residue_depth_guard():
    R3 = RatFunc(3)
    xi = ResidueAtInfinity(R3.one(), depth=3)
    t = t_element(R3)
    with pytest.raises(DepthInsufficient):
        xi((t**4 + R3.one()).inverse())


@pytest.mark.parametrize(
    "make_char,make_elem",
    [
        (lambda: FiniteTrace(GF(3, 2).generator()), lambda rng: rand_fq(GF(3, 2), rng)),
        (lambda: FiniteTrace(GF(2, 4).from_int(7)), lambda rng: rand_fq(GF(2, 4), rng)),
        (lambda: ResidueAtInfinity(t_element(RatFunc(5)), depth=64), lambda rng: rand_rf(RatFunc(5), rng)),
    ],
)
def test_additive_homomorphism_exact(make_char, make_elem):
    xi, rng = make_char(), random.Random(23)
    for _ in range(60):
        a, b = make_elem(rng), make_elem(rng)
        assert xi(a + b) == xi(a) * xi(b)


def test_archimedean_homomorphism_numeric():
    xi = Archimedean(Fraction(3, 7))
    rng = random.Random(29)
    QQ = Q()
    for _ in range(50):
        a = QQ.element(Fraction(rng.randint(-40, 40), rng.randint(1, 20)))
        b = QQ.element(Fraction(rng.randint(-40, 40), rng.randint(1, 20)))
        assert abs(xi(a + b).embed() - xi(a).embed() * xi(b).embed()) < 1e-10
    assert not xi.exact


def test_multiplicative_homomorphism():
    rng = random.Random(31)
    F49 = GF(7, 2)
    eta = DlogPower(F49, 3)
    for _ in range(60):
        a, b = rand_fq(F49, rng), rand_fq(F49, rng)
        if a.is_zero() or b.is_zero():
            continue
        assert eta(a * b) == eta(a) * eta(b)
    vp = ValuationParity(Q(), [2, 5])
    QQ = Q()
    for _ in range(60):
        a = QQ.element(Fraction(rng.randint(1, 400), rng.randint(1, 400)))
        b = QQ.element(Fraction(rng.randint(1, 400), rng.randint(1, 400)))
        assert vp(a * b) == vp(a) * vp(b)


def test_dlog_character_example():
    # eta(g^3) = zeta_6^3 = -1 in F_7 with g = 3
    F7 = GF(7)
    eta = DlogPower(F7, 1, gen=F7.from_int(3))
    g = F7.from_int(3)
    assert eta(g**3) == UnitValue.root(6, 3)
    assert eta(g**3) == UnitValue.rational(-1)


def test_valuation_parity_values():
    QQ = Q()
    vp = ValuationParity(QQ, [2])
    assert vp(QQ.from_int(12)).is_one()  # 12 = 2^2 * 3
    assert vp(QQ.from_int(2)) == UnitValue.rational(-1)
    assert vp(QQ.element(Fraction(1, 2))) == UnitValue.rational(-1)
    with pytest.raises(ZeroArgument):
        vp(QQ.zero())
    R3 = RatFunc(3)
    t = t_element(R3)
    vpt = ValuationParity(R3, [(0, 1)])  # the irreducible t
    assert vpt(t) == UnitValue.rational(-1)
    assert vpt(t * t).is_one()


def test_sign_character():
    QQ = Q()
    assert Sign(QQ)(QQ.from_int(5)).is_one()
    assert Sign(QQ)(QQ.from_int(-5)) == UnitValue.rational(-1)


def test_trivial_multiplicative():
    assert Trivial().is_trivial
    assert eval_multiplicative(Trivial(), Q().from_int(9)).is_one()


@pytest.mark.parametrize("q,p,n", [(4, 2, 2), (9, 3, 2), (8, 2, 3)])
def test_finite_dual_orthogonality(q, p, n):
    desc = GF(p, n)
    dual = FiniteDual(desc)
    chars = dual.characters()
    assert len(chars) == q
    for x in enumerate_finite(desc):
        acc = UnitValue.zero(p)
        for ch in chars:
            acc = acc + ch(x)
        expected = UnitValue.rational(q) if x.is_zero() else UnitValue.zero(1)
        assert acc == expected


def test_perfect_pairing():
    # beta -> xi_beta is injective: distinct beta give distinct value vectors
    desc = GF(2, 3)
    elems = enumerate_finite(desc)
    tables = {}
    for beta in elems:
        xi = FiniteTrace(beta)
        tables[tuple(xi.exponent(x) for x in elems)] = beta
    assert len(tables) == 8


def test_character_literals():
    F9 = GF(3, 2)
    xi = parse_additive(F9, "trace:beta=1.1")
    assert isinstance(xi, FiniteTrace) and xi.beta == F9.element((1, 1))
    xa = parse_additive(Q(), "arch:alpha=2/3")
    assert isinstance(xa, Archimedean) and xa.alpha == Fraction(2, 3)
    R3 = RatFunc(3)
    xr = parse_additive(R3, "residue:beta=(1)/(1):depth=32")
    assert isinstance(xr, ResidueAtInfinity) and xr.depth == 32
    eta = parse_multiplicative(F9, "dlog:k=2")
    assert isinstance(eta, DlogPower) and eta.k == 2
    vp = parse_multiplicative(Q(), "valpar:S=2,3")
    assert isinstance(vp, ValuationParity) and vp.primes == (2, 3)


def test_residue_closed_forms():
    # expansion of b/(t-a) at infinity is b/t + ab/t^2 + ..., so the
    # t^(-1) coefficient is b; squaring the pole pushes it to zero
    R5 = RatFunc(5)
    t = t_element(R5)
    xi = ResidueAtInfinity(R5.one(), depth=32)
    for a_int in range(5):
        for b_int in range(1, 5):
            a, b = R5.from_int(a_int), R5.from_int(b_int)
            pole = (t - a).inverse()
            assert xi(b * pole) == UnitValue.root(5, b_int)
            assert xi(b * pole * pole).is_one()


def test_residue_shifted_pole_coefficient():
    # b*t/(t-a) = b + (ab)/t + ..., so the coefficient is a*b exactly
    R5 = RatFunc(5)
    t = t_element(R5)
    xi = ResidueAtInfinity(R5.one(), depth=32)
    for a_int in range(5):
        for b_int in range(1, 5):
            a, b = R5.from_int(a_int), R5.from_int(b_int)
            value = xi(b * t * (t - a).inverse())
            assert value == UnitValue.root(5, (a_int * b_int) % 5)
