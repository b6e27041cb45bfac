"""Weighted Folner sets over the supported fields and their invariance defects.

A WeightedSet is a finitely supported probability measure on field
elements - the computational form of a Folner set.  Three recipe families
produce candidate (double) Folner sequences:

  * SubfieldTower:      uniform measures on a chain of finite subfields,
                        realized inside the field of the least common
                        multiple of the scheduled degrees;
  * AdditiveBox:        uniform measures on symmetric boxes {j/d} in Q, or
                        on {g/d : deg g < R} in GF(p)(t);
  * DilatedBoxAverage:  equal-weight averages of multiplicatively dilated
                        boxes over an exponent box in the primes up to P.

Nothing here is *assumed* to be Folner: the exact total-variation defect of
every recipe under translation, dilation and inversion is measurable via
folner_defect, and all claims about the recipes are stated as measured
bounds in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import gfpoly
from .errors import (
    CapExceeded,
    EmptyAfterDrop,
    ParseError,
    ZeroInSupport,
)
from .fields import (
    DEFAULT_ENUM_CAP,
    GF,
    RATFUNC,
    RATIONAL,
    FieldDescriptor,
    FieldElement,
    enumerate_finite,
    tower_map,
)


class WeightedSet:
    """Finitely supported probability measure; weights are exact rationals."""

    def __init__(self, desc: FieldDescriptor, entries):
        self.desc = desc
        merged: dict = {}
        for x, w in entries.items() if isinstance(entries, dict) else entries:
            w = Fraction(w)
            if w < 0:
                raise ValueError("weights must be positive")
            if w:
                merged[x] = merged.get(x, Fraction(0)) + w
        if not merged:
            raise ValueError("empty support")
        total = sum(merged.values())
        if total != 1:
            raise ValueError(f"total mass {total} != 1")
        self.entries = merged

    @staticmethod
    def uniform(desc, elements) -> "WeightedSet":
        elements = list(elements)
        w = Fraction(1, len(elements))
        return WeightedSet(desc, {x: w for x in set(elements)})

    def support_size(self) -> int:
        return len(self.entries)

    def sorted_entries(self):
        return sorted(self.entries.items(), key=lambda kv: kv[0].sort_key())

    def contains_zero(self) -> bool:
        return any(x.is_zero() for x in self.entries)

    def drop_zero(self) -> "WeightedSet":
        kept = {x: w for x, w in self.entries.items() if not x.is_zero()}
        if not kept:
            raise EmptyAfterDrop("support empty after dropping zero")
        total = sum(kept.values())
        return WeightedSet(self.desc, {x: w / total for x, w in kept.items()})

    def pushforward(self, f) -> "WeightedSet":
        out: dict = {}
        for x, w in self.entries.items():
            y = f(x)
            out[y] = out.get(y, Fraction(0)) + w
        return WeightedSet(self.desc, out)

    def __repr__(self):
        return f"WeightedSet({self.desc}, |supp|={len(self.entries)})"


@dataclass(frozen=True)
class SubfieldTower:
    """Uniform measures on GF(p^(sched[k-1])), embedded in GF(p^lcm(sched))."""

    p: int
    sched: tuple

    def __post_init__(self):
        if not self.sched or any(b <= a for a, b in zip(self.sched, self.sched[1:])):
            raise ValueError("schedule must be strictly increasing")

    @property
    def top_degree(self):
        return math.lcm(*self.sched)

    def field(self):
        return GF(self.p, self.top_degree)

    def level_field(self, k):
        return GF(self.p, self.sched[k - 1])

    def depth(self):
        return len(self.sched)


@dataclass(frozen=True)
class AdditiveBox:
    """Uniform on {j/d : 1 <= |j| <= R_k} over Q, or on {g/d : deg g < R_k}
    over GF(p)(t).  The box radius doubles with the index: R_k = R * 2^(k-1)
    over Q; over GF(p)(t) the degree bound grows by one per index."""

    desc: FieldDescriptor
    d: object
    R: int

    def field(self):
        return self.desc

    def radius(self, k):
        if self.desc.kind == RATIONAL:
            return self.R * 2 ** (k - 1)
        return self.R + k - 1


@dataclass(frozen=True)
class DilatedBoxAverage:
    """Equal-weight average over u in the exponent box of dilated boxes u*B.

    At index k, the dilations over Q are u = prod_(p <= P) p^(e_p) with
    |e_p| <= E_k = E + k - 1, the base box is {j/d_k : 1 <= |j| <= R_k} with
    d_k = prod p^(E_k), and duplicate support points merge by weight
    addition.  Both axes grow with k: the box radius doubles and the
    exponent box deepens by one.  The declared d must equal the k=1 product
    (it pins the lattice the recipe starts from).  Over GF(p)(t) the role of
    the primes is played by the monic irreducibles of degree <= P.
    """

    desc: FieldDescriptor
    P: int
    E: int
    d: object
    R: int

    def __post_init__(self):
        if self.desc.kind == RATIONAL:
            expected = 1
            for p in _primes_up_to(self.P):
                expected *= p**self.E
            if self.d != expected:
                raise ValueError(f"d must equal the exponent-box product {expected}, got {self.d}")
        else:
            expected = gfpoly.ONE
            for f in _monic_irreducibles_up_to(self.desc.p, self.P):
                for _ in range(self.E):
                    expected = gfpoly.mul(expected, f, self.desc.p)
            if self.d == "auto":
                object.__setattr__(self, "d", expected)
            elif gfpoly.trim(tuple(self.d)) != expected:
                raise ValueError("d must equal the exponent-box product of irreducibles")

    def field(self):
        return self.desc

    def radius(self, k):
        # the radius must outgrow the squared denominator for the box
        # averages of characters to equidistribute, hence the factor 4
        if self.desc.kind == RATIONAL:
            return self.R * 4 ** (k - 1)
        return self.R + 2 * (k - 1)

    def exponent(self, k):
        """The exponent-box half-width at index k; the box deepens with k so
        the sequence grows along the multiplicative axis as well."""
        return self.E + k - 1

    def denominator(self, k):
        if self.desc.kind == RATIONAL:
            d = 1
            for p in _primes_up_to(self.P):
                d *= p ** self.exponent(k)
            return d
        d = gfpoly.ONE
        for f in _monic_irreducibles_up_to(self.desc.p, self.P):
            for _ in range(self.exponent(k)):
                d = gfpoly.mul(d, f, self.desc.p)
        return d

    def dilations(self, k: int = 1):
        """The multiplier set U at index k, sorted deterministically."""
        E = self.exponent(k)
        if self.desc.kind == RATIONAL:
            primes = _primes_up_to(self.P)
            us = [Fraction(1)]
            for p in primes:
                us = [u * Fraction(p) ** e for u in us for e in range(-E, E + 1)]
            return sorted(us)
        polys = _monic_irreducibles_up_to(self.desc.p, self.P)
        us = [self.desc.one()]
        f_elems = [FieldElement(self.desc, (f, gfpoly.ONE)) for f in polys]
        for f in f_elems:
            us = [u * f**e for u in us for e in range(-E, E + 1)]
        return sorted(us, key=lambda x: x.sort_key())


def _primes_up_to(P):
    return [p for p in range(2, P + 1) if all(p % d for d in range(2, p))]


def _monic_irreducibles_up_to(p, P):
    out = []
    for n in range(1, P + 1):
        for code in range(p**n):
            c = gfpoly.from_int(code, p)
            f = c + (0,) * (n - len(c)) + (1,)
            if gfpoly.is_irreducible(f, p):
                out.append(f)
    return out


def realize(recipe, k: int, cap: int = DEFAULT_ENUM_CAP) -> WeightedSet:
    """Materialize the k-th weighted set of the recipe (k is 1-based)."""
    if isinstance(recipe, SubfieldTower):
        top = recipe.field()
        level = recipe.level_field(k)
        if level.order > cap:
            raise CapExceeded(f"tower level GF({recipe.p}^{recipe.sched[k-1]}) exceeds cap")
        elems = enumerate_finite(level, cap)
        if level != top:
            emb = tower_map(level, top)
            elems = [emb(x) for x in elems]
        return WeightedSet.uniform(top, elems)

    if isinstance(recipe, AdditiveBox):
        return WeightedSet.uniform(recipe.desc, _box_points(recipe.desc, recipe.d, recipe.radius(k), cap))

    if isinstance(recipe, DilatedBoxAverage):
        desc = recipe.desc
        base = _box_points(desc, recipe.denominator(k), recipe.radius(k), cap)
        us = recipe.dilations(k)
        if len(base) * len(us) > cap:
            raise CapExceeded("dilated box average exceeds cap")
        entries: dict = {}
        w = Fraction(1, len(us) * len(base))
        for u in us:
            if desc.kind == RATIONAL:
                for x in base:
                    y = FieldElement(desc, u * x.payload)
                    entries[y] = entries.get(y, Fraction(0)) + w
            else:
                for x in base:
                    y = u * x
                    entries[y] = entries.get(y, Fraction(0)) + w
        return WeightedSet(desc, entries)

    raise TypeError(f"unknown recipe {recipe!r}")


def _box_points(desc, d, radius, cap):
    if desc.kind == RATIONAL:
        if 2 * radius > cap:
            raise CapExceeded("additive box exceeds cap")
        d = int(d)
        return [FieldElement(desc, Fraction(j, d)) for j in range(-radius, radius + 1) if j]
    if desc.kind != RATFUNC:
        raise ParseError("box recipes live on Q or GF(p)(t)")
    p = desc.p
    if p**radius > cap:
        raise CapExceeded("additive box exceeds cap")
    den = gfpoly.trim(tuple(d)) if not isinstance(d, FieldElement) else d.payload[0]
    out = []
    for code in range(1, p**radius):
        num = gfpoly.from_int(code, p)
        out.append(desc.element((num, den)))
    return out


# ---------------------------------------------------------------------------
# defects

def folner_defect(F: WeightedSet, a: FieldElement, mode: str, drop_zero: bool = False) -> Fraction:
    """Exact total-variation distance ||T mu - mu|| in [0, 2].

    T translates by a (mode 'additive'), dilates by a (mode
    'multiplicative'), or inverts pointwise (mode 'inversion').  The
    multiplicative and inversion modes require 0 outside the support unless
    drop_zero renormalizes it away first.
    """
    mu = F
    if mode == "additive":
        transform = lambda x: x + a
    elif mode == "multiplicative":
        if a.is_zero():
            raise ValueError("dilation by zero")
        if mu.contains_zero():
            if not drop_zero:
                raise ZeroInSupport("multiplicative defect with 0 in support")
            mu = mu.drop_zero()
        transform = lambda x: a * x
    elif mode == "inversion":
        if mu.contains_zero():
            if not drop_zero:
                raise ZeroInSupport("inversion defect with 0 in support")
            mu = mu.drop_zero()
        transform = lambda x: x.inverse()
    else:
        raise ValueError(f"unknown mode {mode!r}")
    pushed = mu.pushforward(transform)
    keys = set(mu.entries) | set(pushed.entries)
    zero = Fraction(0)
    return sum(abs(pushed.entries.get(x, zero) - mu.entries.get(x, zero)) for x in keys)


def inverse_pushforward(F: WeightedSet, drop_zero: bool = False) -> WeightedSet:
    """Pushforward of the measure under x -> 1/x."""
    mu = F
    if mu.contains_zero():
        if not drop_zero:
            raise ZeroInSupport("inversion with 0 in support")
        mu = mu.drop_zero()
    return mu.pushforward(lambda x: x.inverse())


def dilation_defect_bound(recipe: DilatedBoxAverage, a: FieldElement, k: int = 1) -> Fraction:
    """Provable bound on the multiplicative defect of a DilatedBoxAverage.

    Dilation by +-prod p^(s_p) (p <= P) shifts the exponent box coordinatewise,
    so at most sum_p min(|s_p|, 2E_k+1) / (2E_k+1) of the dilated boxes change
    on each side.  Any multiplier outside that group gets the trivial bound 2.
    """
    if recipe.desc.kind != RATIONAL:
        raise ParseError("bound implemented over Q")
    x = a.payload
    if x == 0:
        raise ValueError("dilation by zero")
    if x < 0:
        x = -x  # the boxes are symmetric, dilation by -1 is exact invariance
    moved = 0
    width = 2 * recipe.exponent(k) + 1
    for p in _primes_up_to(recipe.P):
        s = 0
        while x.numerator % p == 0:
            x = x / p
            s += 1
        while x.denominator % p == 0:
            x = x * p
            s += 1
        moved += min(s, width)
    if x != 1:
        return Fraction(2)
    return min(Fraction(2), Fraction(2 * moved, width))


# ---------------------------------------------------------------------------
# recipe literals

def parse_recipe(desc: FieldDescriptor, text: str):
    """`tower:p=2:sched=1,2,4,8`, `addbox:d=720:R=100000`,
    `dilbox:P=3:E=2:d=36:R=100000`."""
    parts = text.strip().split(":")
    head = parts[0]
    kv = {}
    for part in parts[1:]:
        key, _, v = part.partition("=")
        kv[key] = v
    try:
        if head == "tower":
            return SubfieldTower(int(kv["p"]), tuple(int(s) for s in kv["sched"].split(",")))
        if head == "addbox":
            d = int(kv["d"]) if desc.kind == RATIONAL else tuple(int(c) for c in kv["d"].split("."))
            return AdditiveBox(desc, d, int(kv["R"]))
        if head == "dilbox":
            if desc.kind == RATIONAL:
                d = int(kv["d"])
            else:
                d = "auto" if kv.get("d", "auto") == "auto" else tuple(int(c) for c in kv["d"].split("."))
            return DilatedBoxAverage(desc, int(kv["P"]), int(kv["E"]), d, int(kv["R"]))
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad recipe literal {text!r}: {exc}") from exc
    raise ParseError(f"unknown recipe kind {head!r}")
