"""The sum engine: Kloosterman sums, Folner-Kloosterman series, twisted
power series and the inverse-character series, with decay reporting.

All sums over positive-characteristic fields are exact: summands are roots
of unity, accumulated as weighted integer/rational vectors of cyclotomic
coefficients.  Archimedean sums are numeric and flagged inexact.  Series
over SubfieldTower recipes drop zero and renormalize by 1/(q_k - 1); the
factor q/(q-1) separating this from plain 1/|F| normalization is recorded
per term so either convention can be read off exactly.
"""

from __future__ import annotations

import csv
import math

import numpy as np
from dataclasses import dataclass, field
from fractions import Fraction

from . import gf2kernel
from .characters import (
    AdditiveCharacter,
    Archimedean,
    DlogPower,
    FiniteTrace,
    MultiplicativeCharacter,
    Trivial,
)
from .cyclotomic import UnitValue
from .errors import CapExceeded, DescriptorMismatch, TooShort
from .fields import (
    DEFAULT_ENUM_CAP,
    FINITE,
    RATIONAL,
    GF,
    enumerate_finite,
    small_field_tables,
    tower_map,
)
from .folner import DilatedBoxAverage, SubfieldTower, WeightedSet, realize


# ---------------------------------------------------------------------------
# series containers

@dataclass
class SumTerm:
    k: int
    support_size: int
    value: complex
    exact: bool
    exact_value: UnitValue | None = None
    meta: dict = field(default_factory=dict)

    @property
    def magnitude(self) -> float:
        return abs(self.value)


@dataclass
class SumSeries:
    terms: list
    spec: str
    provenance: str

    def magnitudes(self):
        return [t.magnitude for t in self.terms]

    def csv_rows(self):
        rows = [("k", "support_size", "re", "im", "abs", "exact")]
        for t in self.terms:
            rows.append(
                (t.k, t.support_size, repr(t.value.real), repr(t.value.imag), repr(abs(t.value)), t.exact)
            )
        return rows

    def write_csv(self, path):
        with open(path, "w", newline="") as fh:
            csv.writer(fh).writerows(self.csv_rows())


@dataclass(frozen=True)
class TwistSpec:
    """eta(a) * xi_1(a^(n_1)) * ... * xi_r(a^(n_r))."""

    eta: MultiplicativeCharacter
    factors: tuple  # of (AdditiveCharacter, int)

    def __post_init__(self):
        for _, n_i in self.factors:
            if n_i == 0:
                raise ValueError("exponents must be nonzero")

    def positive_indices(self):
        return tuple(i for i, (_, n) in enumerate(self.factors) if n > 0)


# ---------------------------------------------------------------------------
# cyclotomic accumulation helpers

class RootBuckets:
    """Accumulate sum(w * zeta_m^e) as exact buckets keyed by (m, e)."""

    def __init__(self):
        self.buckets: dict = {}

    def add(self, value: UnitValue, weight: Fraction):
        if value.kind != "root":
            raise ValueError("bucket accumulation expects pure roots of unity")
        key = (value.order, value.data)
        self.buckets[key] = self.buckets.get(key, Fraction(0)) + weight

    def total(self) -> UnitValue:
        if not self.buckets:
            return UnitValue.zero(1)
        m = 1
        for order, _ in self.buckets:
            m = math.lcm(m, order)
        coeffs = [Fraction(0)] * m
        for (order, e), w in self.buckets.items():
            coeffs[(e * (m // order)) % m] += w
        return UnitValue("sum", m, tuple(coeffs))


def _exact_weighted_sum(pairs):
    """pairs: iterable of (UnitValue root, Fraction weight) -> UnitValue."""
    acc = RootBuckets()
    for v, w in pairs:
        acc.add(v, w)
    return acc.total()


# ---------------------------------------------------------------------------
# classical Kloosterman sums

@dataclass
class KloostermanSum:
    q: int
    value: complex
    exact: UnitValue
    weil_ratio: float | None


def kloosterman_classical(p, n, beta1, beta2, cap: int = DEFAULT_ENUM_CAP) -> KloostermanSum:
    """K = sum over a in GF(p^n)^* of xi_beta1(a) xi_beta2(1/a), exactly."""
    desc = GF(p, n)
    q = desc.order
    if q > cap:
        raise CapExceeded(f"q = {q} exceeds cap {cap}")
    beta1 = desc.element(beta1)
    beta2 = desc.element(beta2)
    xi1, xi2 = FiniteTrace(beta1), FiniteTrace(beta2)
    counts = _kloosterman_counts(desc, xi1, xi2)
    exact = UnitValue("sum", p, tuple(Fraction(c) for c in counts))
    value = exact.embed()
    ratio = None
    if not beta1.is_zero() and not beta2.is_zero():
        ratio = abs(value) / (2 * math.sqrt(q))
    return KloostermanSum(q, value, exact, ratio)


def _kloosterman_counts(desc, xi1, xi2):
    """Counts of each zeta_p power in the Kloosterman sum over desc^*."""
    p, q = desc.p, desc.order
    counts = [0] * p
    if p == 2 and desc.n <= gf2kernel.PACKED_MAX_DEGREE:
        ker = gf2kernel.kernel(desc.n)
        m1 = ker.trace_mask(xi1._form)
        m2 = ker.trace_mask(xi2._form)
        q1 = q - 1
        exp = ker.exp
        for j in range(q1):
            a = exp[j]
            ainv = exp[q1 - j] if j else 1
            counts[((a & m1).bit_count() + (ainv & m2).bit_count()) & 1] += 1
        return counts
    if q <= 512:
        # vectorized over the whole multiplicative group: the exponent of
        # each summand is Tr(b1 a) + Tr(b2 / a), tabulated once per character
        tables = small_field_tables(desc)
        t1 = np.array([xi1.exponent(tables.element(c)) for c in range(q)], dtype=np.int64)
        t2 = np.array([xi2.exponent(tables.element(c)) for c in range(q)], dtype=np.int64)
        inv = np.array(tables.inv, dtype=np.int64)
        exponents = (t1[1:] + t2[inv[1:]]) % p
        for e, c in enumerate(np.bincount(exponents, minlength=p)):
            counts[e] = int(c)
        return counts
    for a in enumerate_finite(desc):
        if a.is_zero():
            continue
        counts[(xi1.exponent(a) + xi2.exponent(a.inverse())) % p] += 1
    return counts


# ---------------------------------------------------------------------------
# series over Folner recipes

def folner_kloosterman_series(recipe, xi1, xi2, k_max, cap: int = DEFAULT_ENUM_CAP) -> SumSeries:
    """Term k: sum over the k-th weighted set (zero dropped, renormalized)
    of xi1(a) xi2(1/a)."""
    spec = TwistSpec(Trivial(), ((xi1, 1), (xi2, -1)))
    return twisted_power_series(recipe, spec, k_max, cap=cap, label="folner-kloosterman")


def twisted_power_series(recipe, spec: TwistSpec, k_max, cap: int = DEFAULT_ENUM_CAP, label="twisted-power") -> SumSeries:
    """Term k: sum of mu_k-weights of eta(a) * prod_i xi_i(a^(n_i))."""
    terms = []
    if isinstance(recipe, SubfieldTower):
        _validate_char_exponents(recipe.p, spec)
        top = recipe.field()
        for k in range(1, min(k_max, recipe.depth()) + 1):
            terms.append(_tower_term(recipe, spec, k, top, cap))
    else:
        desc = recipe.field()
        if desc.kind == FINITE:
            raise DescriptorMismatch("box recipes live on Q or GF(p)(t)")
        if desc.char:
            _validate_char_exponents(desc.char, spec)
        for k in range(1, k_max + 1):
            mu = realize(recipe, k, cap)
            if mu.contains_zero():
                mu = mu.drop_zero()
            terms.append(_weighted_term(mu, spec, k))
    return SumSeries(terms, spec=_spec_text(spec), provenance=f"{label}:{recipe!r}")


def _validate_char_exponents(p, spec):
    for _, n_i in spec.factors:
        if n_i % p == 0:
            raise ValueError(f"exponent {n_i} divisible by the characteristic {p}")


def _spec_text(spec):
    parts = [f"eta={spec.eta!r}"]
    for xi, n in spec.factors:
        parts.append(f"({xi!r})^{n}")
    return " * ".join(parts)


def _tower_term(recipe, spec, k, top, cap):
    level = recipe.level_field(k)
    q = level.order
    if q > cap:
        raise CapExceeded(f"tower level q={q} exceeds cap")
    p = recipe.p

    is_plain_kloosterman = (
        spec.eta.is_trivial
        and len(spec.factors) == 2
        and spec.factors[0][1] == 1
        and spec.factors[1][1] == -1
        and isinstance(spec.factors[0][0], FiniteTrace)
        and isinstance(spec.factors[1][0], FiniteTrace)
    )
    if p == 2 and is_plain_kloosterman and top.n <= gf2kernel.PACKED_MAX_DEGREE:
        ker = gf2kernel.kernel(top.n)
        m1 = ker.trace_mask(spec.factors[0][0]._form)
        m2 = ker.trace_mask(spec.factors[1][0]._form)
        counts = [0, 0]
        q1top = ker.q - 1
        step = q1top // (q - 1)
        exp = ker.exp
        for j in range(q - 1):
            a = exp[(j * step) % q1top]
            ainv = exp[(q1top - j * step) % q1top]
            counts[((a & m1).bit_count() + (ainv & m2).bit_count()) & 1] += 1
        exact = UnitValue("sum", 2, (Fraction(counts[0], q - 1), Fraction(counts[1], q - 1)))
        return SumTerm(
            k=k,
            support_size=q - 1,
            value=exact.embed(),
            exact=True,
            exact_value=exact,
            meta={"q": q, "mass_factor": Fraction(q, q - 1)},
        )

    # generic exact path: enumerate the level and embed into the top field.
    # A dlog twist restricts level-by-level along the compatible generators,
    # so it is rebuilt on the level field and evaluated at level elements.
    eta = spec.eta
    if isinstance(eta, DlogPower):
        eta = DlogPower(level, eta.k)
    elif not eta.is_trivial:
        raise DescriptorMismatch("tower series support trivial or dlog twists only")
    emb = tower_map(level, top) if level != top else None
    level_elems = [x for x in enumerate_finite(level, cap) if not x.is_zero()]
    level_elems.sort(key=lambda x: x.sort_key())

    w = Fraction(1, q - 1)
    buckets = RootBuckets()
    for x in level_elems:
        val = UnitValue.one() if eta.is_trivial else eta.eval(x)
        for xi, n_i in spec.factors:
            y = x**n_i  # cheap in the level field; embedding commutes with powers
            val = val * xi.eval(emb(y) if emb else y)
        buckets.add(val, w)
    total = buckets.total()
    return SumTerm(
        k=k,
        support_size=q - 1,
        value=total.embed(),
        exact=True,
        exact_value=total,
        meta={"q": q, "mass_factor": Fraction(q, q - 1)},
    )


def _weighted_term(mu: WeightedSet, spec: TwistSpec, k: int) -> SumTerm:
    exact = spec.eta.exact and all(xi.exact for xi, _ in spec.factors)
    if exact:
        buckets = RootBuckets()
        for a, w in mu.sorted_entries():
            val = UnitValue.one() if spec.eta.is_trivial else spec.eta.eval(a)
            for xi, n_i in spec.factors:
                val = val * xi.eval(a**n_i)
            buckets.add(val, w)
        total = buckets.total()
        return SumTerm(k, mu.support_size(), total.embed(), True, total)
    acc = 0j
    for a, w in mu.sorted_entries():
        z = 1 + 0j
        if not spec.eta.is_trivial:
            z *= spec.eta.eval(a).embed()
        for xi, n_i in spec.factors:
            z *= xi.eval(a**n_i).embed()
        acc += float(w) * z
    return SumTerm(k, mu.support_size(), acc, False)


def inverse_character_series(recipe, xi: AdditiveCharacter, k_max, cap: int = DEFAULT_ENUM_CAP):
    """Term k: sum of mu_k-weights of xi(1/a); returns (series, tail_floor).

    tail_floor is the maximum |term| over the final third of the indices -
    the quantity whose non-vanishing the inverse-asymmetry experiments track.
    """
    if not isinstance(recipe, DilatedBoxAverage) or recipe.desc.kind != RATIONAL:
        raise DescriptorMismatch("inverse-character series run over dilated-box recipes on Q")
    if not isinstance(xi, (Archimedean,)):
        raise DescriptorMismatch("inverse-character series take an archimedean character")
    spec = TwistSpec(Trivial(), ((xi, -1),))
    series = twisted_power_series(recipe, spec, k_max, cap=cap, label="inverse-character")
    tail = series.terms[-max(1, len(series.terms) // 3):]
    tail_floor = max(t.magnitude for t in tail)
    return series, tail_floor


def decay_report(series: SumSeries) -> dict:
    """Summary statistics: max_tail over the final third, |last term|, and the
    fraction of consecutive magnitude pairs that strictly decrease."""
    if len(series.terms) < 3:
        raise TooShort("decay reports need at least 3 terms")
    mags = series.magnitudes()
    tail = mags[-max(1, len(mags) // 3):]
    decreasing = sum(1 for a, b in zip(mags, mags[1:]) if b < a)
    return {
        "max_tail": max(tail),
        "last": mags[-1],
        "monotone_fraction": decreasing / (len(mags) - 1),
    }
