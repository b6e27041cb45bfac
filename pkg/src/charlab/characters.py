"""Additive and multiplicative characters on the supported fields.

Additive characters take values in exact roots of unity wherever the field
has positive characteristic (trace characters on GF(p^n), residue
characters on GF(p)(t)); on Q they are archimedean and numeric.
Multiplicative characters cover the trivial character, discrete-log powers
on finite fields, valuation-parity characters on Q and GF(p)(t), and the
sign character on Q.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

from . import gfpoly
from .cyclotomic import UnitValue
from .errors import DepthInsufficient, DescriptorMismatch, ParseError, ZeroArgument
from .fields import (
    FINITE,
    RATFUNC,
    RATIONAL,
    FieldElement,
    enumerate_finite,
    parse_element,
    dlog_tables,
    trace_int,
)


class AdditiveCharacter:
    """An evaluable homomorphism (K, +) -> unit circle."""

    def eval(self, x: FieldElement) -> UnitValue:
        raise NotImplementedError

    def __call__(self, x):
        return self.eval(x)

    @property
    def is_trivial(self):
        raise NotImplementedError

    @property
    def exact(self):
        return True


class FiniteTrace(AdditiveCharacter):
    """xi_beta(x) = zeta_p^Tr(beta x) on GF(p^n)."""

    def __init__(self, beta: FieldElement):
        if beta.desc.kind != FINITE:
            raise DescriptorMismatch("trace characters live on finite fields")
        self.desc = beta.desc
        self.beta = beta
        # Tr(beta x) is GF(p)-linear in x: precompute it on the power basis
        d = self.desc
        basis = [FieldElement(d, gfpoly.mod(gfpoly.shift(gfpoly.ONE, i), d.modulus, d.p)) for i in range(d.n)]
        self._form = tuple(trace_int(beta * e) for e in basis)

    @property
    def is_trivial(self):
        return self.beta.is_zero()

    def exponent(self, x: FieldElement) -> int:
        """Tr(beta x) as an integer in [0, p)."""
        if x.desc != self.desc:
            raise DescriptorMismatch("argument in the wrong field")
        return sum(c * f for c, f in zip(x.payload, self._form)) % self.desc.p

    def eval(self, x: FieldElement) -> UnitValue:
        return UnitValue.root(self.desc.p, self.exponent(x))

    def __repr__(self):
        return f"FiniteTrace(beta={self.beta!r})"


class Archimedean(AdditiveCharacter):
    """xi_alpha(x) = exp(2 pi i alpha x) on Q; numeric values."""

    def __init__(self, alpha, inexact_alpha: bool = False):
        self.alpha = alpha if isinstance(alpha, float) else Fraction(alpha)
        self.alpha_is_float = isinstance(alpha, float) or inexact_alpha

    @property
    def is_trivial(self):
        return self.alpha == 0

    @property
    def exact(self):
        return False

    def eval(self, x: FieldElement) -> UnitValue:
        if x.desc.kind != RATIONAL:
            raise DescriptorMismatch("archimedean characters live on Q")
        return UnitValue.numeric(cmath.exp(2j * cmath.pi * float(self.alpha * x.payload)))

    def __repr__(self):
        return f"Archimedean(alpha={self.alpha})"


class ResidueAtInfinity(AdditiveCharacter):
    """xi_beta(f) = zeta_p^c, c the t^(-1) coefficient of beta*f at infinity.

    The expansion is carried to `depth` terms; evaluation refuses arguments
    whose numerator-plus-denominator degree reaches the depth, so truncation
    can never silently change the extracted coefficient.
    """

    def __init__(self, beta: FieldElement, depth: int = 64):
        if beta.desc.kind != RATFUNC:
            raise DescriptorMismatch("residue characters live on GF(p)(t)")
        self.desc = beta.desc
        self.beta = beta
        self.depth = depth

    @property
    def is_trivial(self):
        return self.beta.is_zero()

    def eval(self, x: FieldElement) -> UnitValue:
        if x.desc != self.desc:
            raise DescriptorMismatch("argument in the wrong field")
        h = self.beta * x
        num, den = h.payload
        p = self.desc.p
        if gfpoly.deg(num) + gfpoly.deg(den) >= self.depth:
            raise DepthInsufficient(
                f"depth {self.depth} <= deg(num)+deg(den) = {gfpoly.deg(num) + gfpoly.deg(den)}"
            )
        return UnitValue.root(p, _coeff_at_minus_one(num, den, p, self.depth))

    def __repr__(self):
        return f"ResidueAtInfinity(beta={self.beta!r}, depth={self.depth})"


def _coeff_at_minus_one(num, den, p, depth):
    """Coefficient of t^(-1) in the expansion of num/den at infinity."""
    if not num:
        return 0
    dn, dd = gfpoly.deg(num), gfpoly.deg(den)
    j_star = 1 + dn - dd  # index in the power series of s = 1/t
    if j_star < 0:
        return 0
    num_rev = tuple(reversed(num))
    den_rev = tuple(reversed(den))
    inv0 = pow(den_rev[0], p - 2, p)
    g = []
    for j in range(min(depth, j_star + 1)):
        acc = num_rev[j] if j < len(num_rev) else 0
        for i in range(1, min(j, len(den_rev) - 1) + 1):
            acc -= den_rev[i] * g[j - i]
        g.append((acc * inv0) % p)
    return g[j_star]


class MultiplicativeCharacter:
    """An evaluable homomorphism (K^*, .) -> unit circle."""

    def eval(self, x: FieldElement) -> UnitValue:
        raise NotImplementedError

    def __call__(self, x):
        return self.eval(x)

    def _nonzero(self, x):
        if x.is_zero():
            raise ZeroArgument("multiplicative character at 0")

    @property
    def is_trivial(self):
        return False

    @property
    def exact(self):
        return True


class Trivial(MultiplicativeCharacter):
    def __init__(self, desc=None):
        self.desc = desc

    @property
    def is_trivial(self):
        return True

    def eval(self, x):
        self._nonzero(x)
        return UnitValue.one()

    def __repr__(self):
        return "Trivial()"


class DlogPower(MultiplicativeCharacter):
    """eta(g^j) = zeta_(q-1)^(k j) on GF(q)^*, g the canonical generator."""

    def __init__(self, desc, k: int, gen: FieldElement | None = None):
        if desc.kind != FINITE:
            raise DescriptorMismatch("dlog characters live on finite fields")
        self.desc = desc
        self.k = k
        self.gen = gen
        self._tables = None  # discrete-log table built on first evaluation
        self._base = None

    def _ensure_tables(self):
        if self._tables is None:
            self._tables = dlog_tables(self.desc)
            if self.gen is not None and self.gen != self.desc.generator():
                base = self._tables.dlog[self._tables.code(self.gen)]
                if _multiplicative_order(base, self.desc.order - 1) != self.desc.order - 1:
                    raise ValueError("supplied element does not generate the multiplicative group")
                self._base = base
            else:
                self._base = 1

    @property
    def is_trivial(self):
        return self.k % (self.desc.order - 1) == 0

    def eval(self, x: FieldElement) -> UnitValue:
        self._nonzero(x)
        if x.desc != self.desc:
            raise DescriptorMismatch("argument in the wrong field")
        self._ensure_tables()
        q1 = self.desc.order - 1
        j = self._tables.dlog[self._tables.code(x)]
        if self._base != 1:
            j = (j * pow(self._base, -1, q1)) % q1
        return UnitValue.root(q1, self.k * j)

    def __repr__(self):
        return f"DlogPower(k={self.k}, q={self.desc.order})"


def _multiplicative_order(a, n):
    from math import gcd as _g

    return n // _g(a, n)


class ValuationParity(MultiplicativeCharacter):
    """eta(x) = (-1)^(sum of valuations at the primes/irreducibles in S)."""

    def __init__(self, desc, primes):
        self.desc = desc
        if desc.kind == RATIONAL:
            self.primes = tuple(sorted(int(s) for s in primes))
        elif desc.kind == RATFUNC:
            polys = []
            for s in primes:
                poly = s.payload[0] if isinstance(s, FieldElement) else gfpoly.trim(tuple(s))
                polys.append(gfpoly.monic(poly, desc.p))
            self.primes = tuple(sorted(polys))
        else:
            raise DescriptorMismatch("valuation characters live on Q or GF(p)(t)")

    @property
    def is_trivial(self):
        return not self.primes

    def eval(self, x: FieldElement) -> UnitValue:
        self._nonzero(x)
        if x.desc != self.desc:
            raise DescriptorMismatch("argument in the wrong field")
        total = 0
        if self.desc.kind == RATIONAL:
            for p in self.primes:
                total += _int_valuation(x.payload.numerator, p) - _int_valuation(x.payload.denominator, p)
        else:
            num, den = x.payload
            for f in self.primes:
                total += _poly_valuation(num, f, self.desc.p) - _poly_valuation(den, f, self.desc.p)
        return UnitValue.root(2, total)

    def __repr__(self):
        return f"ValuationParity(S={self.primes})"


def _int_valuation(n, p):
    n = abs(n)
    v = 0
    while n and n % p == 0:
        n //= p
        v += 1
    return v


def _poly_valuation(f, g, p):
    v = 0
    while f:
        q, r = gfpoly.divmod_(f, g, p)
        if r:
            break
        f = q
        v += 1
    return v


class Sign(MultiplicativeCharacter):
    """eta(x) = sign(x) on Q^*."""

    def __init__(self, desc):
        if desc.kind != RATIONAL:
            raise DescriptorMismatch("the sign character lives on Q")
        self.desc = desc

    def eval(self, x: FieldElement) -> UnitValue:
        self._nonzero(x)
        return UnitValue.root(2, 0 if x.payload > 0 else 1)

    def __repr__(self):
        return "Sign()"


class FiniteDual:
    """All q additive characters of GF(q), realized as trace characters."""

    def __init__(self, desc):
        if desc.kind != FINITE:
            raise DescriptorMismatch("finite duals exist for finite fields")
        self.desc = desc
        self.q = desc.order

    def characters(self):
        return [FiniteTrace(beta) for beta in enumerate_finite(self.desc)]

    def __iter__(self):
        return iter(self.characters())


# ---------------------------------------------------------------------------
# spec-surface dispatchers and config literals

def eval_additive(xi: AdditiveCharacter, x: FieldElement) -> UnitValue:
    return xi.eval(x)


def eval_multiplicative(eta: MultiplicativeCharacter, x: FieldElement) -> UnitValue:
    return eta.eval(x)


def parse_additive(desc, text: str) -> AdditiveCharacter:
    """`trace:beta=<elt>`, `arch:alpha=<rational>`, `residue:beta=<elt>:depth=<k>`."""
    parts = text.strip().split(":")
    head = parts[0]
    kv = {}
    for part in parts[1:]:
        k, _, v = part.partition("=")
        kv[k] = v
    try:
        if head == "trace":
            return FiniteTrace(parse_element(desc, kv["beta"]))
        if head == "arch":
            return Archimedean(Fraction(kv["alpha"]))
        if head == "residue":
            return ResidueAtInfinity(parse_element(desc, kv["beta"]), int(kv.get("depth", "64")))
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad additive character literal {text!r}: {exc}") from exc
    raise ParseError(f"unknown additive character kind {head!r}")


def parse_multiplicative(desc, text: str) -> MultiplicativeCharacter:
    """`trivial`, `dlog:k=<int>`, `valpar:S=<list>`, `sign`."""
    parts = text.strip().split(":")
    head = parts[0]
    kv = {}
    for part in parts[1:]:
        k, _, v = part.partition("=")
        kv[k] = v
    try:
        if head == "trivial":
            return Trivial(desc)
        if head == "dlog":
            return DlogPower(desc, int(kv["k"]))
        if head == "valpar":
            items = kv["S"].split(",") if kv["S"] else []
            if desc.kind == RATIONAL:
                return ValuationParity(desc, [int(s) for s in items])
            return ValuationParity(desc, [tuple(int(c) for c in s.split(".")) for s in items])
        if head == "sign":
            return Sign(desc)
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad multiplicative character literal {text!r}: {exc}") from exc
    raise ParseError(f"unknown multiplicative character kind {head!r}")
