"""Exact arithmetic in rings of roots of unity, plus a numeric escape hatch.

A UnitValue is either
  * an exact root of unity zeta_m^k        (kind 'root'),
  * an exact element of Z[zeta_m] written in the non-reduced basis
    1, zeta, ..., zeta^(m-1) with rational coefficients (kind 'sum'), or
  * a numeric complex value                 (kind 'num'),
the last being used for archimedean characters where exactness is
unavailable.  Sums arise by accumulating character values.  Coefficients
are kept non-reduced; relations are applied lazily, only when values are
compared (reduction modulo the m-th cyclotomic polynomial).
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import OrderOverflow

ORDER_CAP = 1 << 20

ROOT = "root"
SUM = "sum"
NUM = "num"


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Coefficients (low-to-high) of the m-th cyclotomic polynomial over Z."""
    # Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, by exact integer division
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _int_poly_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _mobius(n):
    result, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def _euler_phi(n):
    result, d = n, 2
    while d * d <= n:
        if n % d == 0:
            while n % d == 0:
                n //= d
            result -= result // d
        d += 1
    if n > 1:
        result -= result // n
    return result


def _int_poly_div(a, b):
    """Exact division of integer polynomials (lists low-to-high)."""
    a = a[:]
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - 1, len(b) - 2, -1):
        c = a[i]
        if c % b[-1]:
            raise ArithmeticError("non-exact cyclotomic division")
        f = c // b[-1]
        out[i - len(b) + 1] = f
        for j, bc in enumerate(b):
            a[i - len(b) + 1 + j] -= f * bc
    if any(a):
        raise ArithmeticError("non-exact cyclotomic division")
    return out


class UnitValue:
    __slots__ = ("kind", "order", "data")

    def __init__(self, kind, order, data):
        self.kind = kind
        self.order = order
        self.data = data

    # -- constructors -------------------------------------------------------

    @staticmethod
    def root(m: int, k: int) -> "UnitValue":
        if m < 1:
            raise ValueError("order must be positive")
        return UnitValue(ROOT, m, k % m)

    @staticmethod
    def one() -> "UnitValue":
        return UnitValue(ROOT, 1, 0)

    @staticmethod
    def zero(m: int = 1) -> "UnitValue":
        return UnitValue(SUM, m, (Fraction(0),) * m)

    @staticmethod
    def rational(c) -> "UnitValue":
        return UnitValue(SUM, 1, (Fraction(c),))

    @staticmethod
    def numeric(z: complex) -> "UnitValue":
        return UnitValue(NUM, 0, complex(z))

    @property
    def exact(self) -> bool:
        return self.kind != NUM

    # -- order lifting ------------------------------------------------------

    def _as_sum(self, m: int) -> tuple:
        """Coefficient vector of this value in Z[zeta_m]; order must divide m."""
        step = m // self.order
        if self.kind == ROOT:
            coeffs = [Fraction(0)] * m
            coeffs[self.data * step] = Fraction(1)
            return tuple(coeffs)
        coeffs = [Fraction(0)] * m
        for i, c in enumerate(self.data):
            if c:
                coeffs[i * step] = c
        return tuple(coeffs)

    @staticmethod
    def _common_order(a: "UnitValue", b: "UnitValue") -> int:
        m = a.order * b.order // gcd(a.order, b.order)
        if m > ORDER_CAP:
            raise OrderOverflow(f"cyclotomic order {m} exceeds cap {ORDER_CAP}")
        return m

    # -- ring operations ----------------------------------------------------

    def __mul__(self, other: "UnitValue") -> "UnitValue":
        if self.kind == NUM or other.kind == NUM:
            return UnitValue.numeric(self.embed() * other.embed())
        if self.kind == ROOT and other.kind == ROOT:
            m = self._common_order(self, other)
            return UnitValue.root(m, self.data * (m // self.order) + other.data * (m // other.order))
        m = self._common_order(self, other)
        if self.kind == ROOT:
            shift = self.data * (m // self.order)
            coeffs = other._as_sum(m)
            return UnitValue(SUM, m, tuple(coeffs[(i - shift) % m] for i in range(m)))
        if other.kind == ROOT:
            return other * self
        a, b = self._as_sum(m), other._as_sum(m)
        out = [Fraction(0)] * m
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[(i + j) % m] += ca * cb
        return UnitValue(SUM, m, tuple(out))

    def __add__(self, other: "UnitValue") -> "UnitValue":
        if self.kind == NUM or other.kind == NUM:
            return UnitValue.numeric(self.embed() + other.embed())
        m = self._common_order(self, other)
        a, b = self._as_sum(m), other._as_sum(m)
        return UnitValue(SUM, m, tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "UnitValue":
        if self.kind == NUM:
            return UnitValue.numeric(-self.data)
        return UnitValue(SUM, self.order, tuple(-c for c in self._as_sum(self.order)))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "UnitValue":
        """Multiply by an exact rational scalar."""
        if self.kind == NUM:
            return UnitValue.numeric(self.data * float(c))
        c = Fraction(c)
        return UnitValue(SUM, self.order, tuple(c * v for v in self._as_sum(self.order)))

    def conj(self) -> "UnitValue":
        if self.kind == NUM:
            return UnitValue.numeric(self.data.conjugate())
        if self.kind == ROOT:
            return UnitValue.root(self.order, -self.data)
        m = self.order
        return UnitValue(SUM, m, tuple(self.data[(-i) % m] for i in range(m)))

    # -- comparison and embedding -------------------------------------------

    def canonical(self):
        """Reduced coordinates modulo the cyclotomic polynomial of the order."""
        if self.kind == NUM:
            raise ValueError("numeric values have no canonical exact form")
        m = self.order
        coeffs = list(self._as_sum(m))
        phi = cyclotomic_polynomial(m)
        d = len(phi) - 1
        for i in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[i]
            if c:
                for j in range(d + 1):
                    coeffs[i - d + j] -= c * phi[j]
        return tuple(coeffs[:d])

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnitValue):
            return NotImplemented
        if self.kind == NUM or other.kind == NUM:
            if self.kind == NUM and other.kind == NUM:
                return self.data == other.data
            return False
        m = self._common_order(self, other)
        return UnitValue(SUM, m, self._as_sum(m)).canonical() == UnitValue(SUM, m, other._as_sum(m)).canonical()

    def __hash__(self):
        if self.kind == NUM:
            return hash(self.data)
        # hash on the scaled field trace: Tr(v)/phi(m) is invariant under
        # lifting the order, so equal values hash equal across orders
        m = self.order
        tr = Fraction(0)
        for j, c in enumerate(self._as_sum(m)):
            if c:
                o = m // gcd(j, m)
                tr += c * Fraction(_mobius(o), _euler_phi(o))
        return hash(("unit-value", tr))

    def is_one(self) -> bool:
        return self == UnitValue.one()

    def is_zero(self) -> bool:
        if self.kind == NUM:
            return self.data == 0
        return all(c == 0 for c in self.canonical())

    def embed(self) -> complex:
        """Numeric embedding; exact roots map onto the unit circle within 1e-12."""
        if self.kind == NUM:
            return self.data
        if self.kind == ROOT:
            return cmath.exp(2j * cmath.pi * self.data / self.order)
        m = self.order
        return sum(
            float(c) * cmath.exp(2j * cmath.pi * i / m) for i, c in enumerate(self.data) if c
        ) + 0j

    def __repr__(self):
        if self.kind == ROOT:
            return f"zeta({self.order})^{self.data}"
        if self.kind == SUM:
            return f"cyc({self.order})[" + ",".join(str(c) for c in self.data) + "]"
        return f"num({self.data!r})"

    def serialize(self) -> str:
        """Deterministic text form for artifacts."""
        if self.kind == ROOT:
            return f"z{self.order}^{self.data}"
        if self.kind == SUM:
            return f"c{self.order}:" + ",".join(str(c) for c in self.data)
        return f"n:{self.data.real!r},{self.data.imag!r}"


def unit_ops(op, x, y=None):
    """Dispatcher for the cyclotomic value operations.

    op in {mul, conj, embed, add_into_accumulator}; the accumulator form
    returns the updated accumulator (values are immutable).
    """
    if op == "mul":
        return x * y
    if op == "conj":
        return x.conj()
    if op == "embed":
        return x.embed()
    if op == "add_into_accumulator":
        return x + y
    raise ValueError(f"unknown unit operation {op!r}")
