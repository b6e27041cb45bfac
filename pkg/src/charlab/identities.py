"""Constructive and exact verifiers for the algebraic identities.

Three families:
  * the power identity sum_j c_j p_j(t)^n = 0 built from the binomial
    expansion of (t^n + 1)^n, with an exact linear-independence decision
    for the power families p_1^m, ..., p_N^m;
  * the triple-correlation identity over the full finite dual, checked by
    genuine cyclotomic multiplication (no shortcut through the character
    law);
  * the positive-correlation inequality for functions with non-negative
    Fourier coefficients, decided in exact rational arithmetic by
    convolution counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import gfpoly
from .cyclotomic import UnitValue
from .errors import BadA, BadS, CapExceeded, CharDividesN
from .fields import GF, FieldDescriptor, small_field_tables


# ---------------------------------------------------------------------------
# polynomials over Q or GF(p), dispatched on the characteristic

def _padd(a, b, p):
    if p:
        return gfpoly.add(a, b, p)
    out = list(a) + [Fraction(0)] * (len(b) - len(a)) if len(a) < len(b) else list(a)
    for i, c in enumerate(b):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _pmul(a, b, p):
    if p:
        return gfpoly.mul(a, b, p)
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _pscale(a, s, p):
    if p:
        return gfpoly.scale(a, s % p, p)
    if s == 0:
        return ()
    return tuple(c * s for c in a)


def _ppow(a, e, p):
    out = (1,) if p else (Fraction(1),)
    base = a
    while e:
        if e & 1:
            out = _pmul(out, base, p)
        base = _pmul(base, base, p)
        e >>= 1
    return out


# ---------------------------------------------------------------------------
# the power identity

@dataclass(frozen=True)
class PowerIdentity:
    n: int
    p: int
    N: int
    exponents: tuple  # the k with binom(n, k) nonzero in the base field
    coeffs: tuple  # c_1 ... c_N
    polys: tuple  # p_1 ... p_N as coefficient tuples


def build_power_identity(n: int, p: int) -> PowerIdentity:
    """Exponent set, coefficients and polynomials with sum c_j p_j^n = 0.

    Expanding (t^n + 1)^n leaves exactly the binomial terms that survive
    reduction mod p; the identity pits those monomial n-th powers against
    (t^n + 1)^n itself.  Verified symbolically before returning.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if p and n % p == 0:
        raise CharDividesN(f"characteristic {p} divides n = {n}")
    binoms = [comb(n, k) % p if p else comb(n, k) for k in range(n + 1)]
    exponents = tuple(k for k, b in enumerate(binoms) if b)
    N = len(exponents) + 1
    one = (1,) if p else (Fraction(1),)
    polys = []
    coeffs = []
    for k in exponents:
        polys.append(one if k == 0 else (0,) * k + one)
        coeffs.append(binoms[k] if p else Fraction(binoms[k]))
    polys.append(_padd((0,) * n + one, one, p))  # t^n + 1
    coeffs.append((p - 1) % p if p else Fraction(-1))
    identity = PowerIdentity(n, p, N, exponents, tuple(coeffs), tuple(polys))
    total = ()
    for c, poly in zip(identity.coeffs, identity.polys):
        total = _padd(total, _pscale(_ppow(poly, n, p), c, p), p)
    if total != ():
        raise AssertionError("power identity failed symbolic verification")
    return identity


def check_linear_independence(identity: PowerIdentity, m: int) -> dict:
    """Decide whether sum b_j p_j^m = 0 has a nonzero solution.

    For m > 0 the rows are the coefficient vectors of p_j^m; for m < 0 the
    relation is cleared to polynomials by multiplying through with
    (t^n (t^n+1))^|m|.  The decision is the exact rank of the row matrix
    over Q or GF(p); a kernel vector is returned as witness when dependent.
    """
    n, p = identity.n, identity.p
    if m == 0:
        raise ValueError("m must be nonzero")
    if p and m % p == 0:
        raise ValueError(f"characteristic {p} divides m = {m}")
    if m > 0:
        rows = [_ppow(poly, m, p) for poly in identity.polys]
    else:
        am = -m
        one = (1,) if p else (Fraction(1),)
        tn1_pow = _ppow(_padd((0,) * n + one, one, p), am, p)
        rows = []
        for k in identity.exponents:
            rows.append(_pmul((0,) * ((n - k) * am) + one, tn1_pow, p))
        rows.append((0,) * (n * am) + one)
    width = max(len(r) for r in rows)
    matrix = [list(r) + [0] * (width - len(r)) for r in rows]
    kernel = _kernel_vector(matrix, p)
    if kernel is None:
        return {"independent": True, "witness": None}
    # re-verify the witness symbolically against the original relation
    total = ()
    for b, row in zip(kernel, rows):
        total = _padd(total, _pscale(row, b, p), p)
    if total != ():
        raise AssertionError("kernel vector failed re-verification")
    return {"independent": False, "witness": tuple(kernel)}


def _kernel_vector(matrix, p):
    """A nonzero kernel vector of the row span, or None if rows independent."""
    rows = len(matrix)
    cols = len(matrix[0]) if matrix else 0
    # eliminate on the transpose: solve sum_j b_j row_j = 0
    aug = [[matrix[j][i] for j in range(rows)] for i in range(cols)]
    pivots = {}
    r = 0
    for c in range(rows):
        pivot = None
        for i in range(r, cols):
            if aug[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = pow(aug[r][c], p - 2, p) if p else 1 / aug[r][c]
        aug[r] = [(v * inv) % p if p else v * inv for v in aug[r]]
        for i in range(cols):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [(x - f * y) % p if p else x - f * y for x, y in zip(aug[i], aug[r])]
        pivots[c] = r
        r += 1
    free = [c for c in range(rows) if c not in pivots]
    if not free:
        return None
    c_free = free[0]
    sol = [0] * rows
    sol[c_free] = 1
    for c, rr in pivots.items():
        v = aug[rr][c_free]
        sol[c] = (-v) % p if p else -v
    return sol


# ---------------------------------------------------------------------------
# triple-correlation identity

def triple_mixing_check(desc_or_q, a, cap: int = 512) -> UnitValue:
    """(1/q) * sum over beta of xi_beta(1) xi_beta(a-1) xi_beta(-a).

    The three factors are multiplied as cyclotomic values and accumulated;
    the contract is that the average equals 1 exactly for every
    a outside {0, 1}.
    """
    desc = desc_or_q if isinstance(desc_or_q, FieldDescriptor) else _descriptor_for_order(desc_or_q)
    q = desc.order
    if q > cap:
        raise CapExceeded(f"q = {q} exceeds cap {cap}")
    tables = small_field_tables(desc)
    a_code = a if isinstance(a, int) else tables.code(desc.element(a))
    if a_code in (0, 1):
        raise BadA("a must avoid 0 and 1")
    p = desc.p
    one = 1
    a_minus_1 = tables.add[a_code][tables.neg[one]]
    minus_a = tables.neg[a_code]
    acc = UnitValue.zero(p)
    for beta in range(q):
        t1 = UnitValue.root(p, tables.trace[tables.mul[beta][one]])
        t2 = UnitValue.root(p, tables.trace[tables.mul[beta][a_minus_1]])
        t3 = UnitValue.root(p, tables.trace[tables.mul[beta][minus_a]])
        acc = acc + t1 * t2 * t3
    return acc.scale(Fraction(1, q))


def _descriptor_for_order(q):
    for p in range(2, q + 1):
        if q % p == 0:
            n = 0
            qq = q
            while qq % p == 0:
                qq //= p
                n += 1
            if qq != 1:
                raise ValueError(f"{q} is not a prime power")
            return GF(p, n)
    raise ValueError(f"{q} is not a prime power")


# ---------------------------------------------------------------------------
# the positive-correlation inequality

@dataclass
class SpectrumFunction:
    """A function on the finite dual given by non-negative Fourier data.

    values maps field-element codes to non-negative rationals; the induced
    function on characters is phi(xi) = sum_b values[b] * xi(-b).
    """

    desc: FieldDescriptor
    values: dict

    def __post_init__(self):
        q = self.desc.order
        cleaned = {}
        for b, v in self.values.items():
            code = b if isinstance(b, int) else small_field_tables(self.desc).code(b)
            v = Fraction(v)
            if v < 0:
                raise ValueError("Fourier coefficients must be non-negative")
            if v:
                cleaned[code] = v
        self.values = cleaned

    @property
    def q(self):
        return self.desc.order

    def coefficient(self, code: int) -> Fraction:
        return self.values.get(code, Fraction(0))

    def eval_at_character(self, beta_code: int, scale_code: int = 1) -> UnitValue:
        """phi(scale* . xi_beta) = sum_b values[b] xi_beta(-scale*b), exactly."""
        tables = small_field_tables(self.desc)
        p = self.desc.p
        acc = UnitValue.zero(p)
        for b, v in sorted(self.values.items()):
            arg = tables.neg[tables.mul[scale_code][b]]
            acc = acc + UnitValue.root(p, tables.trace[tables.mul[beta_code][arg]]).scale(v)
        return acc


def poscorr_check(desc_or_q, spectra, shifts) -> dict:
    """Exact rational check of the correlation inequality.

    lhs = (1/q) sum over beta of prod_j phi_j(s_j* . xi_beta), computed by
    counting solution tuples of b_1 s_1 + ... + b_N s_N = 0 (which is what
    the character average collapses to); rhs is the diagonal sum.  Returns
    lhs, rhs and whether lhs >= rhs.
    """
    desc = desc_or_q if isinstance(desc_or_q, FieldDescriptor) else _descriptor_for_order(desc_or_q)
    tables = small_field_tables(desc)
    N = len(spectra)
    if N < 2 or len(shifts) != N:
        raise BadS("need N >= 2 spectra and equally many shifts")
    s_codes = [s if isinstance(s, int) else tables.code(desc.element(s)) for s in shifts]
    if any(s == 0 for s in s_codes):
        raise BadS("shifts must be nonzero")
    total = 0
    for s in s_codes:
        total = tables.add[total][s]
    if total != 0:
        raise BadS("shifts must sum to zero")

    q = desc.order
    lhs = Fraction(0)
    inv_sN = tables.inv[s_codes[-1]]
    # enumerate (b_1 ... b_(N-1)); b_N is forced by the linear relation
    stack = [(0, 0, Fraction(1))]
    while stack:
        j, partial, prod = stack.pop()
        if j == N - 1:
            b_last = tables.mul[tables.neg[partial]][inv_sN]
            w = spectra[-1].coefficient(b_last)
            if w:
                lhs += prod * w
            continue
        for b in range(q):
            w = spectra[j].coefficient(b)
            if w:
                stack.append((j + 1, tables.add[partial][tables.mul[b][s_codes[j]]], prod * w))
    rhs = Fraction(0)
    for b in range(q):
        term = Fraction(1)
        for phi in spectra:
            term *= phi.coefficient(b)
            if not term:
                break
        rhs += term
    return {"lhs": lhs, "rhs": rhs, "holds": lhs >= rhs, "equality": lhs == rhs}
