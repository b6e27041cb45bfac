"""Exact arithmetic for the three field families of the laboratory.

Supported fields: the rationals Q, the finite fields GF(p^n) organized in
compatible towers, and the rational function fields GF(p)(t).  Elements
are immutable and hashable; arithmetic is exact in every family.

Representations:
  * Q               -- fractions.Fraction (lowest terms, positive denominator)
  * GF(p^n)         -- residue tuples modulo the registry modulus (gfpoly)
  * GF(p)(t)        -- reduced (numerator, denominator) pairs of gfpoly
                       tuples with monic denominator
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from . import gfpoly, registry
from .errors import (
    CapExceeded,
    DescriptorMismatch,
    DivisionByZero,
    NotAPthPower,
    ParseError,
)

DEFAULT_ENUM_CAP = 2**24

RATIONAL = "rational"
FINITE = "finite"
RATFUNC = "ratfunc"


@dataclass(frozen=True)
class FieldDescriptor:
    """Identifies a field; descriptors with equal parameters are interchangeable."""

    kind: str
    p: int = 0
    n: int = 1
    modulus: tuple = ()

    @property
    def order(self):
        if self.kind != FINITE:
            raise ValueError("order is defined for finite fields only")
        return self.p**self.n

    @property
    def char(self):
        return self.p if self.kind != RATIONAL else 0

    def zero(self):
        return FieldElement(self, _zero_payload(self))

    def one(self):
        return FieldElement(self, _one_payload(self))

    def element(self, value):
        return make_element(self, value)

    def from_int(self, k: int):
        """Image of the integer k under the canonical ring map Z -> field."""
        if self.kind == RATIONAL:
            return FieldElement(self, Fraction(k))
        kp = k % self.p
        if self.kind == FINITE:
            return FieldElement(self, (kp,) if kp else ())
        return FieldElement(self, ((kp,) if kp else (), gfpoly.ONE))

    def generator(self):
        """Canonical generator of GF(p^n)^*: the residue class of x (registry
        moduli are primitive), or the integer lift of a primitive root for n=1."""
        if self.kind != FINITE:
            raise ValueError("generator is defined for finite fields only")
        if self.n == 1:
            # modulus is x + c with -c a primitive root mod p
            return FieldElement(self, ((-self.modulus[0]) % self.p,))
        return FieldElement(self, (0, 1))

    def __repr__(self):
        if self.kind == RATIONAL:
            return "Q"
        if self.kind == FINITE:
            return f"GF({self.p}^{self.n})" if self.n > 1 else f"GF({self.p})"
        return f"GF({self.p})(t)"


def Q() -> FieldDescriptor:
    return FieldDescriptor(RATIONAL)


def GF(p: int, n: int = 1) -> FieldDescriptor:
    return FieldDescriptor(FINITE, p, n, registry.modulus(p, n))


def RatFunc(p: int) -> FieldDescriptor:
    if not registry.is_prime(p):
        raise ValueError(f"{p} is not prime")
    return FieldDescriptor(RATFUNC, p)


def _zero_payload(desc):
    if desc.kind == RATIONAL:
        return Fraction(0)
    if desc.kind == FINITE:
        return ()
    return ((), gfpoly.ONE)


def _one_payload(desc):
    if desc.kind == RATIONAL:
        return Fraction(1)
    if desc.kind == FINITE:
        return (1,)
    return (gfpoly.ONE, gfpoly.ONE)


def _reduce_fraction(num, den, p):
    """Reduce a GF(p)[t] fraction to lowest terms with monic denominator."""
    if not den:
        raise DivisionByZero("zero denominator in GF(p)(t)")
    if not num:
        return (), gfpoly.ONE
    g = gfpoly.gcd(num, den, p)
    if gfpoly.deg(g) > 0:
        num = gfpoly.divmod_(num, g, p)[0]
        den = gfpoly.divmod_(den, g, p)[0]
    lead = den[-1]
    if lead != 1:
        f = pow(lead, p - 2, p)
        num = gfpoly.scale(num, f, p)
        den = gfpoly.scale(den, f, p)
    return num, den


class FieldElement:
    """An exact element of a declared field."""

    __slots__ = ("desc", "payload")

    def __init__(self, desc, payload):
        object.__setattr__(self, "desc", desc)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, *a):
        raise AttributeError("FieldElement is immutable")

    def is_zero(self):
        d = self.desc.kind
        if d == RATIONAL:
            return self.payload == 0
        if d == FINITE:
            return self.payload == ()
        return self.payload[0] == ()

    def is_one(self):
        return self == self.desc.one()

    def _check(self, other):
        if not isinstance(other, FieldElement) or other.desc != self.desc:
            raise DescriptorMismatch(f"operands in different fields: {self.desc} vs {getattr(other, 'desc', type(other))}")

    def __add__(self, other):
        self._check(other)
        d = self.desc
        if d.kind == RATIONAL:
            return FieldElement(d, self.payload + other.payload)
        if d.kind == FINITE:
            return FieldElement(d, gfpoly.add(self.payload, other.payload, d.p))
        (a, b), (c, e) = self.payload, other.payload
        p = d.p
        num = gfpoly.add(gfpoly.mul(a, e, p), gfpoly.mul(c, b, p), p)
        return FieldElement(d, _reduce_fraction(num, gfpoly.mul(b, e, p), p))

    def __neg__(self):
        d = self.desc
        if d.kind == RATIONAL:
            return FieldElement(d, -self.payload)
        if d.kind == FINITE:
            return FieldElement(d, gfpoly.neg(self.payload, d.p))
        num, den = self.payload
        return FieldElement(d, (gfpoly.neg(num, d.p), den))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        d = self.desc
        if d.kind == RATIONAL:
            return FieldElement(d, self.payload * other.payload)
        if d.kind == FINITE:
            return FieldElement(d, gfpoly.mod(gfpoly.mul(self.payload, other.payload, d.p), d.modulus, d.p))
        (a, b), (c, e) = self.payload, other.payload
        p = d.p
        return FieldElement(d, _reduce_fraction(gfpoly.mul(a, c, p), gfpoly.mul(b, e, p), p))

    def inverse(self):
        d = self.desc
        if self.is_zero():
            raise DivisionByZero(f"inverse of zero in {d}")
        if d.kind == RATIONAL:
            return FieldElement(d, 1 / self.payload)
        if d.kind == FINITE:
            return FieldElement(d, gfpoly.inv_mod(self.payload, d.modulus, d.p))
        num, den = self.payload
        return FieldElement(d, _reduce_fraction(den, num, d.p))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def __pow__(self, k: int):
        if k == 0:
            return self.desc.one()
        base = self if k > 0 else self.inverse()
        e = abs(k)
        result = self.desc.one()
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.desc == other.desc
            and self.payload == other.payload
        )

    def __hash__(self):
        return hash((self.desc.kind, self.desc.p, self.desc.n, self.payload))

    def sort_key(self):
        """A total order used wherever deterministic iteration is required."""
        d = self.desc.kind
        if d == RATIONAL:
            return (self.payload.numerator, self.payload.denominator)
        if d == FINITE:
            return (gfpoly.to_int(self.payload, self.desc.p),)
        num, den = self.payload
        return (len(den), den, len(num), num)

    def __repr__(self):
        return f"<{format_element(self)} in {self.desc}>"


def make_element(desc, value):
    """Coerce ints, Fractions, coefficient tuples or (num, den) pairs."""
    if isinstance(value, FieldElement):
        if value.desc != desc:
            raise DescriptorMismatch("element belongs to a different field")
        return value
    if desc.kind == RATIONAL:
        return FieldElement(desc, Fraction(value))
    if desc.kind == FINITE:
        if isinstance(value, int):
            return desc.from_int(value)
        payload = gfpoly.mod(gfpoly.trim(tuple(c % desc.p for c in value)), desc.modulus, desc.p)
        return FieldElement(desc, payload)
    if isinstance(value, int):
        return desc.from_int(value)
    if isinstance(value, tuple) and len(value) == 2 and all(isinstance(v, tuple) for v in value):
        num = gfpoly.trim(tuple(c % desc.p for c in value[0]))
        den = gfpoly.trim(tuple(c % desc.p for c in value[1]))
        return FieldElement(desc, _reduce_fraction(num, den, desc.p))
    # bare coefficient tuple: a polynomial in t
    num = gfpoly.trim(tuple(c % desc.p for c in value))
    return FieldElement(desc, (num, gfpoly.ONE))


def t_element(desc):
    """The transcendental t of GF(p)(t)."""
    if desc.kind != RATFUNC:
        raise ValueError("t is defined for rational function fields only")
    return FieldElement(desc, ((0, 1), gfpoly.ONE))


# ---------------------------------------------------------------------------
# spec-surface operation dispatcher

def arith(op, x, y=None, k=None):
    """Exact field arithmetic: op in {add, sub, mul, div, neg, inv, pow}."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    if op == "pow":
        return x ** int(k)
    raise ValueError(f"unknown operation {op!r}")


def enumerate_finite(desc, cap: int = DEFAULT_ENUM_CAP):
    """All q = p^n elements, ordered by base-p integer code; first is 0."""
    if desc.kind != FINITE:
        raise ValueError("enumeration is defined for finite fields only")
    q = desc.order
    if q > cap:
        raise CapExceeded(f"|{desc}| = {q} exceeds cap {cap}")
    return [FieldElement(desc, gfpoly.from_int(k, desc.p)) for k in range(q)]


def trace(x: FieldElement) -> FieldElement:
    """Field trace GF(p^n) -> GF(p): Tr(x) = sum of x^(p^i), i < n."""
    return GF(x.desc.p).from_int(trace_int(x))


def trace_int(x: FieldElement) -> int:
    if x.desc.kind != FINITE:
        raise ValueError("trace is defined for finite-field elements")
    d = x.desc
    acc = gfpoly.ZERO
    y = x.payload
    for _ in range(d.n):
        acc = gfpoly.add(acc, y, d.p)
        y = gfpoly.pow_mod(y, d.p, d.modulus, d.p)
    if gfpoly.deg(acc) > 0:
        raise AssertionError("trace left the prime field")
    return acc[0] if acc else 0


def pth_root(x: FieldElement) -> FieldElement:
    """The unique y with y^p = x, in characteristic p.

    In GF(p^n) the Frobenius is bijective, so the root always exists.  In
    GF(p)(t) only elements of the form f(t^p) are p-th powers (coefficients
    are Frobenius-fixed); anything else raises NotAPthPower.
    """
    d = x.desc
    if d.kind == RATIONAL:
        raise ValueError("pth_root requires positive characteristic")
    if d.kind == FINITE:
        return x ** (d.p ** (d.n - 1))
    num, den = x.payload
    return FieldElement(d, (_poly_pth_root(num, d.p), _poly_pth_root(den, d.p)))


def _poly_pth_root(f, p):
    if not f:
        return gfpoly.ZERO
    out = [0] * ((len(f) - 1) // p + 1)
    for i, c in enumerate(f):
        if c:
            if i % p:
                raise NotAPthPower("exponent not divisible by the characteristic")
            out[i // p] = c  # c^p = c in GF(p)
    return gfpoly.trim(out)


# ---------------------------------------------------------------------------
# tower embeddings

class TowerMap:
    """Canonical ring embedding GF(p^m) -> GF(p^n) for m | n.

    Sends the source generator g_m (class of x) to g_n^((p^n-1)/(p^m-1));
    registry compatibility makes this image a root of the source modulus, so
    the linear extension is a field embedding fixing GF(p), and maps along
    any divisor chain compose consistently.
    """

    def __init__(self, source: FieldDescriptor, target: FieldDescriptor):
        if source.kind != FINITE or target.kind != FINITE or source.p != target.p:
            raise DescriptorMismatch("tower maps connect finite fields of equal characteristic")
        if target.n % source.n:
            raise DescriptorMismatch(f"{source} does not embed in {target}: degree does not divide")
        self.source = source
        self.target = target
        p = source.p
        e = (p**target.n - 1) // (p**source.n - 1)
        h = gfpoly.pow_mod((0, 1), e, target.modulus, p)
        if source.n == 1:
            # degree-1 source: x is a scalar class, embed by the scalar itself
            self.basis_images = [gfpoly.ONE]
        else:
            if gfpoly.eval_poly(source.modulus, h, target.modulus, p) != gfpoly.ZERO:
                raise AssertionError("registry moduli are not tower-compatible")
            acc = gfpoly.ONE
            self.basis_images = [acc]
            for _ in range(1, source.n):
                acc = gfpoly.mod(gfpoly.mul(acc, h, p), target.modulus, p)
                self.basis_images.append(acc)
        self.image_of_x = h

    def __call__(self, x: FieldElement) -> FieldElement:
        if x.desc != self.source:
            raise DescriptorMismatch("element not in the source field")
        p = self.source.p
        if self.source.n == 1:
            # scalars embed as scalars
            return self.target.from_int(x.payload[0] if x.payload else 0)
        acc = gfpoly.ZERO
        for c, img in zip(x.payload, self.basis_images):
            if c:
                acc = gfpoly.add(acc, gfpoly.scale(img, c, p), p)
        return FieldElement(self.target, acc)

    def section(self, y: FieldElement) -> FieldElement:
        """Partial inverse: the source element mapping to y (must be in the image)."""
        if y.desc != self.target:
            raise DescriptorMismatch("element not in the target field")
        # solve the linear system over GF(p) in the basis images
        p = self.source.p
        m, n = self.source.n, self.target.n
        cols = [list(img) + [0] * (n - len(img)) for img in self.basis_images]
        rhs = list(y.payload) + [0] * (n - len(y.payload))
        sol = _solve_gfp(cols, rhs, p, m, n)
        if sol is None:
            raise ValueError("element is not in the subfield image")
        return FieldElement(self.source, gfpoly.trim(sol))


def _solve_gfp(cols, rhs, p, m, n):
    """Solve sum_j sol_j * cols[j] = rhs over GF(p); None if inconsistent."""
    aug = [[cols[j][i] for j in range(m)] + [rhs[i]] for i in range(n)]
    piv_rows = []
    r = 0
    for c in range(m):
        pr = next((i for i in range(r, n) if aug[i][c] % p), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = pow(aug[r][c], p - 2, p)
        aug[r] = [(v * inv) % p for v in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] % p:
                f = aug[i][c]
                aug[i] = [(a - f * b) % p for a, b in zip(aug[i], aug[r])]
        piv_rows.append(c)
        r += 1
    for i in range(r, n):
        if aug[i][m] % p:
            return None
    sol = [0] * m
    for i, c in enumerate(piv_rows):
        sol[c] = aug[i][m] % p
    return sol


def tower_map(source: FieldDescriptor, target: FieldDescriptor) -> TowerMap:
    return TowerMap(source, target)


# ---------------------------------------------------------------------------
# cached lookup tables for small finite fields

SMALL_TABLE_CAP = 512
DLOG_TABLE_CAP = 1 << 20

_tables_lock = threading.Lock()
_tables_cache: dict = {}
_dlog_cache: dict = {}


class DlogTables:
    """Exp/log tables for GF(q) with respect to the canonical generator.

    Elements are identified with their base-p integer codes 0..q-1; the
    build costs q-1 field multiplications, nothing quadratic.
    """

    def __init__(self, desc: FieldDescriptor):
        if desc.kind != FINITE:
            raise ValueError("tables exist for finite fields only")
        q = desc.order
        if q > DLOG_TABLE_CAP:
            raise CapExceeded(f"dlog tables capped at {DLOG_TABLE_CAP}, got q={q}")
        self.desc = desc
        self.q = q
        p = desc.p
        g = desc.generator().payload
        self.exp = [1] * (q - 1)
        acc = gfpoly.ONE
        for i in range(1, q - 1):
            acc = gfpoly.mod(gfpoly.mul(acc, g, p), desc.modulus, p)
            self.exp[i] = gfpoly.to_int(acc, p)
        self.dlog = [0] * q  # dlog[0] unused
        for i, v in enumerate(self.exp):
            self.dlog[v] = i

    def element(self, code: int) -> FieldElement:
        return FieldElement(self.desc, gfpoly.from_int(code, self.desc.p))

    def code(self, x: FieldElement) -> int:
        return gfpoly.to_int(x.payload, self.desc.p)


class SmallFieldTables(DlogTables):
    """Dense arithmetic tables for GF(q), q <= SMALL_TABLE_CAP.

    Extends the exp/log tables with full mul/add matrices, negation,
    inversion and traces, for the brute-force searches.
    """

    def __init__(self, desc: FieldDescriptor):
        q = desc.order if desc.kind == FINITE else 0
        if q > SMALL_TABLE_CAP:
            raise CapExceeded(f"small-field tables capped at {SMALL_TABLE_CAP}, got q={q}")
        super().__init__(desc)
        p = desc.p
        elems = [gfpoly.from_int(k, p) for k in range(q)]
        self.add = [[gfpoly.to_int(gfpoly.add(a, b, p), p) for b in elems] for a in elems]
        self.mul = [
            [gfpoly.to_int(gfpoly.mod(gfpoly.mul(a, b, p), desc.modulus, p), p) for b in elems]
            for a in elems
        ]
        self.neg = [gfpoly.to_int(gfpoly.neg(a, p), p) for a in elems]
        q1 = q - 1
        self.inv = [0] * q
        for a in range(1, q):
            self.inv[a] = self.exp[(q1 - self.dlog[a]) % q1]
        self.trace = [trace_int(FieldElement(desc, e)) for e in elems]
        self.gen = gfpoly.to_int(desc.generator().payload, p)

    def element_list(self):
        return [self.element(c) for c in range(self.q)]


def small_field_tables(desc: FieldDescriptor) -> SmallFieldTables:
    with _tables_lock:
        if desc not in _tables_cache:
            _tables_cache[desc] = SmallFieldTables(desc)
        return _tables_cache[desc]


def dlog_tables(desc: FieldDescriptor) -> DlogTables:
    with _tables_lock:
        if desc in _tables_cache:
            return _tables_cache[desc]
        if desc not in _dlog_cache:
            _dlog_cache[desc] = DlogTables(desc)
        return _dlog_cache[desc]


# ---------------------------------------------------------------------------
# literals (config surface)

def parse_descriptor(text: str) -> FieldDescriptor:
    """Parse `rational`, `finite:p=<p>:n=<n>` or `ratfunc:p=<p>`."""
    parts = text.strip().split(":")
    head, kv = parts[0], _kv(parts[1:])
    try:
        if head == "rational":
            return Q()
        if head == "finite":
            return GF(int(kv["p"]), int(kv.get("n", "1")))
        if head == "ratfunc":
            return RatFunc(int(kv["p"]))
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad field descriptor literal {text!r}: {exc}") from exc
    raise ParseError(f"unknown field kind {head!r}")


def _kv(parts):
    out = {}
    for part in parts:
        if "=" not in part:
            raise ParseError(f"expected key=value, got {part!r}")
        k, _, v = part.partition("=")
        out[k] = v
    return out


def parse_element(desc: FieldDescriptor, text: str) -> FieldElement:
    """Element literals: `num/den` or integer over Q; dot-separated
    coefficients (low-to-high) over GF(p^n); `(num)/(den)` with dotted
    coefficient lists over GF(p)(t)."""
    text = text.strip()
    try:
        if desc.kind == RATIONAL:
            return FieldElement(desc, Fraction(text))
        if desc.kind == FINITE:
            if "." in text:
                return make_element(desc, tuple(int(s) for s in text.split(".")))
            return desc.from_int(int(text))
        if text.startswith("("):
            num_s, _, den_s = text.partition(")/(")
            num = tuple(int(s) for s in num_s.lstrip("(").split(".")) if num_s.lstrip("(") else ()
            den = tuple(int(s) for s in den_s.rstrip(")").split("."))
            return make_element(desc, (num, den))
        if "." in text:
            return make_element(desc, tuple(int(s) for s in text.split(".")))
        return desc.from_int(int(text))
    except (ValueError, IndexError) as exc:
        raise ParseError(f"bad element literal {text!r} for {desc}: {exc}") from exc


def format_element(x: FieldElement) -> str:
    """Inverse of parse_element, used for deterministic serialization."""
    d = x.desc
    if d.kind == RATIONAL:
        return str(x.payload)
    if d.kind == FINITE:
        if not x.payload:
            return "0"
        return ".".join(str(c) for c in x.payload)
    num, den = x.payload
    num_s = ".".join(str(c) for c in num) if num else ""
    den_s = ".".join(str(c) for c in den)
    return f"({num_s})/({den_s})"
