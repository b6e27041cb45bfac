"""Polynomial arithmetic over the prime fields GF(p).

A polynomial c_0 + c_1 x + ... + c_d x^d is a tuple (c_0, c_1, ..., c_d) of
ints in [0, p), with no trailing zeros; the zero polynomial is the empty
tuple.  All functions take the modulus p explicitly and return trimmed
tuples, so values are hashable and safe to cache.
"""

from __future__ import annotations

ZERO = ()
ONE = (1,)


def trim(c):
    """Strip trailing zero coefficients."""
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def deg(a):
    """Degree, with deg(0) = -1."""
    return len(a) - 1


def add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def neg(a, p):
    return tuple((-c) % p for c in a)


def sub(a, b, p):
    return add(a, neg(b, p), p)


def scale(a, s, p):
    s %= p
    if s == 0:
        return ZERO
    return trim(tuple((c * s) % p for c in a))


def mul(a, b, p):
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return trim(out)


def shift(a, k):
    """Multiply by x^k."""
    if not a:
        return ZERO
    return (0,) * k + tuple(a)


def divmod_(a, b, p):
    """Quotient and remainder of a by b (b nonzero)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db, lb = deg(b), b[-1]
    inv_lb = pow(lb, p - 2, p)
    q = [0] * max(0, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i] % p
        if c:
            f = (c * inv_lb) % p
            q[i - db] = f
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - f * b[j]) % p
    return trim(q), trim(r)


def mod(a, b, p):
    return divmod_(a, b, p)[1]


def gcd(a, b, p):
    while b:
        a, b = b, mod(a, b, p)
    if a:
        a = scale(a, pow(a[-1], p - 2, p), p)  # monic normalization
    return a


def xgcd(a, b, p):
    """Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if r0:
        f = pow(r0[-1], p - 2, p)
        r0, s0, t0 = scale(r0, f, p), scale(s0, f, p), scale(t0, f, p)
    return r0, s0, t0


def inv_mod(a, m, p):
    """Inverse of a modulo m; raises if not coprime."""
    g, s, _ = xgcd(a, m, p)
    if g != ONE:
        raise ZeroDivisionError("element not invertible modulo the given polynomial")
    return mod(s, m, p)


def pow_mod(a, e, m, p):
    """a^e mod m for e >= 0."""
    result = ONE
    base = mod(a, m, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), m, p)
        base = mod(mul(base, base, p), m, p)
        e >>= 1
    return result


def eval_at(a, x, p):
    """Evaluate at a scalar x in GF(p) (Horner)."""
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def eval_poly(a, b, m, p):
    """Evaluate a at the residue b inside GF(p)[x]/(m) (Horner)."""
    acc = ZERO
    for c in reversed(a):
        acc = mod(add(mul(acc, b, p), (c % p,) if c % p else ZERO, p), m, p)
    return acc


def monic(a, p):
    if not a:
        return a
    return scale(a, pow(a[-1], p - 2, p), p)


def from_int(k, p):
    """Digits of k in base p, low-to-high, as a polynomial."""
    out = []
    while k:
        out.append(k % p)
        k //= p
    return tuple(out)


def to_int(a, p):
    """Inverse of from_int."""
    k = 0
    for c in reversed(a):
        k = k * p + c
    return k


def is_irreducible(f, p):
    """Rabin test: f of degree n is irreducible over GF(p) iff
    x^(p^n) = x mod f and gcd(x^(p^(n/l)) - x, f) = 1 for prime l | n."""
    n = deg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    x = (0, 1)
    for l in sorted(set(_prime_factors(n))):
        h = pow_mod(x, p ** (n // l), f, p)
        if gcd(sub(h, x, p), f, p) != ONE:
            return False
    return pow_mod(x, p ** n, f, p) == x


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_factors(n):
    """Distinct prime factors of n (trial division; desk-scale inputs)."""
    return sorted(set(_prime_factors(n)))


def is_primitive(f, p):
    """True if the residue class of x generates (GF(p)[x]/(f))^*."""
    n = deg(f)
    q1 = p ** n - 1
    x = (0, 1)
    if pow_mod(x, q1, f, p) != ONE:
        return False
    for l in prime_factors(q1):
        if pow_mod(x, q1 // l, f, p) == ONE:
            return False
    return True
