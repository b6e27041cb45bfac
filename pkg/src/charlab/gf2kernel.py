"""Packed-integer kernel for GF(2^n), n <= 16.

Elements are ints whose bit i is the coefficient of x^i in the residue
representation; the modulus comes from the shared registry, so packed
values agree bit-for-bit with the tuple payloads of fields.FieldElement.
Exp/log tables make full multiplicative-group sweeps (Kloosterman-type
sums over whole subfields) cheap while staying exact: character sums are
integer counts of each root of unity.
"""

from __future__ import annotations

import threading

from . import gfpoly, registry

_lock = threading.Lock()
_cache: dict = {}

PACKED_MAX_DEGREE = 16


class GF2Kernel:
    def __init__(self, n: int):
        if n > PACKED_MAX_DEGREE:
            raise ValueError(f"packed kernel supports degree <= {PACKED_MAX_DEGREE}")
        self.n = n
        self.q = 1 << n
        mod = registry.modulus(2, n)
        self.mod_mask = sum(1 << i for i, c in enumerate(mod) if c)
        # exp/log with respect to the canonical generator (class of x = 0b10;
        # for n = 1 the generator is 1)
        g = 2 if n > 1 else 1
        self.exp = [1] * (self.q - 1)
        acc = 1
        for i in range(1, self.q - 1):
            acc = self.mul(acc, g)
            self.exp[i] = acc
        self.log = [0] * self.q
        for i, v in enumerate(self.exp):
            self.log[v] = i

    def mul(self, a: int, b: int) -> int:
        """Carryless multiplication followed by modulus reduction."""
        acc = 0
        while b:
            if b & 1:
                acc ^= a
            a <<= 1
            b >>= 1
        for j in range(acc.bit_length() - 1, self.n - 1, -1):
            if acc >> j & 1:
                acc ^= self.mod_mask << (j - self.n)
        return acc

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]

    def pack(self, payload: tuple) -> int:
        return sum(1 << i for i, c in enumerate(payload) if c)

    def unpack(self, a: int) -> tuple:
        return gfpoly.trim(tuple((a >> i) & 1 for i in range(self.n)))

    def trace_mask(self, form: tuple) -> int:
        """Pack the GF(2)-linear form coefficients of x -> Tr(beta x)."""
        return sum(1 << i for i, c in enumerate(form) if c)

    def subfield_star(self, m: int):
        """Packed codes of GF(2^m)^* inside this field (m | n)."""
        if self.n % m:
            raise ValueError("not a subfield")
        step = (self.q - 1) // ((1 << m) - 1)
        return [self.exp[(j * step) % (self.q - 1)] for j in range((1 << m) - 1)]


def kernel(n: int) -> GF2Kernel:
    with _lock:
        if n not in _cache:
            _cache[n] = GF2Kernel(n)
        return _cache[n]
