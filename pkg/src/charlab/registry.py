"""Registry of fixed irreducible moduli for the finite fields GF(p^n).

One modulus is pinned per (p, n) so that field elements, generators and
tower embeddings are identical across runs and machines.  The moduli are
chosen by a deterministic search: the first monic polynomial x^n + c (in
ascending order of the base-p integer code of c) that is irreducible,
primitive, and norm-compatible with the already-chosen moduli of the
maximal proper subfields.  Compatibility means that x^((p^n-1)/(p^m-1))
is a root of the degree-m modulus for every maximal divisor m | n, which
makes the canonical generator-to-generator subfield embeddings commute
along any chain.

The shipped data file pins the precomputed choices; missing entries are
regenerated on demand by the same search and are therefore reproducible.

File format, one entry per line, coefficients low-to-high:

    p n : c_0 c_1 ... c_n
"""

from __future__ import annotations

import threading
from importlib import resources

from . import gfpoly

_lock = threading.Lock()
_cache: dict[tuple[int, int], tuple[int, ...]] = {}
_file_loaded = False


def _load_data_file():
    global _file_loaded
    if _file_loaded:
        return
    try:
        text = resources.files("charlab").joinpath("data/moduli.txt").read_text()
    except (FileNotFoundError, ModuleNotFoundError):
        _file_loaded = True
        return
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        head, _, tail = line.partition(":")
        p, n = (int(s) for s in head.split())
        coeffs = tuple(int(s) for s in tail.split())
        _cache[(p, n)] = coeffs
    _file_loaded = True


def is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _maximal_divisors(n):
    return sorted({n // l for l in gfpoly.prime_factors(n)})


def _compatible(f, p, n):
    """Check Conway-style compatibility of f with the pinned subfield moduli."""
    for m in _maximal_divisors(n):
        sub_mod = modulus(p, m)
        e = (p**n - 1) // (p**m - 1)
        y = gfpoly.pow_mod((0, 1), e, f, p)
        if gfpoly.eval_poly(sub_mod, y, f, p) != gfpoly.ZERO:
            return False
    return True


def _search(p, n):
    for code in range(p**n):
        c = gfpoly.from_int(code, p)
        if not c or c[0] == 0:  # zero constant term: reducible (or x itself)
            continue
        f = c + (0,) * (n - len(c)) + (1,)
        if not gfpoly.is_irreducible(f, p):
            continue
        if not gfpoly.is_primitive(f, p):
            continue
        if n > 1 and not _compatible(f, p, n):
            continue
        return f
    raise RuntimeError(f"no primitive compatible modulus found for GF({p}^{n})")


def modulus(p, n):
    """The pinned modulus for GF(p^n), generating and caching if absent."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    with _lock:
        _load_data_file()
        if (p, n) in _cache:
            return _cache[(p, n)]
    if n > 1:
        for m in _maximal_divisors(n):
            modulus(p, m)
    found = _search(p, n)
    with _lock:
        return _cache.setdefault((p, n), found)


def format_entry(p, n, f):
    return f"{p} {n} : " + " ".join(str(c) for c in f)


def known_entries():
    with _lock:
        _load_data_file()
        return dict(_cache)
