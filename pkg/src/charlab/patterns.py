"""Brute-force oracles for combinatorial claims over finite fields and
finite truncations: reciprocal-triple and difference-set searches on
hyperbolas, product coverage of difference sets, spacetime-interval
witnesses, and a Furstenberg-Sarkozy-type search for Laurent polynomials.

Every search is exhaustive over its declared space (within the cap) and
every hit re-verifies its defining equations through plain field
arithmetic before being reported.  Finite-field analogs of density
statements are exploratory: reports carry no pass/fail semantics.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CapExceeded
from .fields import (
    FieldDescriptor,
    FieldElement,
    enumerate_finite,
    small_field_tables,
)
from .identities import _descriptor_for_order


@dataclass
class PatternReport:
    description: str
    hits: list
    exhaustive: bool
    extra: dict = field(default_factory=dict)

    @property
    def found(self):
        return bool(self.hits)


def _descriptor(desc_or_q):
    if isinstance(desc_or_q, FieldDescriptor):
        return desc_or_q
    return _descriptor_for_order(desc_or_q)


# ---------------------------------------------------------------------------
# hyperbola searches

def hyperbola_triple_search(desc_or_q, cap: int = 2**24) -> PatternReport:
    """All (x, y, z) in (F_q^*)^3 with x+y, y+z, x+y+z nonzero satisfying

        1/(x+y) = 1/x + 1/y,  1/(y+z) = 1/y + 1/z,
        1/(x+y+z) = 1/x + 1/y + 1/z.

    Exhaustive; in odd characteristic the system has no solutions, while in
    characteristic 2 the solutions are the dilates of a primitive cube root
    of unity pattern whenever one exists.
    """
    desc = _descriptor(desc_or_q)
    q = desc.order
    if (q - 1) ** 3 > cap:
        raise CapExceeded(f"(q-1)^3 = {(q-1)**3} exceeds cap")
    tab = small_field_tables(desc)
    add, inv = tab.add, tab.inv
    hits = []
    rng_star = range(1, q)
    for x in rng_star:
        ix = inv[x]
        for y in rng_star:
            xy = add[x][y]
            if xy == 0:
                continue
            ixy = add[ix][inv[y]]
            if inv[xy] != ixy:
                continue
            iy = inv[y]
            for z in rng_star:
                yz = add[y][z]
                if yz == 0:
                    continue
                xyz = add[xy][z]
                if xyz == 0:
                    continue
                iz = inv[z]
                if inv[yz] != add[iy][iz] or inv[xyz] != add[ixy][iz]:
                    continue
                triple = (tab.element(x), tab.element(y), tab.element(z))
                assert verify_reciprocal_triple(triple)
                hits.append(triple)
    return PatternReport(
        description=f"reciprocal-triple search over GF({q})",
        hits=hits,
        exhaustive=True,
        extra={"q": q, "char": desc.p},
    )


def verify_reciprocal_triple(triple) -> bool:
    """Recheck the three reciprocal equations with field arithmetic."""
    x, y, z = triple
    if any(v.is_zero() for v in (x, y, z, x + y, y + z, x + y + z)):
        return False
    return (
        (x + y).inverse() == x.inverse() + y.inverse()
        and (y + z).inverse() == y.inverse() + z.inverse()
        and (x + y + z).inverse() == x.inverse() + y.inverse() + z.inverse()
    )


def cube_root_family(desc_or_q):
    """The solutions (s*w, s, s*w) for primitive cube roots of unity w, if any."""
    desc = _descriptor(desc_or_q)
    out = []
    for w in enumerate_finite(desc):
        if w.is_zero() or w.is_one():
            continue
        if (w * w * w).is_one():
            for s in enumerate_finite(desc):
                if not s.is_zero():
                    out.append((s * w, s, s * w))
    return out


def hyperbola_diffset_search(desc_or_q, t, size: int, cap: int = 2**24, max_hits: int | None = None) -> PatternReport:
    """Search for F in (F_q)^2 with |F| = size and (F - F) \\ {0} inside the
    hyperbola {(a, t/a)}.

    Incremental growth with pruning: F is extended one point at a time in
    lexicographic order, keeping every pairwise difference on the hyperbola
    (h is on the hyperbola iff -h is, so one direction per pair suffices).
    Exhaustive over all size-subsets unless max_hits stops it early.
    """
    desc = _descriptor(desc_or_q)
    q = desc.order
    if q**2 * (q - 1) > cap:
        raise CapExceeded("difference-set search exceeds cap")
    tab = small_field_tables(desc)
    t_code = t if isinstance(t, int) else tab.code(desc.element(t))
    if t_code == 0:
        raise ValueError("t must be nonzero")
    add, neg, mul = tab.add, tab.neg, tab.mul

    def on_hyperbola(dx, dy):
        return dx != 0 and dy != 0 and mul[dx][dy] == t_code

    points = [(x, y) for x in range(q) for y in range(q)]
    hits = []
    exhausted = True

    def extend(current):
        nonlocal exhausted
        if max_hits is not None and len(hits) >= max_hits:
            exhausted = False
            return
        if len(current) == size:
            hits.append(tuple(current))
            return
        start = points.index(current[-1]) + 1 if current else 0
        for idx in range(start, len(points)):
            w = points[idx]
            ok = True
            for f in current:
                dx, dy = add[w[0]][neg[f[0]]], add[w[1]][neg[f[1]]]
                if not on_hyperbola(dx, dy):
                    ok = False
                    break
            if ok:
                extend(current + [w])

    extend([])
    verified = []
    for hit in hits:
        elems = tuple((tab.element(x), tab.element(y)) for x, y in hit)
        assert verify_diffset_on_hyperbola(elems, desc.element(t) if not isinstance(t, FieldElement) else t)
        verified.append(elems)
    return PatternReport(
        description=f"{size}-point difference sets inside the hyperbola (t={t_code}) over GF({q})^2",
        hits=verified,
        exhaustive=exhausted,
        extra={"q": q, "t": t_code, "size": size},
    )


def verify_diffset_on_hyperbola(points, t) -> bool:
    for i, v in enumerate(points):
        for j, w in enumerate(points):
            if i == j:
                continue
            dx, dy = v[0] - w[0], v[1] - w[1]
            if dx.is_zero() or dy.is_zero() or dx * dy != t:
                return False
    return True


# ---------------------------------------------------------------------------
# product coverage and spacetime intervals

def prod_coverage(desc_or_q, E) -> dict:
    """Prod(E - E) = {x*y : (x, y) in E - E} computed exactly.

    E is a collection of points in F_q x F_q; exploratory output (the
    density theorems it mirrors concern infinite fields).
    """
    desc = _descriptor(desc_or_q)
    pts = [_point(desc, p) for p in E]
    if len(pts) < 2:
        raise ValueError("need |E| >= 2")
    covered = set()
    for v in pts:
        for w in pts:
            covered.add((v[0] - w[0]) * (v[1] - w[1]))
    return {
        "covered": covered,
        "fraction": len(covered) / desc.order,
    }


def _point(desc, p):
    a, b = p
    a = a if isinstance(a, FieldElement) else desc.element(a)
    b = b if isinstance(b, FieldElement) else desc.element(b)
    return (a, b)


def spacetime_search(desc_or_q, z, E, method: str = "transform") -> PatternReport:
    """Witnesses (P, Q) in E x E with (P1-Q1)^2 - (P2-Q2)^2 = z.

    method 'transform' (characteristic != 2) maps points through
    (x, y) -> (x+y, x-y) and looks for difference products equal to z, the
    linear change of variables that reduces intervals to products;
    method 'direct' scans pairs and evaluates the interval form literally.
    Both are exhaustive over E x E.
    """
    desc = _descriptor(desc_or_q)
    z = z if isinstance(z, FieldElement) else desc.element(z)
    pts = [_point(desc, p) for p in E]
    hits = []
    if method == "transform":
        if desc.p == 2:
            raise ValueError("the transform route needs characteristic != 2")
        transformed = [(v[0] + v[1], v[0] - v[1]) for v in pts]
        for i, u in enumerate(transformed):
            for j, w in enumerate(transformed):
                if (u[0] - w[0]) * (u[1] - w[1]) == z:
                    hits.append((pts[i], pts[j]))
    elif method == "direct":
        for v in pts:
            for w in pts:
                d1, d2 = v[0] - w[0], v[1] - w[1]
                if d1 * d1 - d2 * d2 == z:
                    hits.append((v, w))
    else:
        raise ValueError(f"unknown method {method!r}")
    for (v, w) in hits:
        d1, d2 = v[0] - w[0], v[1] - w[1]
        assert d1 * d1 - d2 * d2 == z
    return PatternReport(
        description=f"spacetime interval z={z.payload} over GF({desc.order})^2",
        hits=hits,
        exhaustive=True,
        extra={"z": z, "method": method, "E_size": len(pts)},
    )


def spacetime_counterexample_set(desc, E_o):
    """The characteristic-2 construction: E = {(x1, x2) : x1 + x2 in E_o}.

    Requires 1 outside E_o + E_o; for such E_o no pair of E realizes the
    interval 1, which is what removes 'characteristic != 2' from the
    theorem's hypotheses at one's peril.
    """
    if desc.p != 2:
        raise ValueError("the counterexample lives in characteristic 2")
    E_o = [x if isinstance(x, FieldElement) else desc.element(x) for x in E_o]
    sums = {a + b for a in E_o for b in E_o}
    if desc.one() in sums:
        raise ValueError("E_o + E_o must avoid 1")
    base = set(E_o)
    return [
        (x, y)
        for x in enumerate_finite(desc)
        for y in enumerate_finite(desc)
        if (x + y) in base
    ]


# ---------------------------------------------------------------------------
# Furstenberg-Sarkozy search for Laurent polynomials

def laurent_fs_search(truncation, E, coefficients) -> PatternReport:
    """First a in the truncation with p(a) in E - E, for a Laurent polynomial
    p(X) = sum_k c_k X^k with c_0 = 0.

    `coefficients` maps integer exponents (possibly negative) to field
    elements; zero must not carry a coefficient.  The truncation is any
    finite subset of the field containing E; 0 is skipped as a candidate.
    """
    truncation = list(truncation)
    if not truncation:
        raise ValueError("empty truncation")
    desc = truncation[0].desc
    coeffs = {}
    for k, c in coefficients.items():
        c = c if isinstance(c, FieldElement) else desc.element(c)
        if not c.is_zero():
            coeffs[int(k)] = c
    if coeffs.get(0) is not None:
        raise ValueError("the constant coefficient must vanish")
    if not coeffs:
        raise ValueError("polynomial must have a nonzero coefficient")
    E = list(E)
    diffs = {a - b for a in E for b in E}
    hits = []
    for a in sorted(truncation, key=lambda x: x.sort_key()):
        if a.is_zero():
            continue
        value = desc.zero()
        for k, c in sorted(coeffs.items()):
            value = value + c * a**k
        if value in diffs:
            hits.append((a, value))
            break
    return PatternReport(
        description=f"Laurent difference-hit search over {desc}",
        hits=hits,
        exhaustive=not hits,  # stopped at the first witness otherwise
        extra={"truncation_size": len(truncation), "E_size": len(E)},
    )
