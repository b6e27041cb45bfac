"""Reconstruction pipelines: field homomorphisms from multiplicative data,
and reduced models of diagonalizable multiplicative-group representations.

The first pipeline starts from a multiplicative map rho together with
finite-valued correction maps u, v satisfying

    rho(1 + x) = u(x) + v(x) * rho(x)        (rho(0) = 0 by convention)

and derives w = v/u, checks that w behaves like a homomorphism up to
finitely many exceptions (patchwise behavior is measured on sample grids,
where the finite exceptional sets must not grow with the grid), and
assembles kappa(x) = w(x) * rho(x), whose additivity and multiplicativity
violations are counted exactly.

The second pipeline turns integer weights m_j = p^(l_j) * n_j over
GF(p)(t) into an additive (generally nonlinear) change of variables made
of coordinatewise p^(l_j)-th powers, with exact additivity, equivariance
(a^(n_j)-action mapping to a^(m_j)-action), and a p-th-root based inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BadWeight, ZeroU
from .fields import FieldDescriptor, FieldElement, RatFunc, parse_element, pth_root, t_element
from . import gfpoly


# ---------------------------------------------------------------------------
# multiplicative data and the w / kappa pipeline

@dataclass
class MultMapData:
    """rho, u, v on K^* with the defining relation above; maps are callables."""

    source: FieldDescriptor
    target: FieldDescriptor
    rho: object
    u: object
    v: object
    name: str = ""

    def check_defining_relation(self, samples) -> list:
        """Sample points where rho(1+x) != u(x) + v(x) rho(x); rho(0) = 0."""
        bad = []
        one = self.source.one()
        for x in samples:
            if x.is_zero():
                continue
            lhs = self.target.zero() if (one + x).is_zero() else self.rho(one + x)
            if lhs != self.u(x) + self.v(x) * self.rho(x):
                bad.append(x)
        return bad


def derive_w(data: MultMapData, samples) -> tuple:
    """w = v/u evaluated pointwise; returns (w, value set over the samples)."""

    def w(x):
        ux = data.u(x)
        if ux.is_zero():
            raise ZeroU(f"u vanishes at {x!r}")
        return data.v(x) / ux

    values = set()
    for x in samples:
        if not x.is_zero():
            values.add(w(x))
    return w, frozenset(values)


@dataclass
class PatchReport:
    inverse_exceptions: list
    product_exception_counts: dict
    splitting_exception_counts: dict
    totals: dict = field(default_factory=dict)

    def __post_init__(self):
        self.totals = {
            "inverse": len(self.inverse_exceptions),
            "product": sum(self.product_exception_counts.values()),
            "splitting": sum(self.splitting_exception_counts.values()),
        }

    @property
    def clean(self):
        return not any(self.totals.values())


def patchwise_exceptions(eta, group: str, samples, pair_samples) -> PatchReport:
    """Exact exception lists for the patchwise-homomorphism clauses.

    Clause 1 on the sample grid: points x with eta(x^-1) != eta(x)^-1, and
    per-x counts of sampled y with eta(x y) != eta(x) eta(y).  Clause 2 on
    the pair grid: for each (x, y), counts of sampled z where the split
    eta(x z^-1) eta(z y) misses eta(x y).  group selects (K^*, *) or (K, +).
    """
    if group == "multiplicative":
        op = lambda a, b: a * b
        inv = lambda a: a.inverse()
        bad_point = lambda a: a.is_zero()
    elif group == "additive":
        op = lambda a, b: a + b
        inv = lambda a: -a
        bad_point = lambda a: False
    else:
        raise ValueError(f"unknown group {group!r}")
    samples = [x for x in samples if not bad_point(x)]

    inverse_exceptions = [x for x in samples if eta(inv(x)) != inv(eta(x))]
    product_counts = {}
    for x in samples:
        bad = sum(1 for y in samples if eta(op(x, y)) != op(eta(x), eta(y)))
        if bad:
            product_counts[x] = bad
    splitting_counts = {}
    for (x, y) in pair_samples:
        if bad_point(x) or bad_point(y):
            continue
        target = eta(op(x, y))
        bad = 0
        for z in samples:
            if bad_point(op(x, inv(z))) or bad_point(op(z, y)):
                continue
            if op(eta(op(x, inv(z))), eta(op(z, y))) != target:
                bad += 1
        if bad:
            splitting_counts[(x, y)] = bad
    return PatchReport(inverse_exceptions, product_counts, splitting_counts)


def build_kappa(rho, w, samples, pairs) -> tuple:
    """kappa(0) = 0, kappa(x) = w(x) rho(x); returns (kappa, violation report)."""
    target_zero = None

    def kappa(x):
        nonlocal target_zero
        if x.is_zero():
            if target_zero is None:
                target_zero = rho(x.desc.one()).desc.zero()
            return target_zero
        return w(x) * rho(x)

    additive = [
        (x, y) for (x, y) in pairs if kappa(x + y) != kappa(x) + kappa(y)
    ]
    multiplicative = [
        (x, y) for (x, y) in pairs if kappa(x * y) != kappa(x) * kappa(y)
    ]
    images = {}
    collisions = []
    for x in samples:
        img = kappa(x)
        if img in images and images[img] != x:
            collisions.append((images[img], x))
        images[img] = x
    report = {
        "additive_violations": additive,
        "multiplicative_violations": multiplicative,
        "injectivity_collisions": collisions,
    }
    return kappa, report


def verify_uv_relations(data: MultMapData, samples) -> dict:
    """Exception lists for the correction-map relations:

      (a) w(1/x) = 1/w(x)
      (b) w(-x) = w(x)
      (c) w(1+x) u(x) = 1            (x != 0, -1)
      (d) v(-1-x) v(x) = 1           (x != 0, -1)

    For data genuinely arising from a field homomorphism these lists are
    finite and stable: enlarging the grid must not enlarge them.  Relation
    (d) pairs v at x with v at the reflection -1-x (so that the two shifted
    arguments 1+x and 1+(-1-x) = -x differ by the sign the map rho already
    absorbs); pairing v(1+x) with v(x) instead fails on a set of positive
    density already for the built-in parity example.
    """
    w, _ = derive_w(data, [x for x in samples if not x.is_zero()])
    one = data.source.one()
    minus_one = -one
    target_one = data.target.one()
    out = {"inverse_w": [], "minus_w": [], "shift_u": [], "shift_v": []}
    for x in samples:
        if x.is_zero():
            continue
        if w(x.inverse()) != w(x).inverse():
            out["inverse_w"].append(x)
        if w(-x) != w(x):
            out["minus_w"].append(x)
        if x != minus_one:
            if w(one + x) * data.u(x) != target_one:
                out["shift_u"].append(x)
            if data.v(minus_one - x) * data.v(x) != target_one:
                out["shift_v"].append(x)
    return out


# ---------------------------------------------------------------------------
# built-in examples and CSV-backed maps

def builtin_example(name: str, desc: FieldDescriptor) -> MultMapData:
    """Named example registry: `identity` and `q-parity-w`."""
    if name == "identity":
        return MultMapData(
            desc,
            desc,
            rho=lambda x: x,
            u=lambda x: desc.one(),
            v=lambda x: desc.one(),
            name=name,
        )
    if name == "q-parity-w":
        if desc.kind != "rational":
            raise ValueError("the parity example lives on Q")
        one = desc.one()

        def w0(x):
            num, den = x.payload.numerator, x.payload.denominator
            v2 = 0
            n = abs(num)
            while n % 2 == 0:
                n //= 2
                v2 += 1
            n = den
            while n % 2 == 0:
                n //= 2
                v2 -= 1
            return desc.from_int(-1) if v2 % 2 else one

        def rho(x):
            return w0(x) * x if not x.is_zero() else desc.zero()

        def u(x):
            if (one + x).is_zero():
                return one
            return w0(one + x)

        def v(x):
            if (one + x).is_zero():
                return one
            return w0(one + x) * w0(x)

        data = MultMapData(desc, desc, rho=rho, u=u, v=v, name=name)
        data.w_reference = w0
        return data
    raise KeyError(f"unknown example {name!r}")


def load_map_csv(source: FieldDescriptor, target: FieldDescriptor, path) -> dict:
    """Map table from CSV lines `x_repr, value_repr` (element literals)."""
    table = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            x_repr, _, v_repr = line.partition(",")
            table[parse_element(source, x_repr)] = parse_element(target, v_repr)
    return table


def table_map(table: dict):
    def f(x):
        try:
            return table[x]
        except KeyError:
            raise KeyError(f"map table has no entry for {x!r}") from None
    return f


# ---------------------------------------------------------------------------
# reduced models

@dataclass(frozen=True)
class ReducedModelSpec:
    """Weights m_j = p^(l_j) n_j with p not dividing n_j, decomposed uniquely."""

    p: int
    weights: tuple

    def __post_init__(self):
        if len(set(self.weights)) != len(self.weights):
            raise BadWeight("weights must be distinct")
        if any(m == 0 for m in self.weights):
            raise BadWeight("weights must be nonzero")

    def components(self):
        out = []
        for m in self.weights:
            l, n = 0, m
            while n % self.p == 0:
                n //= self.p
                l += 1
            if n % self.p == 0:
                raise BadWeight(f"reduced part of {m} divisible by {self.p}")
            out.append({"m": m, "l": l, "n": n, "dim": self.p**l})
        return out


class ReducedModel:
    """Phi = direct sum of coordinatewise p^(l_j)-th power maps.

    Component j realizes the weight-m_j space as the field K = GF(p)(t)
    viewed over its subfield K_j = {x^(p^(l_j))} with basis 1, t, ...,
    t^(p^(l_j) - 1); Phi_j sends coordinates (x_alpha) to
    sum_alpha x_alpha^(p^(l_j)) t^alpha.  Phi is additive, intertwines the
    a^(n_j)-action with the a^(m_j)-action, and is inverted via p-th roots.
    """

    def __init__(self, spec: ReducedModelSpec, desc: FieldDescriptor | None = None):
        self.spec = spec
        self.desc = desc if desc is not None else RatFunc(spec.p)
        if self.desc.kind != "ratfunc" or self.desc.p != spec.p:
            raise ValueError("reduced models are realized over GF(p)(t)")
        self.components = spec.components()
        self.t = t_element(self.desc)

    def zero_vector(self):
        return tuple(tuple(self.desc.zero() for _ in range(c["dim"])) for c in self.components)

    def phi(self, vec) -> tuple:
        out = []
        for comp, coords in zip(self.components, vec):
            acc = self.desc.zero()
            for alpha, x in enumerate(coords):
                acc = acc + x ** (self.spec.p ** comp["l"]) * self.t**alpha
            out.append(acc)
        return tuple(out)

    def phi_inv(self, images) -> tuple:
        out = []
        for comp, y in zip(self.components, images):
            out.append(self._component_inverse(comp, y))
        return tuple(out)

    def _component_inverse(self, comp, y):
        p, l, dim = self.spec.p, comp["l"], comp["dim"]
        if l == 0:
            return (y,)
        num, den = y.payload
        # y = sum_alpha [h_alpha(t^(p^l)) / den(t^(p^l))] t^alpha  with
        # h = num * den^(p^l - 1); split h by exponent residues mod p^l
        den_power = gfpoly.ONE
        for _ in range(p**l - 1):
            den_power = gfpoly.mul(den_power, den, p)
        h = gfpoly.mul(num, den_power, p)
        den_dilated = _dilate_poly(den, p**l)
        coords = []
        for alpha in range(dim):
            h_alpha = tuple(h[i] for i in range(alpha, len(h), dim))
            c_alpha = self.desc.element((_dilate_poly(gfpoly.trim(h_alpha), dim), den_dilated))
            x_alpha = c_alpha
            for _ in range(l):
                x_alpha = pth_root(x_alpha)
            coords.append(x_alpha)
        return tuple(coords)

    def act_model(self, a: FieldElement, vec) -> tuple:
        """The reduced action: a scales component j by a^(n_j)."""
        return tuple(
            tuple(a ** comp["n"] * x for x in coords)
            for comp, coords in zip(self.components, vec)
        )

    def act_original(self, a: FieldElement, images) -> tuple:
        """The original action: a scales component j by a^(m_j)."""
        return tuple(a ** comp["m"] * y for comp, y in zip(self.components, images))

    def verify(self, vectors, scalars) -> dict:
        """Exact additivity/equivariance/bijectivity on the given model
        vectors and nonzero scalars, plus a nonlinearity witness whenever
        some l_j > 0."""
        add_bad = equiv_bad = bij_bad = 0
        for i, vec in enumerate(vectors):
            other = vectors[(i + 1) % len(vectors)]
            lhs = self.phi(_vec_add(vec, other))
            rhs = tuple(a + b for a, b in zip(self.phi(vec), self.phi(other)))
            if lhs != rhs:
                add_bad += 1
            a = scalars[i % len(scalars)]
            if not a.is_zero():
                if self.phi(self.act_model(a, vec)) != self.act_original(a, self.phi(vec)):
                    equiv_bad += 1
            if self.phi_inv(self.phi(vec)) != vec:
                bij_bad += 1
        witness = self.nonlinearity_witness()
        return {
            "additivity_violations": add_bad,
            "equivariance_violations": equiv_bad,
            "bijectivity_violations": bij_bad,
            "nonlinearity_witness": witness,
        }

    def nonlinearity_witness(self):
        """A pair (component index, a, x) with Phi_j(a x) != a Phi_j(x), which
        exists exactly when l_j > 0 (the coordinate powers are not K-linear)."""
        for j, comp in enumerate(self.components):
            if comp["l"] == 0:
                continue
            vec = list(self.zero_vector())
            coords = [self.desc.zero()] * comp["dim"]
            coords[0] = self.desc.one()
            vec[j] = tuple(coords)
            vec = tuple(vec)
            a = self.t
            scaled = tuple(
                tuple(a * x for x in cs) if jj == j else cs for jj, cs in enumerate(vec)
            )
            if self.phi(scaled) != tuple(
                (a * y if jj == j else y) for jj, y in enumerate(self.phi(vec))
            ):
                return {"component": j, "a": a, "vector": vec}
        return None


def _vec_add(u, v):
    return tuple(tuple(a + b for a, b in zip(cu, cv)) for cu, cv in zip(u, v))


def _dilate_poly(f, factor):
    """f(t) -> f(t^factor) as a coefficient tuple."""
    if not f:
        return ()
    out = [0] * ((len(f) - 1) * factor + 1)
    for i, c in enumerate(f):
        out[i * factor] = c
    return tuple(out)


def reduced_model(spec: ReducedModelSpec, desc: FieldDescriptor | None = None) -> ReducedModel:
    return ReducedModel(spec, desc)
