"""Triple-transitive PGL2 constructions over exact fields.

Q(A) is the set of projective transformations sending the three base
points [1:0], [0:1], [1:1] to (images of) ordered triples of distinct
elements of a finite set A on the affine line.  Since the action on
distinct triples is free and transitive, |Q(A)| = |A| (|A|-1) (|A|-2)
exactly, Q intertwines translations with shifts of A, and the unipotent
lower-triangular generators act through the Moebius map
phi_b(x) = x / (1 + b x).  These identities, the inversion-section count,
and the induced Folner-type ratios are all computed with exact set
arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotInverseClosed, TooSmall
from .fields import FieldDescriptor, FieldElement


class ProjPoint:
    """A point of the projective line, normalized to [x : 1] or [1 : 0]."""

    __slots__ = ("finite", "x")

    def __init__(self, a: FieldElement, b: FieldElement):
        if b.is_zero():
            if a.is_zero():
                raise ValueError("[0 : 0] is not a projective point")
            self.finite = False
            self.x = None
        else:
            self.finite = True
            self.x = a / b

    @staticmethod
    def affine(x: FieldElement) -> "ProjPoint":
        return ProjPoint(x, x.desc.one())

    @staticmethod
    def infinity(desc: FieldDescriptor) -> "ProjPoint":
        return ProjPoint(desc.one(), desc.zero())

    def __eq__(self, other):
        return (
            isinstance(other, ProjPoint)
            and self.finite == other.finite
            and self.x == other.x
        )

    def __hash__(self):
        return hash(("projpoint", self.finite, self.x))

    def __repr__(self):
        return f"[{self.x!r} : 1]" if self.finite else "[1 : 0]"


class Pgl2Element:
    """A 2x2 matrix class modulo scalars, normalized so that the first
    nonzero entry (row-major) is 1; equality and hashing are exact."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        det = a * d - b * c
        if det.is_zero():
            raise ValueError("singular matrix")
        for pivot in (a, b, c, d):
            if not pivot.is_zero():
                inv = pivot.inverse()
                break
        self.a, self.b, self.c, self.d = a * inv, b * inv, c * inv, d * inv

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other: "Pgl2Element") -> "Pgl2Element":
        return Pgl2Element(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "Pgl2Element":
        return Pgl2Element(self.d, -self.b, -self.c, self.a)

    def act(self, pt: ProjPoint) -> ProjPoint:
        if pt.finite:
            return ProjPoint(self.a * pt.x + self.b, self.c * pt.x + self.d)
        return ProjPoint(self.a, self.c)

    def __eq__(self, other):
        return isinstance(other, Pgl2Element) and self.entries() == other.entries()

    def __hash__(self):
        return hash(("pgl2", self.entries()))

    def __repr__(self):
        return f"Pgl2[{self.a!r} {self.b!r}; {self.c!r} {self.d!r}]"


def base_points(desc: FieldDescriptor):
    one, zero = desc.one(), desc.zero()
    return (ProjPoint(one, zero), ProjPoint(zero, one), ProjPoint(one, one))


def u_plus(b: FieldElement) -> Pgl2Element:
    one, zero = b.desc.one(), b.desc.zero()
    return Pgl2Element(one, b, zero, one)


def u_minus(b: FieldElement) -> Pgl2Element:
    one, zero = b.desc.one(), b.desc.zero()
    return Pgl2Element(one, zero, b, one)


def phi_b(b: FieldElement, x: FieldElement) -> FieldElement:
    """The Moebius action of the lower unipotent: x -> x / (1 + b x)."""
    return x / (b.desc.one() + b * x)


def element_from_triple(x1, x2, x3) -> Pgl2Element:
    """The unique class sending the base points to [x1:1], [x2:1], [x3:1]."""
    return Pgl2Element(
        x1 * (x3 - x2),
        x2 * (x1 - x3),
        x3 - x2,
        x1 - x3,
    )


def q_set(A) -> set:
    """All classes sending the base triple into ordered distinct triples of A;
    the free transitive action makes |Q(A)| = |A| (|A|-1) (|A|-2) exactly."""
    A = list(dict.fromkeys(A))
    n = len(A)
    if n < 3:
        raise TooSmall("Q(A) needs |A| >= 3")
    out = set()
    for x1 in A:
        for x2 in A:
            if x2 == x1:
                continue
            for x3 in A:
                if x3 == x1 or x3 == x2:
                    continue
                out.add(element_from_triple(x1, x2, x3))
    if len(out) != n * (n - 1) * (n - 2):
        raise AssertionError("free-transitive count violated")
    return out


def q_count(n: int) -> int:
    return n * (n - 1) * (n - 2)


def translate_identity_check(A, b: FieldElement) -> bool:
    """u_plus(b) Q(A) = Q(A + b) exactly, and
    u_minus(b) Q(A) contains Q(phi_b(A minus the pole))."""
    A = list(dict.fromkeys(A))
    desc = b.desc
    qa = q_set(A)
    up = u_plus(b)
    left = {up * g for g in qa}
    right = q_set([x + b for x in A])
    if left != right:
        return False
    if b.is_zero():
        return True
    um = u_minus(b)
    pole = -b.inverse()
    image = [phi_b(b, x) for x in A if x != pole]
    if len(image) >= 3:
        lower = {um * g for g in qa}
        if not q_set(image) <= lower:
            return False
    return True


def symmetrized(F) -> list:
    """(F minus 0) united with its inverses: the inverse-closed point set the
    induced-Folner construction consumes."""
    out = []
    for x in F:
        if not x.is_zero():
            out.append(x)
            out.append(x.inverse())
    return list(dict.fromkeys(out))


def inversion_section_check(A, b: FieldElement) -> dict:
    """|A ∩ phi_b(A minus pole)| = |(A minus 0) ∩ (A + b)| for A = A^(-1).

    Both sides are computed independently (forward image vs. shifted
    intersection) and compared.
    """
    A = list(dict.fromkeys(A))
    if any(x.is_zero() for x in A):
        raise NotInverseClosed("0 cannot lie in an inverse-closed subset of K^*")
    aset = set(A)
    if {x.inverse() for x in A} != aset:
        raise NotInverseClosed("A is not closed under inversion")
    if b.is_zero():
        raise ValueError("b must be nonzero")
    pole = -b.inverse()
    lhs_set = aset & {phi_b(b, x) for x in A if x != pole}
    rhs_set = aset & {x + b for x in A}
    rhs_set = {x for x in rhs_set if not x.is_zero()}
    return {"lhs": len(lhs_set), "rhs": len(rhs_set), "equal": len(lhs_set) == len(rhs_set)}


def pgl2_folner_ratio(A, b: FieldElement, gen: str = "plus", materialize: bool = False) -> dict:
    """|Q(A) ∩ u(b) Q(A)| / |Q(A)| as an exact rational.

    For the upper generator the intersection is Q(A ∩ (A+b)) and the count
    formula applies directly.  For the lower generator the proof's lower
    bound is |Q(A ∩ phi_b(A minus pole))|; the true intersection is counted
    through the triple characterization (classes whose triple lies in A and
    maps back into A under phi_(-b)) and both numbers are reported.  With
    materialize=True the sets are also built explicitly and cross-checked.
    """
    A = list(dict.fromkeys(A))
    n = len(A)
    if n < 3:
        raise TooSmall("Q(A) needs |A| >= 3")
    aset = set(A)
    desc = b.desc
    if gen == "plus":
        m = len(aset & {x + b for x in A})
        ratio = Fraction(q_count(m), q_count(n)) if m >= 3 else Fraction(0)
        out = {"ratio": ratio, "intersection_size": m}
        if materialize:
            qa = q_set(A)
            up = u_plus(b)
            true_inter = qa & {up * g for g in qa}
            assert len(true_inter) == q_count(m) if m >= 3 else not true_inter
            out["materialized"] = len(true_inter)
        return out
    if gen != "minus":
        raise ValueError("gen must be 'plus' or 'minus'")
    if b.is_zero():
        raise ValueError("b must be nonzero")
    pole = -b.inverse()
    bound_set = aset & {phi_b(b, x) for x in A if x != pole}
    inv_pole = b.inverse()
    true_set = {y for y in A if y != inv_pole and phi_b(-b, y) in aset}
    m_bound, m_true = len(bound_set), len(true_set)
    ratio_bound = Fraction(q_count(m_bound), q_count(n)) if m_bound >= 3 else Fraction(0)
    ratio_true = Fraction(q_count(m_true), q_count(n)) if m_true >= 3 else Fraction(0)
    out = {
        "ratio": ratio_bound,
        "true_ratio": ratio_true,
        "intersection_size": m_bound,
        "true_intersection_size": m_true,
    }
    if materialize:
        qa = q_set(A)
        um = u_minus(b)
        true_inter = qa & {um * g for g in qa}
        assert len(true_inter) == (q_count(m_true) if m_true >= 3 else 0)
        out["materialized"] = len(true_inter)
    return out
