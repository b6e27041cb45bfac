"""Deterministic sample-grid generators used by the verification pipelines."""

from __future__ import annotations

import random
from fractions import Fraction

from .fields import FieldDescriptor, FieldElement, RATFUNC


def rational_samples(height: int, count: int, seed: int, avoid=(0,)) -> list:
    """Random rationals of height <= height (numerator and denominator bound),
    avoiding the listed values; reproducible for a fixed seed."""
    rng = random.Random(seed)
    avoid = {Fraction(a) for a in avoid}
    out = []
    seen = set()
    while len(out) < count:
        x = Fraction(rng.randint(-height, height), rng.randint(1, height))
        if x in avoid or x in seen:
            continue
        seen.add(x)
        out.append(x)
    return out


def rational_elements(desc: FieldDescriptor, height: int, count: int, seed: int, avoid=(0,)) -> list:
    return [FieldElement(desc, x) for x in rational_samples(height, count, seed, avoid)]


def ratfunc_elements(desc: FieldDescriptor, count: int, seed: int, max_deg: int = 3, nonzero: bool = True) -> list:
    """Random rational functions over GF(p)(t) with numerator/denominator
    degree <= max_deg; reproducible for a fixed seed."""
    if desc.kind != RATFUNC:
        raise ValueError("ratfunc sampler requires GF(p)(t)")
    rng = random.Random(seed)
    p = desc.p
    out = []
    while len(out) < count:
        num = tuple(rng.randrange(p) for _ in range(rng.randint(1, max_deg + 1)))
        den = tuple(rng.randrange(p) for _ in range(rng.randint(0, max_deg))) + (1,)
        x = desc.element((num, den))
        if nonzero and x.is_zero():
            continue
        out.append(x)
    return out


def sample_pairs(samples: list, count: int, seed: int) -> list:
    """Deterministic pairs drawn from a sample list."""
    rng = random.Random(seed)
    return [(rng.choice(samples), rng.choice(samples)) for _ in range(count)]
