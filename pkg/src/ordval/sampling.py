"""Seeded random generators for group elements, hull elements and series.

Supports have at most three indices, exponent denominators are at most 64
and series coefficients have numerators and denominators up to 2**10.
"""
from __future__ import annotations

import os
import random
from fractions import Fraction
from functools import lru_cache

from .groups import GroupDescriptor, HullElement, RationalSubgroup
from .numeric import QuadExt
from .series import Series

DEFAULT_SEED = 0x5EED
MAX_DEN = 64
COEFF_BOUND = 2 ** 10


def resolve_seed(seed=None) -> int:
    """Explicit seed, else ``ORDVAL_SEED`` from the environment, else the default."""
    if seed is not None:
        return int(seed)
    env = os.environ.get("ORDVAL_SEED")
    return int(env, 0) if env else DEFAULT_SEED


@lru_cache(maxsize=None)
def _dens(C: RationalSubgroup, limit: int):
    return tuple(C.denominators(limit))


def rand_in(C: RationalSubgroup, rng: random.Random, num_bound=8, den_bound=MAX_DEN) -> Fraction:
    den = rng.choice(_dens(C, den_bound))
    return Fraction(rng.randint(-num_bound * den, num_bound * den), den)


def _indices(G, rng, max_support):
    pool = G.indices(5)
    k = rng.randint(0, min(max_support, len(pool)))
    return rng.sample(pool, k)


def group_element(G: GroupDescriptor, rng, max_support=3) -> HullElement:
    return HullElement((i, rand_in(G.component(i), rng)) for i in _indices(G, rng, max_support))


def hull_element(G: GroupDescriptor, rng, max_support=3) -> HullElement:
    terms = []
    for i in _indices(G, rng, max_support):
        den = rng.randint(1, MAX_DEN)
        terms.append((i, Fraction(rng.randint(-8 * den, 8 * den), den)))
    return HullElement(terms)


def positive(sampler, G, rng) -> HullElement:
    while True:
        x = sampler(G, rng)
        if x.sign() > 0:
            return x
        if x.sign() < 0:
            return -x


def rational_coeff(rng, nonzero=False) -> Fraction:
    while True:
        c = Fraction(rng.randint(-COEFF_BOUND, COEFF_BOUND), rng.randint(1, COEFF_BOUND))
        if c or not nonzero:
            return c


def coefficient(field, rng, nonzero=False):
    d = field.d
    if d is None:
        return rational_coeff(rng, nonzero)
    while True:
        v = rational_coeff(rng) if rng.random() < 0.6 else Fraction(0)
        c = QuadExt(rational_coeff(rng), v, d)
        if c or not nonzero:
            return c


def series(field, G, rng, max_terms=3) -> Series:
    n = rng.randint(0, max_terms)
    return Series(field, G, [(group_element(G, rng), coefficient(field, rng, True)) for _ in range(n)])


def nonzero_series(field, G, rng, max_terms=3) -> Series:
    while True:
        x = series(field, G, rng, max_terms)
        if x:
            return x
