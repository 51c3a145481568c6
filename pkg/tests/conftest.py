"""Shared helpers: variable shorthands, frozen small-case ground truth,
and a seeded random polynomial generator for property tests.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from disclab.polyring import (
    LAMBDA_VAR,
    MultiPoly,
    VarId,
    X_VAR,
    a_var,
    b_var,
)

A1, A2, A3, A4 = (MultiPoly.var(a_var(i)) for i in range(1, 5))
X = MultiPoly.var(X_VAR)
LAM = MultiPoly.var(LAMBDA_VAR)
B1 = MultiPoly.var(b_var(1))


def frozen_R2() -> MultiPoly:
    """Hand cofactor expansion of the 3x3 Sylvester matrix of x^2+a1 x+a2."""
    return 4 * A2 - A1 ** 2


def frozen_R3() -> MultiPoly:
    """Brute-force 5x5 expansion for the cubic family, frozen term for term."""
    return (
        4 * A1 ** 3 * A3
        - A1 ** 2 * A2 ** 2
        - 18 * A1 * A2 * A3
        + 4 * A2 ** 3
        + 27 * A3 ** 2
    )


_VAR_POOL = (a_var(1), a_var(2), a_var(3), X_VAR)


def rand_poly(rng: random.Random, max_vars: int = 4, max_deg: int = 4,
              max_terms: int = 5, lo: int = -9, hi: int = 9) -> MultiPoly:
    """Random sparse polynomial with small integer coefficients."""
    nvars = rng.randint(1, max_vars)
    vs = rng.sample(_VAR_POOL, nvars)
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        exps = {}
        budget = rng.randint(0, max_deg)
        for v in vs:
            if budget <= 0:
                break
            e = rng.randint(0, budget)
            if e:
                exps[v] = e
                budget -= e
        c = rng.randint(lo, hi)
        if c:
            terms.append((exps, c))
    return MultiPoly.from_terms(terms)


def rand_nonzero_poly(rng: random.Random, **kw) -> MultiPoly:
    while True:
        f = rand_poly(rng, **kw)
        if f:
            return f


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260810)
