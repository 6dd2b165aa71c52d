from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import strategies as st

from gf2fourier.gf2poly import evaluate, make_poly


def naive_spectrum(p):
    """Direct definition: 2^-n sum_x f^±(x) (-1)^<a,x>, as Fractions."""
    n = p.n_vars
    values = [1 - 2 * evaluate(p, x) for x in range(1 << n)]
    out = []
    for a in range(1 << n):
        total = sum(v if bin(a & x).count("1") % 2 == 0 else -v for x, v in enumerate(values))
        out.append(Fraction(total, 1 << n))
    return out


def brute_k_covers(family, target, k):
    return sum(1 for combo in combinations(sorted(set(family)), k) if _union(combo) == target)


def literal_weights(p):
    """A(T) by summing (-2)^|M| over every index set M of monomials."""
    mons = list(p.monomials)
    acc = {}
    for mask in range(1 << len(mons)):
        union = 0
        for i, s in enumerate(mons):
            if mask >> i & 1:
                union |= s
        acc[union] = acc.get(union, 0) + (-2) ** bin(mask).count("1")
    return acc


def _union(sets):
    u = 0
    for s in sets:
        u |= s
    return u


@st.composite
def polys(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    mons = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=3 * n))
    return make_poly(n, mons)


@pytest.fixture
def rng():
    import numpy as np
    return np.random.default_rng(20240101)
