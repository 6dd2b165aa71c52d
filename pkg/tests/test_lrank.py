from itertools import combinations
from math import comb

import pytest

from gf2fourier.constructions import complete_uniform, random_degree_exactly, random_polynomial
from gf2fourier.errors import DomainError
from gf2fourier.gf2poly import (
    LinearMap,
    LinearSystem,
    degree,
    from_supports,
    one,
    restrict_var,
    substitute_linear,
    zero,
)
from gf2fourier.lrank import (
    binom_parity,
    degree_drops,
    gaussian_binomial2,
    linear_rank,
    linear_rank_search,
    rref_count,
    symlrank_formula,
)


def slow_linear_rank(p):
    """Try every set of independent forms directly on the polynomial."""
    n = p.n_vars
    forms = range(1, 1 << n)
    for r in range(1, n + 1):
        for chosen in combinations(forms, r):
            try:
                sys = LinearSystem.from_equations(n, list(chosen))
            except DomainError:
                continue
            if degree_drops(p, sys):
                return r
    return None


class TestDegreeDrops:
    def test_odd_degree_sum_constraint(self):
        sys = LinearSystem.from_supports(5, [[1, 2, 3, 4, 5]])
        assert degree_drops(complete_uniform(3, 5), sys)

    def test_single_variable_is_not_enough(self):
        assert not degree_drops(complete_uniform(2, 4), LinearSystem.from_supports(4, [[1]]))

    def test_explicit_pair(self):
        assert degree_drops(complete_uniform(2, 4), LinearSystem.from_supports(4, [[2], [3, 4]]))

    def test_zero_polynomial(self):
        with pytest.raises(DomainError):
            degree_drops(zero(3), LinearSystem.from_supports(3, [[1]]))

    def test_affine_shift_irrelevant(self, rng):
        for _ in range(80):
            n = int(rng.integers(2, 8))
            p = random_degree_exactly(int(rng.integers(1, n + 1)), n, int(rng.integers(0, 2**31)))
            r = int(rng.integers(1, n + 1))
            try:
                base = LinearSystem.from_equations(n, [int(f) for f in rng.integers(1, 1 << n, size=r)])
            except DomainError:
                continue
            outcomes = {
                degree_drops(p, LinearSystem(n, base.forms, tuple(b >> i & 1 for i in range(r))))
                for b in range(1 << r)
            }
            assert len(outcomes) == 1


@pytest.mark.parametrize("d,n,expected", [(3, 6, 1), (2, 6, 3), (4, 9, 3)])
def test_complete_examples(d, n, expected):
    res = linear_rank_search(complete_uniform(d, n))
    assert res.rank == expected
    assert len(res.witness) == expected
    assert degree_drops(complete_uniform(d, n), res.witness)


@pytest.mark.parametrize("d,n,expected", [(3, 100, 1), (2, 4, 2), (4, 9, 3)])
def test_formula_examples(d, n, expected):
    assert symlrank_formula(d, n) == expected


def test_formula_domain():
    with pytest.raises(DomainError):
        symlrank_formula(5, 4)


@pytest.mark.parametrize("n", range(1, 9))
def test_complete_table(n):
    for d in range(1, n + 1):
        assert linear_rank(complete_uniform(d, n)) == symlrank_formula(d, n)


def test_matches_slow_search(rng):
    for _ in range(40):
        n = int(rng.integers(1, 6))
        p = random_degree_exactly(int(rng.integers(1, n + 1)), n, int(rng.integers(0, 2**31)))
        assert linear_rank(p) == slow_linear_rank(p)


def test_witness_is_valid(rng):
    for _ in range(40):
        n = int(rng.integers(1, 8))
        p = random_degree_exactly(int(rng.integers(1, n + 1)), n, int(rng.integers(0, 2**31)))
        res = linear_rank_search(p)
        assert res.found and res.checked >= 1
        assert len(res.witness) == res.rank
        assert degree_drops(p, res.witness)


def test_invariant_under_linear_maps(rng):
    for _ in range(30):
        n = int(rng.integers(1, 8))
        p = random_degree_exactly(int(rng.integers(1, n + 1)), n, int(rng.integers(0, 2**31)))
        L = LinearMap.random(n, rng)
        assert linear_rank(substitute_linear(p, L)) == linear_rank(p)


def test_restriction_does_not_increase(rng):
    checked = 0
    while checked < 30:
        n = int(rng.integers(2, 8))
        p = random_degree_exactly(int(rng.integers(1, n)), n, int(rng.integers(0, 2**31)))
        q = restrict_var(p, int(rng.integers(0, n)), int(rng.integers(0, 2)))
        if degree(q) != degree(p):
            continue
        assert linear_rank(q) <= linear_rank(p)
        checked += 1


def test_not_found_below_true_rank():
    p = complete_uniform(2, 6)
    res = linear_rank_search(p, r_max=2)
    assert res.rank is None and res.witness is None and not res.found
    assert linear_rank(p, r_max=3) == 3


def test_constant_rejected():
    for p in (zero(3), one(3)):
        with pytest.raises(DomainError):
            linear_rank(p)
    with pytest.raises(DomainError):
        linear_rank(from_supports(3, [[1]]), r_max=4)


def test_random_polynomials_have_rank_one_at_degree_one():
    for seed in range(10):
        p = random_polynomial(5, seed, max_degree=1)
        if degree(p) == 1:
            assert linear_rank(p) == 1


class TestBinomials:
    @pytest.mark.parametrize("s,t,bit", [(7, 3, 1), (6, 3, 0), (0, 0, 1), (5, 0, 1)])
    def test_examples(self, s, t, bit):
        assert binom_parity(s, t) == bit

    def test_lucas_table(self):
        for s in range(41):
            for t in range(s + 1):
                assert binom_parity(s, t) == comb(s, t) % 2

    @pytest.mark.parametrize("d", [1, 2, 4, 8, 16])
    def test_power_of_two_family(self, d):
        assert all(binom_parity(j * d - 1, d - 1) == 1 for j in range(1, 9))

    def test_errors(self):
        with pytest.raises(DomainError):
            binom_parity(3, 4)

    def test_subspace_counts(self):
        assert gaussian_binomial2(4, 2) == 35
        for n in range(0, 9):
            for r in range(0, n + 1):
                assert rref_count(n, r) == gaussian_binomial2(n, r)
