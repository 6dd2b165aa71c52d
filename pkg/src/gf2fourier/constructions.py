"""Polynomial families: complete uniform, disjoint blocks, grid lines, random parts."""
from __future__ import annotations

from fractions import Fraction
from math import comb

import numpy as np

from .errors import DomainError, check_capacity
from .gf2poly import Gf2Poly, LinearSystem, add, make_poly, popcount_table

_MASK64 = (1 << 64) - 1


def _splitmix64(x: np.ndarray) -> np.ndarray:
    """SplitMix64 output function applied elementwise (wrapping uint64)."""
    x = x + np.uint64(0x9E3779B97F4A7C15)
    x = (x ^ (x >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    x = (x ^ (x >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return x ^ (x >> np.uint64(31))


def uniform_draws(seed: int, counters: np.ndarray, stream: int = 0) -> np.ndarray:
    """53-bit uniform integers, one per counter, keyed by ``(seed, stream)``."""
    key = _splitmix64(np.array([(seed ^ (stream << 56)) & _MASK64], dtype=np.uint64))[0]
    with np.errstate(over="ignore"):
        u = _splitmix64(np.asarray(counters, dtype=np.uint64) + key)
    return (u >> np.uint64(11)).astype(np.int64)


def _threshold(density) -> int:
    q = Fraction(density)
    if not 0 <= q <= 1:
        raise DomainError(f"density {density} is outside [0, 1]")
    return (q.numerator << 53) // q.denominator


def _masks_with_degree(n: int, lo: int, hi: int) -> np.ndarray:
    pc = popcount_table(n)
    return np.flatnonzero((pc >= lo) & (pc <= hi)).astype(np.int64)


def complete_uniform(d: int, n: int) -> Gf2Poly:
    """Sum of all ``C(n, d)`` monomials of degree ``d``."""
    if not 0 <= d <= n:
        raise DomainError(f"need 0 <= d <= n, got d={d}, n={n}")
    check_capacity(n)
    return Gf2Poly(n, tuple(int(m) for m in _masks_with_degree(n, d, d)))


def cdn_restrictions(d: int, n: int) -> LinearSystem:
    """Explicit optimal degree-lowering constraints for the complete ``d``-uniform polynomial, ``d`` even.

    Even ``n``: ``x_d, x_{d+1}+x_{d+2}, ..., x_{n-1}+x_n``.
    Odd ``n``: ``x_d+x_{d+1}, x_{d+2}+x_{d+3}, ..., x_{n-1}+x_n``.
    """
    if d % 2 or d < 2:
        raise DomainError(f"d={d} must be even and at least 2; odd d uses odd_degree_restriction")
    if d > n:
        raise DomainError(f"d={d} exceeds n={n}")

    def var(i):  # 1-based index to mask
        return 1 << (i - 1)

    if (n - d) % 2 == 0:
        forms = [var(d)] + [var(i) | var(i + 1) for i in range(d + 1, n, 2)]
    else:
        forms = [var(i) | var(i + 1) for i in range(d, n, 2)]
    return LinearSystem(n, tuple(forms), (0,) * len(forms))


def odd_degree_restriction(n: int) -> LinearSystem:
    """The single constraint ``x_1 + ... + x_n = 0``."""
    return LinearSystem(n, ((1 << n) - 1,), (0,))


def disjoint_maxonomials(d: int, n: int) -> Gf2Poly:
    """Generalized inner product ``x_1...x_d + x_{d+1}...x_{2d} + ...``."""
    if d < 1 or n % d:
        raise DomainError(f"d={d} must divide n={n}")
    block = (1 << d) - 1
    return make_poly(n, [block << (d * j) for j in range(n // d)])


gip = disjoint_maxonomials


def _is_odd_prime(d: int) -> bool:
    if d < 3 or d % 2 == 0:
        return False
    return all(d % q for q in range(3, int(d ** 0.5) + 1, 2))


def _check_grid(d: int, n: int) -> None:
    if not _is_odd_prime(d):
        raise DomainError(f"d={d} must be an odd prime")
    if n <= 0 or n % (d * d):
        raise DomainError(f"d^2={d * d} must divide n={n}")


def grid_line_supports(d: int, n: int) -> list:
    """Supports of the lines ``v = a c + b`` (mod d) in every ``d x d`` pile.

    Variable ``(pile, column c, row v)`` is bit ``pile*d^2 + c*d + v``.  Pile
    order is outermost, then slope ``a``, then intercept ``b``.
    """
    _check_grid(d, n)
    supports = []
    for pile in range(n // (d * d)):
        base = pile * d * d
        for a in range(d):
            for b in range(d):
                mask = 0
                for c in range(d):
                    mask |= 1 << (base + c * d + (a * c + b) % d)
                supports.append(mask)
    return supports


def grid_lines(d: int, n: int) -> Gf2Poly:
    check_capacity(n)
    return make_poly(n, grid_line_supports(d, n))


def grid_first_columns(d: int, n: int) -> LinearSystem:
    """Set column 0 of every pile to zero; kills every line."""
    _check_grid(d, n)
    forms = []
    for pile in range(n // (d * d)):
        forms.extend(1 << (pile * d * d + v) for v in range(d))
    forms.sort()
    return LinearSystem(n, tuple(forms), (0,) * len(forms))


def random_lower_part(d: int, n: int, density=Fraction(1, 2), seed: int = 0) -> Gf2Poly:
    """Random polynomial of degree at most ``d - 1``.

    Every monomial of degree below ``d`` (the constant included) is kept
    independently with probability ``density``.  The draw for a monomial
    depends only on ``seed`` and its mask, never on iteration order.
    """
    if d < 1:
        raise DomainError("d must be at least 1")
    check_capacity(n)
    threshold = _threshold(density)
    masks = _masks_with_degree(n, 0, min(d - 1, n))
    keep = uniform_draws(seed, masks, stream=1) < threshold
    return Gf2Poly(n, tuple(int(m) for m in masks[keep]))


def full_lower_part(d: int, n: int) -> Gf2Poly:
    """Every monomial of degree below ``d``."""
    return random_lower_part(d, n, 1, 0)


def random_polynomial(n: int, seed: int, max_degree: int | None = None, density=Fraction(1, 2)) -> Gf2Poly:
    """Random polynomial whose monomials all have degree ``<= max_degree``."""
    if max_degree is None:
        max_degree = n
    return random_lower_part(max_degree + 1, n, density, seed)


def random_top_part(d: int, n: int, seed: int, density=Fraction(1, 2)) -> Gf2Poly:
    """Random nonempty set of degree-``d`` monomials."""
    if not 1 <= d <= n:
        raise DomainError(f"need 1 <= d <= n, got d={d}, n={n}")
    masks = _masks_with_degree(n, d, d)
    draws = uniform_draws(seed, masks, stream=2)
    keep = draws < _threshold(density)
    if not keep.any():
        keep[int(np.argmin(draws))] = True
    return Gf2Poly(n, tuple(int(m) for m in masks[keep]))


def random_degree_exactly(d: int, n: int, seed: int) -> Gf2Poly:
    """Random top part of degree ``d`` plus a random lower part."""
    return add(random_top_part(d, n, seed), random_lower_part(d, n, Fraction(1, 2), seed))


def count_monomials_below(d: int, n: int) -> int:
    return sum(comb(n, i) for i in range(min(d, n + 1)))


CONSTRUCTIONS = ("complete", "disjoint", "gip", "grid")


def construct(name: str, d: int, n: int) -> Gf2Poly:
    """Look up a family by its command-line name."""
    if name == "complete":
        return complete_uniform(d, n)
    if name in ("disjoint", "gip"):
        return disjoint_maxonomials(d, n)
    if name == "grid":
        return grid_lines(d, n)
    raise DomainError(f"unknown construction {name!r}; expected one of {', '.join(CONSTRUCTIONS)}")
