"""Linear rank of GF(2) polynomials and binomial parity utilities.

``linear_rank`` searches codimension-``r`` subspaces for increasing ``r``.
Only homogeneous systems are tried: whether a restriction lowers the degree
does not depend on the affine shift, and it is decided by the maxonomials
alone.  Subspaces are enumerated once each through their reduced row echelon
forms, batched per pivot set, and each candidate is checked by restricting
the exact truth table of the top-degree part and reading off the degree of
the restricted ANF.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import DomainError
from .gf2poly import (
    Gf2Poly,
    LinearSystem,
    degree,
    maxonomials,
    popcount_table,
    restrict_affine,
    truth_table,
)

# cells (systems x points) handled per numpy batch
_BATCH_CELLS = 1 << 21


def degree_drops(p: Gf2Poly, sys: LinearSystem) -> bool:
    """True iff restricting to the homogeneous version of ``sys`` lowers the degree."""
    if p.is_zero():
        raise DomainError("degree_drops is undefined for the zero polynomial")
    if len(sys) == 0:
        raise DomainError("the system must contain at least one constraint")
    return degree(restrict_affine(p, sys.homogeneous())) < degree(p)


def symlrank_formula(d: int, n: int) -> int:
    """Closed-form linear rank of the complete ``d``-uniform polynomial on ``n`` variables."""
    if not 1 <= d <= n:
        raise DomainError(f"need 1 <= d <= n, got d={d}, n={n}")
    if d % 2:
        return 1
    return n // 2 - d // 2 + 1


def binom_parity(s: int, t: int) -> int:
    """``C(s, t) mod 2``: odd exactly when adding ``t`` and ``s - t`` has no carries."""
    if t < 0 or s < 0:
        raise DomainError("arguments must be nonnegative")
    if t > s:
        raise DomainError(f"t={t} exceeds s={s}")
    return int(t & (s - t) == 0)


def gaussian_binomial2(n: int, r: int) -> int:
    """Number of ``r``-dimensional subspaces of GF(2)^n."""
    if not 0 <= r <= n:
        return 0
    num = den = 1
    for i in range(r):
        num *= (1 << (n - i)) - 1
        den *= (1 << (i + 1)) - 1
    return num // den


def rref_count(n: int, r: int) -> int:
    """Count RREF matrices directly; equals :func:`gaussian_binomial2`."""
    total = 0
    for pivots in combinations(range(n), r):
        free = sum(sum(1 for j in range(p + 1, n) if j not in pivots) for p in pivots)
        total += 1 << free
    return total


@dataclass(frozen=True)
class LrankResult:
    """Outcome of a bounded linear-rank search; ``rank is None`` means not found."""

    rank: int | None
    witness: LinearSystem | None
    checked: int  # candidate systems examined

    @property
    def found(self) -> bool:
        return self.rank is not None


def _mobius_rows(values: np.ndarray, k: int) -> np.ndarray:
    for i in range(k):
        view = values.reshape(values.shape[0], -1, 2, 1 << i)
        view[:, :, 1, :] ^= view[:, :, 0, :]
    return values


def _search_pivot_set(table: np.ndarray, n: int, d: int, pivots: tuple):
    """First RREF system with these pivots whose restriction has degree < d.

    Returns ``(system or None, number of candidates examined)``.
    """
    r = len(pivots)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    k = n - r
    # free entries: (row, column) with column a non-pivot to the right of the row pivot
    entries = [(i, j) for i, p in enumerate(pivots) for j in free if j > p]
    n_entries = len(entries)
    n_points = 1 << k
    high = popcount_table(k) >= d
    if not high.any():
        # fewer than d free variables: every restriction has degree < d
        return _system_from_assignment(n, pivots, entries, 0), 1
    chunk = max(1, _BATCH_CELLS // n_points)
    total = 1 << n_entries
    for start in range(0, total, chunk):
        assign = np.arange(start, min(total, start + chunk), dtype=np.int64)
        # basis vector of the solution space for each free column
        basis = np.zeros((len(assign), k), dtype=np.int64)
        for c, j in enumerate(free):
            basis[:, c] = 1 << j
        for e, (i, j) in enumerate(entries):
            c = free.index(j)
            basis[:, c] |= ((assign >> e) & 1) << pivots[i]
        points = np.zeros((len(assign), n_points), dtype=np.int64)
        for c in range(k):
            half = 1 << c
            points[:, half: 2 * half] = points[:, :half] ^ basis[:, c: c + 1]
        values = table[points]
        _mobius_rows(values, k)
        drops = ~values[:, high].any(axis=1)
        hit = np.flatnonzero(drops)
        if hit.size:
            return _system_from_assignment(n, pivots, entries, int(assign[hit[0]])), start + int(hit[0]) + 1
    return None, total


def _system_from_assignment(n: int, pivots: tuple, entries: list, assignment: int) -> LinearSystem:
    forms = [1 << p for p in pivots]
    for e, (i, j) in enumerate(entries):
        if assignment >> e & 1:
            forms[i] |= 1 << j
    return LinearSystem(n, tuple(forms), (0,) * len(forms))


def linear_rank_search(p: Gf2Poly, r_max: int | None = None) -> LrankResult:
    """Smallest codimension of a homogeneous system lowering ``deg(p)``, with a witness.

    Candidates at each codimension are visited in a fixed order: pivot sets in
    lexicographic order, then free entries as a binary counter.  The witness
    is the first success in that order.
    """
    if p.is_zero() or degree(p) == 0:
        raise DomainError("linear rank is undefined for constant polynomials")
    n = p.n_vars
    if r_max is None:
        r_max = n
    if not 0 <= r_max <= n:
        raise DomainError(f"r_max must lie in 0..{n}")
    top = maxonomials(p)
    d = degree(top)
    table = truth_table(top)
    checked = 0
    for r in range(1, r_max + 1):
        for pivots in combinations(range(n), r):
            found, examined = _search_pivot_set(table, n, d, pivots)
            checked += examined
            if found is not None:
                return LrankResult(r, found, checked)
    return LrankResult(None, None, checked)


def linear_rank(p: Gf2Poly, r_max: int | None = None):
    """Linear rank of ``p``, or ``None`` if it exceeds ``r_max``."""
    return linear_rank_search(p, r_max).rank
