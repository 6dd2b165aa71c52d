"""Exact Fourier spectra of GF(2) polynomials.

Two independent routes produce the spectrum of ``f^± = 1 - 2f``:

* :func:`spectrum_wht` runs a Walsh-Hadamard butterfly over the truth table.
* :func:`spectrum_covers` goes through the cover weights
  ``w_f(T) = sum over index sets M with union T of (-2)^|M| / 2^|T|`` and the
  signed superset sum ``f^±^(S) = (-1)^|S| sum_{T ⊇ S} w_f(T)``.

Spectra hold integer numerators over a common power-of-two denominator, so
every value is an exact dyadic rational; no floating point is involved.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .dyadic import Dyadic
from .errors import DomainError, check_capacity
from .gf2poly import Gf2Poly, LinearMap, popcount, popcount_table, truth_table

_POW2 = np.array([1 << i for i in range(63)], dtype=np.int64)


def _trailing_zeros(values: np.ndarray) -> np.ndarray:
    """Two-adic valuation of each nonzero entry (entries must be nonzero)."""
    low = values & -values
    return np.searchsorted(_POW2, np.abs(low))


def _tz_int(x: int) -> int:
    return (x & -x).bit_length() - 1


class Spectrum:
    """Table of ``2**n`` Fourier coefficients ``numerators[S] / 2**scale``."""

    __slots__ = ("n_vars", "numerators", "scale")

    def __init__(self, n_vars: int, numerators, scale: int):
        arr = np.array(numerators, dtype=np.int64)
        if arr.shape != (1 << n_vars,):
            raise DomainError(f"expected {1 << n_vars} coefficients, got shape {arr.shape}")
        arr.flags.writeable = False
        self.n_vars = n_vars
        self.numerators = arr
        self.scale = scale

    @classmethod
    def from_dyadics(cls, n_vars: int, values: Sequence[Dyadic]) -> "Spectrum":
        scale = max((v.exponent for v in values if v), default=0)
        scale = max(scale, 0)
        return cls(n_vars, [v.numerator << (scale - v.exponent) if v else 0 for v in values], scale)

    def __len__(self):
        return 1 << self.n_vars

    def __getitem__(self, mask: int) -> Dyadic:
        return self.coefficient(mask)

    def coefficient(self, mask: int) -> Dyadic:
        return Dyadic(int(self.numerators[mask]), self.scale)

    def coefficients(self) -> list:
        return [Dyadic(int(v), self.scale) for v in self.numerators]

    def support(self) -> np.ndarray:
        return np.flatnonzero(self.numerators)

    def reduced(self) -> "Spectrum":
        """Same values over the smallest common power-of-two denominator."""
        acc = int(np.bitwise_or.reduce(self.numerators)) if len(self.numerators) else 0
        if acc == 0:
            return Spectrum(self.n_vars, self.numerators, 0)
        t = _tz_int(acc)
        return Spectrum(self.n_vars, self.numerators >> t, self.scale - t)

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        if self.n_vars != other.n_vars:
            return False
        a, b = self.reduced(), other.reduced()
        return a.scale == b.scale and np.array_equal(a.numerators, b.numerators)

    def __hash__(self):
        r = self.reduced()
        return hash((r.n_vars, r.scale, r.numerators.tobytes()))

    def __repr__(self):
        nz = self.support()
        items = ", ".join(f"{int(s)}: {self.coefficient(int(s))}" for s in nz[:8])
        more = ", ..." if len(nz) > 8 else ""
        return f"Spectrum(n_vars={self.n_vars}, {{{items}{more}}})"

    def granularities(self) -> np.ndarray:
        """Granularity per coefficient, ``-1`` marking zero coefficients."""
        out = np.full(len(self.numerators), -1, dtype=np.int64)
        nz = self.numerators != 0
        out[nz] = self.scale - _trailing_zeros(self.numerators[nz])
        return out

    def parseval_sum(self) -> Dyadic:
        total = sum(int(v) * int(v) for v in self.numerators[self.numerators != 0])
        return Dyadic(total, 2 * self.scale)

    def to_json_dict(self) -> dict:
        """Masks (decimal strings, ascending) to coefficient strings."""
        return {str(s): str(self.coefficient(s)) for s in range(len(self.numerators))}


def spectrum_from_json(n_vars: int, data: dict) -> Spectrum:
    from .dyadic import parse_dyadic
    values = [Dyadic()] * (1 << n_vars)
    for key, text in data.items():
        values[int(key)] = parse_dyadic(text)
    return Spectrum.from_dyadics(n_vars, values)


def _walsh_hadamard(values: np.ndarray, n: int) -> np.ndarray:
    a = values.copy()
    for i in range(n):
        view = a.reshape(-1, 2, 1 << i)
        u = view[:, 0, :].copy()
        v = view[:, 1, :]
        view[:, 0, :] += v
        view[:, 1, :] = u - v
    return a


def spectrum_wht(p: Gf2Poly) -> Spectrum:
    """Spectrum of ``f^±`` by the fast Walsh-Hadamard transform."""
    check_capacity(p.n_vars)
    pm = 1 - 2 * truth_table(p).astype(np.int64)
    return Spectrum(p.n_vars, _walsh_hadamard(pm, p.n_vars), p.n_vars)


class CoverTable:
    """``A(T) = sum over index sets M with union T of (-2)^|M|``.

    The weight is ``w_f(T) = A(T) / 2^|T|``; ``|A(T)| <= 2^|T|`` always holds,
    so 64-bit integers are exact up to the 24-variable cap.
    """

    __slots__ = ("n_vars", "acc")

    def __init__(self, n_vars: int, acc):
        arr = np.array(acc, dtype=np.int64)
        arr.flags.writeable = False
        self.n_vars = n_vars
        self.acc = arr

    def __getitem__(self, mask: int) -> int:
        return int(self.acc[mask])

    def __eq__(self, other):
        if not isinstance(other, CoverTable):
            return NotImplemented
        return self.n_vars == other.n_vars and np.array_equal(self.acc, other.acc)

    def weight(self, mask: int) -> Dyadic:
        return Dyadic(int(self.acc[mask]), popcount(mask))

    def nonzero(self) -> dict:
        return {int(t): int(self.acc[t]) for t in np.flatnonzero(self.acc)}


def _cover_table_zeta(p: Gf2Poly) -> np.ndarray:
    # Under the subset-sum transform, union products become pointwise:
    # zeta(prod_i (1 - 2 e_{S_i}))(T) = (-1)^{#{i : S_i ⊆ T}}.
    n = p.n_vars
    counts = np.zeros(1 << n, dtype=np.int64)
    if p.monomials:
        counts[np.fromiter(p.monomials, dtype=np.int64)] = 1
    for i in range(n):
        view = counts.reshape(-1, 2, 1 << i)
        view[:, 1, :] += view[:, 0, :]
    acc = 1 - 2 * (counts & 1)
    for i in range(n):
        view = acc.reshape(-1, 2, 1 << i)
        view[:, 1, :] -= view[:, 0, :]
    return acc


def _cover_table_dp(p: Gf2Poly) -> np.ndarray:
    # one monomial at a time: A'(T | S) += -2 A(T)
    n = p.n_vars
    idx = np.arange(1 << n, dtype=np.int64)
    acc = np.zeros(1 << n, dtype=np.int64)
    acc[0] = 1
    for s in p.monomials:
        nxt = acc.copy()
        np.add.at(nxt, idx | s, -2 * acc)
        acc = nxt
    return acc


def cover_table(p: Gf2Poly, method: str = "zeta") -> CoverTable:
    """Cover accumulators of the monomial supports of ``p``.

    ``method="dp"`` folds in one monomial at a time (``O(m 2^n)``);
    ``method="zeta"`` uses subset-sum and Moebius transforms (``O(n 2^n)``).
    """
    check_capacity(p.n_vars)
    if method == "zeta":
        acc = _cover_table_zeta(p)
    elif method == "dp":
        acc = _cover_table_dp(p)
    else:
        raise DomainError(f"unknown cover table method {method!r}")
    return CoverTable(p.n_vars, acc)


def spectrum_from_cover_table(table: CoverTable) -> Spectrum:
    n = table.n_vars
    pc = popcount_table(n)
    # w_f(T) * 2^n = A(T) * 2^(n - |T|); superset sums stay below 2^(2n)
    scaled = np.left_shift(table.acc, n - pc)
    for i in range(n):
        view = scaled.reshape(-1, 2, 1 << i)
        view[:, 0, :] += view[:, 1, :]
    scaled = np.where(pc & 1, -scaled, scaled)
    return Spectrum(n, scaled, n)


def spectrum_covers(p: Gf2Poly, method: str = "zeta") -> Spectrum:
    """Spectrum of ``f^±`` from the cover weights of its monomials."""
    return spectrum_from_cover_table(cover_table(p, method))


def count_k_covers(family: Iterable[int], target: int, k: int) -> int:
    """Number of ``k``-element subfamilies whose union is exactly ``target``."""
    sets = sorted({int(s) for s in family if int(s) & ~target == 0}, key=popcount, reverse=True)
    if k < 0:
        raise DomainError("k must be nonnegative")
    m = len(sets)
    if k > m:
        return 0
    need = popcount(target)
    suffix_union = [0] * (m + 1)
    suffix_size = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix_union[i] = suffix_union[i + 1] | sets[i]
        suffix_size[i] = max(suffix_size[i + 1], popcount(sets[i]))

    @lru_cache(maxsize=None)
    def rec(i: int, left: int, union: int) -> int:
        if left == 0:
            return 1 if union == target else 0
        if m - i < left or union | suffix_union[i] != target:
            return 0
        if need - popcount(union) > left * suffix_size[i]:
            return 0
        return rec(i + 1, left - 1, union | sets[i]) + rec(i + 1, left, union)

    result = rec(0, k, 0)
    rec.cache_clear()
    return result


def sparsity(s: Spectrum) -> int:
    """Number of nonzero coefficients of the ±1-valued function."""
    return int(np.count_nonzero(s.numerators))


def sparsity_01(s: Spectrum) -> int:
    """Exact sparsity of the 0/1-valued ``f = (1 - f^±) / 2``."""
    # f^(a) = (delta_{a,0} - f^±^(a)) / 2
    one = 1 << s.scale
    count = int(np.count_nonzero(s.numerators[1:]))
    if int(s.numerators[0]) != one:
        count += 1
    return count


def granularity(s: Spectrum) -> int:
    """Largest granularity over the nonzero coefficients; 0 if all vanish."""
    acc = int(np.bitwise_or.reduce(s.numerators))
    if acc == 0:
        return 0
    g = s.scale - _tz_int(acc)
    if g < 0:
        raise DomainError(f"coefficients are not ±1-function coefficients (granularity {g})")
    return g


def restricted_spectrum(s: Spectrum, form: int, affine_bit: int) -> Spectrum:
    """Spectrum of the restriction to ``<form, x> = affine_bit``.

    Coefficients pair up as ``f^(a) + (-1)^b f^(a + form)``.  The representative
    of each pair has a zero at the lowest set bit ``u`` of ``form``; dropping
    coordinate ``u`` gives the index on ``n - 1`` variables, matching the
    variable order produced by :func:`gf2fourier.gf2poly.restrict_affine`.
    """
    n = s.n_vars
    if form <= 0 or form >> n:
        raise DomainError(f"form {form} is not a nonzero {n}-bit mask")
    if affine_bit not in (0, 1):
        raise DomainError("affine bit must be 0 or 1")
    u = (form & -form).bit_length() - 1
    idx = np.arange(1 << n, dtype=np.int64)
    reps = idx[(idx >> u) & 1 == 0]
    partner = s.numerators[reps ^ form]
    values = s.numerators[reps] + (-partner if affine_bit else partner)
    return Spectrum(n - 1, values, s.scale)


def _apply_map_vectorized(L: LinearMap, masks: np.ndarray) -> np.ndarray:
    pc = popcount_table(L.n_vars)
    out = np.zeros_like(masks)
    for i, row in enumerate(L.rows):
        out |= (pc[masks & row] & 1) << i
    return out


def linear_map_spectrum(s: Spectrum, L: LinearMap) -> Spectrum:
    """Spectrum of ``f ∘ L`` read off from that of ``f``: ``α -> (L^T)^-1 α``."""
    if L.n_vars != s.n_vars:
        raise DomainError("map and spectrum dimensions differ")
    M = L.transpose().inverse()
    idx = np.arange(1 << s.n_vars, dtype=np.int64)
    return Spectrum(s.n_vars, s.numerators[_apply_map_vectorized(M, idx)], s.scale)


def xor_convolution(a: Spectrum, b: Spectrum) -> Spectrum:
    """Spectrum of the product of two functions: ``sum_β a(β) b(α + β)``.

    For ±1 functions this is the spectrum of ``(f ⊕ g)^±``.  Runs in
    ``O(4^n)``; limited to 12 variables to stay inside 64-bit integers.
    """
    if a.n_vars != b.n_vars:
        raise DomainError("spectra have different dimensions")
    n = a.n_vars
    if n > 12:
        raise DomainError("explicit convolution is limited to 12 variables")
    ra, rb = a.reduced(), b.reduced()
    idx = np.arange(1 << n, dtype=np.int64)
    acc = np.zeros(1 << n, dtype=np.int64)
    for beta in np.flatnonzero(ra.numerators):
        acc += int(ra.numerators[beta]) * rb.numerators[idx ^ beta]
    return Spectrum(n, acc, ra.scale + rb.scale)
