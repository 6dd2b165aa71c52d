"""Multilinear polynomials over GF(2) in algebraic normal form.

A polynomial on ``n`` variables is stored as the sorted tuple of its monomial
supports.  Each support is an integer bitmask: bit ``i`` stands for the
variable ``x_{i+1}`` and the empty mask ``0`` is the constant monomial ``1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, check_capacity


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@lru_cache(maxsize=None)
def popcount_table(n_vars: int) -> np.ndarray:
    """Popcounts of every mask below ``2**n_vars`` (read-only array)."""
    table = np.zeros(1 << n_vars, dtype=np.int64)
    for i in range(n_vars):
        table[1 << i: 2 << i] = table[: 1 << i] + 1
    table.flags.writeable = False
    return table


def _toggle(acc: set, mask: int) -> None:
    if mask in acc:
        acc.remove(mask)
    else:
        acc.add(mask)


def _mul_sets(a: Iterable[int], b: Iterable[int]) -> set:
    b = list(b)
    out: set = set()
    for x in a:
        for y in b:
            _toggle(out, x | y)
    return out


@dataclass(frozen=True)
class Gf2Poly:
    n_vars: int
    monomials: tuple

    def __post_init__(self):
        if self.n_vars < 0:
            raise DomainError("n_vars must be nonnegative")
        check_capacity(self.n_vars)
        limit = 1 << self.n_vars
        for m in self.monomials:
            if m < 0 or m >= limit:
                raise DomainError(f"monomial mask {m} does not fit in {self.n_vars} variables")

    def __str__(self):
        from .polytext import format_poly
        return format_poly(self)

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return multiply(self, other)

    def __call__(self, x):
        return evaluate(self, x)

    def is_zero(self) -> bool:
        return not self.monomials

    @property
    def degree(self) -> int:
        return degree(self)


def make_poly(n_vars: int, monomials: Iterable[int]) -> Gf2Poly:
    """Build a polynomial, cancelling repeated monomials in pairs."""
    if n_vars < 0:
        raise DomainError("n_vars must be nonnegative")
    check_capacity(n_vars)
    limit = 1 << n_vars
    acc: set = set()
    for m in monomials:
        m = int(m)
        if m < 0 or m >= limit:
            raise DomainError(f"monomial mask {m} does not fit in {n_vars} variables")
        _toggle(acc, m)
    return Gf2Poly(n_vars, tuple(sorted(acc)))


def from_supports(n_vars: int, supports: Iterable[Iterable[int]]) -> Gf2Poly:
    """Build a polynomial from supports given as 1-based variable indices."""
    masks = []
    for support in supports:
        mask = 0
        for v in support:
            if not 1 <= v <= n_vars:
                raise DomainError(f"variable x{v} out of range 1..{n_vars}")
            mask |= 1 << (v - 1)
        masks.append(mask)
    return make_poly(n_vars, masks)


def zero(n_vars: int) -> Gf2Poly:
    return make_poly(n_vars, [])


def one(n_vars: int) -> Gf2Poly:
    return make_poly(n_vars, [0])


def variable(n_vars: int, i: int) -> Gf2Poly:
    """The polynomial ``x_{i+1}`` (``i`` is the 0-based bit index)."""
    return make_poly(n_vars, [1 << i])


def _point_mask(p: Gf2Poly, x) -> int:
    if isinstance(x, (int, np.integer)):
        x = int(x)
        if x < 0 or x >> p.n_vars:
            raise DomainError(f"point {x} is not a {p.n_vars}-bit mask")
        return x
    bits = list(x)
    if len(bits) != p.n_vars:
        raise DomainError(f"point has dimension {len(bits)}, expected {p.n_vars}")
    mask = 0
    for i, b in enumerate(bits):
        if b not in (0, 1, True, False):
            raise DomainError(f"coordinate {b!r} is not a bit")
        if b:
            mask |= 1 << i
    return mask


def evaluate(p: Gf2Poly, x) -> int:
    """Evaluate ``p`` at a point given as a bit sequence or a mask."""
    xm = _point_mask(p, x)
    value = 0
    for m in p.monomials:
        if m & xm == m:
            value ^= 1
    return value


def truth_table(p: Gf2Poly) -> np.ndarray:
    """Values of ``p`` at all ``2**n`` points, indexed by point mask."""
    n = p.n_vars
    table = np.zeros(1 << n, dtype=np.uint8)
    if p.monomials:
        table[np.fromiter(p.monomials, dtype=np.int64)] = 1
    for i in range(n):
        view = table.reshape(-1, 2, 1 << i)
        view[:, 1, :] ^= view[:, 0, :]
    return table


def anf_from_truth_table(table: np.ndarray) -> Gf2Poly:
    """Recover the ANF of a function from its truth table."""
    size = len(table)
    n = size.bit_length() - 1
    if size != 1 << n:
        raise DomainError("truth table length must be a power of two")
    coeffs = np.array(table, dtype=np.uint8) & 1
    for i in range(n):
        view = coeffs.reshape(-1, 2, 1 << i)
        view[:, 1, :] ^= view[:, 0, :]
    return Gf2Poly(n, tuple(int(m) for m in np.flatnonzero(coeffs)))


def _same_arity(p: Gf2Poly, q: Gf2Poly) -> None:
    if p.n_vars != q.n_vars:
        raise DomainError(f"variable counts differ: {p.n_vars} vs {q.n_vars}")


def add(p: Gf2Poly, q: Gf2Poly) -> Gf2Poly:
    _same_arity(p, q)
    return Gf2Poly(p.n_vars, tuple(sorted(set(p.monomials) ^ set(q.monomials))))


def multiply(p: Gf2Poly, q: Gf2Poly) -> Gf2Poly:
    """Multilinear product (``x_i**2 == x_i``), collected mod 2."""
    _same_arity(p, q)
    return Gf2Poly(p.n_vars, tuple(sorted(_mul_sets(p.monomials, q.monomials))))


def degree(p: Gf2Poly) -> int:
    """Largest monomial degree; 0 for both constants, including zero."""
    return max((popcount(m) for m in p.monomials), default=0)


def maxonomials(p: Gf2Poly) -> Gf2Poly:
    """Homogeneous top-degree part of a nonzero polynomial."""
    if p.is_zero():
        raise DomainError("the zero polynomial has no maxonomials")
    d = degree(p)
    return Gf2Poly(p.n_vars, tuple(m for m in p.monomials if popcount(m) == d))


def homogeneous_part(p: Gf2Poly, d: int) -> Gf2Poly:
    return Gf2Poly(p.n_vars, tuple(m for m in p.monomials if popcount(m) == d))


def equivalent_mod_lower(p: Gf2Poly, q: Gf2Poly, d: int) -> bool:
    """True when ``p`` and ``q`` have degree ``d`` and share their maxonomials."""
    return degree(p) == d and degree(q) == d and degree(add(p, q)) < d


def _compact(mask: int, keep: Sequence[int]) -> int:
    out = 0
    for j, i in enumerate(keep):
        if mask >> i & 1:
            out |= 1 << j
    return out


def restrict_var(p: Gf2Poly, i: int, b: int) -> Gf2Poly:
    """Set ``x_{i+1} := b`` and shift higher variables down by one."""
    if not 0 <= i < p.n_vars:
        raise DomainError(f"variable index {i} out of range for {p.n_vars} variables")
    if b not in (0, 1):
        raise DomainError("restriction value must be a bit")
    bit = 1 << i
    low = bit - 1
    acc: set = set()
    for m in p.monomials:
        if m & bit:
            if not b:
                continue
            m ^= bit
        _toggle(acc, (m & low) | ((m >> (i + 1)) << i))
    return Gf2Poly(p.n_vars - 1, tuple(sorted(acc)))


def _substitute(p: Gf2Poly, images: Sequence[frozenset], n_out: int) -> Gf2Poly:
    """Replace variable ``i`` by the polynomial whose monomials are ``images[i]``."""
    acc: set = set()
    for m in p.monomials:
        term = {0}
        rest = m
        while rest:
            low = rest & -rest
            term = _mul_sets(term, images[low.bit_length() - 1])
            rest ^= low
            if not term:
                break
        for t in term:
            _toggle(acc, t)
    return Gf2Poly(n_out, tuple(sorted(acc)))


def _gf2_rank(rows: Iterable[int]) -> int:
    basis: list = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
    return len(basis)


def parity(mask: int) -> int:
    return popcount(mask) & 1


@dataclass(frozen=True)
class LinearMap:
    """An invertible linear map on GF(2)^n; ``rows[i]`` is the mask of row ``i``.

    Applied to a point ``x``, coordinate ``i`` of the image is ``<rows[i], x>``.
    """

    rows: tuple

    def __post_init__(self):
        n = len(self.rows)
        check_capacity(n)
        for r in self.rows:
            if r < 0 or r >> n:
                raise DomainError(f"row mask {r} does not fit in {n} columns")
        if _gf2_rank(self.rows) != n:
            raise DomainError("linear map is not invertible over GF(2)")

    @property
    def n_vars(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(tuple(1 << i for i in range(n)))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "LinearMap":
        while True:
            rows = tuple(int(r) for r in rng.integers(0, 1 << n, size=n)) if n else ()
            if _gf2_rank(rows) == n:
                return cls(rows)

    def apply(self, x: int) -> int:
        out = 0
        for i, r in enumerate(self.rows):
            if parity(r & x):
                out |= 1 << i
        return out

    def transpose(self) -> "LinearMap":
        n = self.n_vars
        cols = []
        for j in range(n):
            c = 0
            for i, r in enumerate(self.rows):
                if r >> j & 1:
                    c |= 1 << i
            cols.append(c)
        return LinearMap(tuple(cols))

    def inverse(self) -> "LinearMap":
        n = self.n_vars
        # Gauss-Jordan on [A | I]; augmented row is (row, identity row)
        aug = [(r, 1 << i) for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next(k for k in range(col, n) if aug[k][0] >> col & 1)
            aug[col], aug[piv] = aug[piv], aug[col]
            pr, pi = aug[col]
            for k in range(n):
                if k != col and aug[k][0] >> col & 1:
                    aug[k] = (aug[k][0] ^ pr, aug[k][1] ^ pi)
        return LinearMap(tuple(inv for _, inv in aug))

    def compose(self, other: "LinearMap") -> "LinearMap":
        """The map ``x -> self(other(x))``."""
        ot = other.transpose()
        rows = []
        for r in self.rows:
            row = 0
            for j, c in enumerate(ot.rows):
                if parity(r & c):
                    row |= 1 << j
            rows.append(row)
        return LinearMap(tuple(rows))


def substitute_linear(p: Gf2Poly, L: LinearMap) -> Gf2Poly:
    """The polynomial ``x -> p(L x)``."""
    if L.n_vars != p.n_vars:
        raise DomainError(f"map acts on {L.n_vars} variables, polynomial has {p.n_vars}")
    images = []
    for r in L.rows:
        images.append(frozenset(1 << j for j in range(p.n_vars) if r >> j & 1))
    return _substitute(p, images, p.n_vars)


@dataclass(frozen=True)
class LinearSystem:
    """Independent affine constraints ``<forms[i], x> = affine_bits[i]``.

    Forms are kept in reduced row echelon form: the pivot of each form is
    its lowest set bit, pivots increase down the list, and no pivot column
    appears in any other form.  Build instances with :meth:`from_equations`.
    """

    n_vars: int
    forms: tuple
    affine_bits: tuple

    def __post_init__(self):
        if len(self.forms) != len(self.affine_bits):
            raise DomainError("forms and affine bits differ in length")
        if len(self.forms) > self.n_vars:
            raise DomainError("more constraints than variables")
        pivots = [f & -f for f in self.forms]
        for k, f in enumerate(self.forms):
            if f <= 0 or f >> self.n_vars:
                raise DomainError(f"form {f} is not a nonzero {self.n_vars}-bit mask")
            if k and pivots[k] <= pivots[k - 1]:
                raise DomainError("forms are not in echelon order")
            for j, g in enumerate(self.forms):
                if j != k and g & pivots[k]:
                    raise DomainError("forms are not reduced")
        for b in self.affine_bits:
            if b not in (0, 1):
                raise DomainError("affine bits must be 0 or 1")

    @classmethod
    def from_equations(cls, n_vars: int, forms: Sequence[int], bits: Sequence[int] | None = None) -> "LinearSystem":
        """Row-reduce a list of equations; dependent or inconsistent input is rejected."""
        if bits is None:
            bits = [0] * len(forms)
        if len(bits) != len(forms):
            raise DomainError("forms and affine bits differ in length")
        rows: list = []
        for f, b in zip(forms, bits):
            f = int(f)
            if f < 0 or f >> n_vars:
                raise DomainError(f"form {f} does not fit in {n_vars} variables")
            for rf, rb in rows:
                if f & (rf & -rf):
                    f ^= rf
                    b ^= rb
            if not f:
                raise DomainError("linear forms are dependent" + (" and inconsistent" if b else ""))
            piv = f & -f
            rows = [(rf ^ f, rb ^ b) if rf & piv else (rf, rb) for rf, rb in rows]
            rows.append((f, b))
        rows.sort(key=lambda fb: fb[0] & -fb[0])
        return cls(n_vars, tuple(f for f, _ in rows), tuple(int(b) for _, b in rows))

    @classmethod
    def from_supports(cls, n_vars: int, supports: Sequence[Iterable[int]], bits: Sequence[int] | None = None) -> "LinearSystem":
        """Like :meth:`from_equations` with forms given as 1-based variable lists."""
        forms = [sum(1 << (v - 1) for v in s) for s in supports]
        return cls.from_equations(n_vars, forms, bits)

    def __len__(self):
        return len(self.forms)

    @property
    def rank(self) -> int:
        return len(self.forms)

    @property
    def pivots(self) -> tuple:
        return tuple((f & -f).bit_length() - 1 for f in self.forms)

    @property
    def free_vars(self) -> tuple:
        piv = set(self.pivots)
        return tuple(i for i in range(self.n_vars) if i not in piv)

    def homogeneous(self) -> "LinearSystem":
        return LinearSystem(self.n_vars, self.forms, (0,) * len(self.forms))

    def satisfied_by(self, x: int) -> bool:
        return all(parity(f & x) == b for f, b in zip(self.forms, self.affine_bits))

    def solutions(self) -> list:
        """All solution points in increasing order of their free coordinates."""
        free = self.free_vars
        out = []
        for y in range(1 << len(free)):
            x = 0
            for j, i in enumerate(free):
                if y >> j & 1:
                    x |= 1 << i
            for f, b, p in zip(self.forms, self.affine_bits, self.pivots):
                if parity(f & x) != b:
                    x |= 1 << p
            out.append(x)
        return out

    def to_lists(self) -> list:
        """Forms as sorted 1-based variable lists."""
        return [[i + 1 for i in range(self.n_vars) if f >> i & 1] for f in self.forms]


def restrict_affine(p: Gf2Poly, sys: LinearSystem) -> Gf2Poly:
    """Restrict ``p`` to the solutions of ``sys``.

    Each pivot variable is replaced by the affine expression in the free
    variables that its constraint forces; free variables are then renumbered
    in increasing order.
    """
    if sys.n_vars != p.n_vars:
        raise DomainError(f"system has {sys.n_vars} variables, polynomial has {p.n_vars}")
    free = sys.free_vars
    position = {i: j for j, i in enumerate(free)}
    images: list = [None] * p.n_vars
    for i in free:
        images[i] = frozenset([1 << position[i]])
    for f, b, piv in zip(sys.forms, sys.affine_bits, sys.pivots):
        expr = {1 << position[i] for i in free if f >> i & 1}
        if b:
            expr.add(0)
        images[piv] = frozenset(expr)
    return _substitute(p, images, len(free))
