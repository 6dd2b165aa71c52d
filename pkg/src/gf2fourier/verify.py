"""Replay suites: each check produces a :class:`Report`.

Every suite is deterministic in its parameters and seed.  Random trials use
seed ``seed + t`` for trial ``t``; suites over "arbitrary lower-degree parts"
always start with the two extremes (no lower part, every lower monomial).
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any

import numpy as np

from . import constructions as cons
from .errors import DomainError
from .fourier import (
    count_k_covers,
    cover_table,
    granularity,
    linear_map_spectrum,
    restricted_spectrum,
    sparsity,
    sparsity_01,
    spectrum_covers,
    spectrum_wht,
    xor_convolution,
)
from .dyadic import granularity_of
from .gf2poly import (
    Gf2Poly,
    LinearMap,
    LinearSystem,
    add,
    degree,
    make_poly,
    restrict_affine,
    restrict_var,
    substitute_linear,
)
from .lrank import binom_parity, degree_drops, linear_rank, symlrank_formula

RELATIONS = {
    "==": lambda obs, exp: obs == exp,
    ">=": lambda obs, exp: obs >= exp,
    "<=": lambda obs, exp: obs <= exp,
}


@dataclass
class Report:
    claim_id: str
    params: dict
    relation: str
    expected: Any
    observed: Any
    passed: bool = field(init=False)
    runtime_ms: float = 0.0

    def __post_init__(self):
        self.passed = bool(RELATIONS[self.relation](self.observed, self.expected))

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "claim_id": self.claim_id,
            "params": self.params,
            "relation": self.relation,
            "expected": self.expected,
            "observed": self.observed,
            "pass": self.passed,
        }
        if timings:
            out["runtime_ms"] = round(self.runtime_ms, 3)
        return out


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = (time.perf_counter() - self.start) * 1000.0


def _report(claim, params, relation, expected, observed, timer=None) -> Report:
    r = Report(claim, dict(params), relation, expected, observed)
    if timer is not None:
        r.runtime_ms = timer.ms
    return r


def lower_parts(d: int, n: int, trials: int, seed: int, density=Fraction(1, 2)):
    """The zero and full lower parts, then ``trials`` random ones."""
    yield 0, "zero", cons.random_lower_part(d, n, 0, seed)
    yield 1, "full", cons.full_lower_part(d, n)
    for t in range(2, trials + 2):
        yield t, "random", cons.random_lower_part(d, n, density, seed + t)


def _log2_floor(s: int) -> int:
    return s.bit_length() - 1


# -- linear rank -----------------------------------------------------------

def verify_symlrank(n_max: int = 8) -> list:
    """Brute-force linear rank of every complete uniform polynomial against the closed form."""
    if n_max > 10:
        raise DomainError("n_max above 10 is beyond brute-force reach")
    reports = []
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            with _Timer() as tm:
                observed = linear_rank(cons.complete_uniform(d, n))
            reports.append(_report("symlrank", {"d": d, "n": n}, "==", symlrank_formula(d, n), observed, tm))
    return reports


def verify_cdn_restrictions(n_max: int = 12) -> list:
    """The explicit constraints lower the degree and have the optimal size."""
    reports = []
    for n in range(2, n_max + 1):
        for d in range(2, n + 1, 2):
            with _Timer() as tm:
                sys = cons.cdn_restrictions(d, n)
                drops = degree_drops(cons.complete_uniform(d, n), sys)
            params = {"d": d, "n": n}
            reports.append(_report("cdn_restrictions.drops", params, "==", True, drops, tm))
            reports.append(_report("cdn_restrictions.size", params, "==", n // 2 - d // 2 + 1, len(sys)))
    return reports


# -- sparsity lower bounds -------------------------------------------------

def verify_complete_sparsity(d: int, n: int, trials: int = 50, seed: int = 0) -> list:
    """Complete ``d``-uniform maxonomials (``d`` a power of two) force large sparsity."""
    if d < 2 or d & (d - 1):
        raise DomainError(f"d={d} must be a power of two, at least 2")
    if not d <= n <= 14:
        raise DomainError(f"need d <= n <= 14, got d={d}, n={n}")
    k = n // d
    n_red = k * d
    top = cons.complete_uniform(d, n)
    reports = []
    for t, kind, lower in lower_parts(d, n, trials, seed):
        f = add(top, lower)
        params = {"d": d, "n": n, "trial": t, "lower": kind, "seed": seed + t if kind == "random" else None}
        with _Timer() as tm:
            spar = sparsity_01(spectrum_wht(f))
        reports.append(_report("complete_sparsity.spar", params, ">=", 2 ** n_red - 1, spar, tm))

        g = f
        for i in range(n - 1, n_red - 1, -1):
            g = restrict_var(g, i, 0)
        with _Timer() as tm:
            grans = spectrum_wht(g).granularities()
        observed = {"nonzero": int(np.count_nonzero(grans >= 0)), "min_gran": int(grans.min()), "max_gran": int(grans.max())}
        expected = {"nonzero": 2 ** n_red, "min_gran": n_red - k, "max_gran": n_red - k}
        reports.append(_report("complete_sparsity.restricted_gran", params, "==", expected, observed, tm))

        with _Timer() as tm:
            w_full = cover_table(g).weight((1 << n_red) - 1)
        reports.append(_report("complete_sparsity.weight_gran", params, "==", n_red - k, granularity_of(w_full), tm))

        with _Timer() as tm:
            n_k = count_k_covers(g.monomials, (1 << n_red) - 1, k)
        reports.append(_report("complete_sparsity.min_cover_parity", params, "==", 1, n_k % 2, tm))
    return reports


def verify_disjoint_sparsity(d: int, n: int, trials: int = 20, seed: int = 0) -> list:
    """Pairwise disjoint maxonomials force sparsity ``2^n - 1``."""
    if d < 2 or n % d:
        raise DomainError(f"d={d} must be at least 2 and divide n={n}")
    if n > 14:
        raise DomainError("n above 14 is beyond the spectral check")
    top = cons.disjoint_maxonomials(d, n)
    full = (1 << n) - 1
    reports = []
    for t, kind, lower in lower_parts(d, n, trials, seed):
        f = add(top, lower)
        params = {"d": d, "n": n, "trial": t, "lower": kind, "seed": seed + t if kind == "random" else None}
        with _Timer() as tm:
            s = spectrum_wht(f)
            spar = sparsity_01(s)
        reports.append(_report("disjoint_sparsity.spar", params, ">=", 2 ** n - 1, spar, tm))
        reports.append(_report("disjoint_sparsity.spar_pm", params, "==", 2 ** n, sparsity(s)))
        reports.append(_report("disjoint_sparsity.gran_full", params, "==", n - n // d, granularity_of(s[full])))
    return reports


def verify_grid_sparsity(d: int, n: int, trials: int = 10, seed: int = 0) -> list:
    """Grid-line maxonomials: partition count and, where feasible, spectra."""
    supports = cons.grid_line_supports(d, n)
    full = (1 << n) - 1
    params = {"d": d, "n": n}
    with _Timer() as tm:
        parts = count_k_covers(supports, full, n // d)
    reports = [_report("grid.partitions", params, "==", d ** (n // (d * d)), parts, tm)]
    if n > 14:
        return reports
    top = cons.grid_lines(d, n)
    with _Timer() as tm:
        drops = degree_drops(top, cons.grid_first_columns(d, n))
    reports.append(_report("grid.lrank_upper", {**params, "constraints": n // d}, "==", True, drops, tm))
    for t, kind, lower in lower_parts(d, n, trials, seed):
        f = add(top, lower)
        tparams = {**params, "trial": t, "lower": kind, "seed": seed + t if kind == "random" else None}
        with _Timer() as tm:
            s = spectrum_wht(f)
            spar = sparsity_01(s)
        reports.append(_report("grid.spar", tparams, ">=", 2 ** n - 1, spar, tm))
        reports.append(_report("grid.gran_full", tparams, "==", n - n // d, granularity_of(s[full])))
    return reports


# -- granularity -----------------------------------------------------------

def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def verify_granularity_bound(d: int, n: int, trials: int = 100, seed: int = 0) -> list:
    """Degree-``d`` polynomials have ``gran(f^±) <= n - ceil(n/d)``; GIP is tight."""
    if not 1 <= d <= n <= 14:
        raise DomainError(f"need 1 <= d <= n <= 14, got d={d}, n={n}")
    bound = n - _ceil_div(n, d)
    params = {"d": d, "n": n, "trials": trials, "seed": seed}
    worst = worst01 = -1
    with _Timer() as tm:
        for t in range(trials):
            f = cons.random_degree_exactly(d, n, seed + t)
            s = spectrum_wht(f)
            worst = max(worst, granularity(s))
            worst01 = max(worst01, granularity_01(s))
    reports = [
        _report("granularity.bound_pm", params, "<=", bound, worst, tm),
        _report("granularity.bound_01", params, "<=", bound + 1, worst01),
    ]
    if n % d == 0:
        g = granularity(spectrum_wht(cons.disjoint_maxonomials(d, n)))
        reports.append(_report("granularity.gip_tight", {"d": d, "n": n}, "==", n - n // d, g))
    return reports


def granularity_01(s) -> int:
    """Granularity of the 0/1-valued function from the ±1 spectrum."""
    nums = s.numerators.copy()
    nums[0] = (1 << s.scale) - nums[0]
    nums[1:] = -nums[1:]
    acc = int(np.bitwise_or.reduce(nums))
    if acc == 0:
        return 0
    return s.scale + 1 - ((acc & -acc).bit_length() - 1)


# -- preliminaries ---------------------------------------------------------

def _random_form(n: int, rng: np.random.Generator) -> int:
    return int(rng.integers(1, 1 << n))


def _shift_poly(p: Gf2Poly, n: int, offset: int) -> Gf2Poly:
    return make_poly(n, [m << offset for m in p.monomials])


def verify_preliminaries(n: int = 8, trials: int = 200, seed: int = 0) -> list:
    """Range switch, restrictions, sparsity/granularity sandwich, XOR, linear maps."""
    if not 2 <= n <= 12:
        raise DomainError("n must lie in 2..12")
    reports = []
    for t in range(trials):
        rng = np.random.default_rng([seed, t, n])
        params = {"n": n, "trial": t, "seed": seed + t}
        f = cons.random_polynomial(n, seed + t, max_degree=1 + t % n)
        with _Timer() as tm:
            sf = spectrum_wht(f)
        spar_pm = sparsity(sf)
        gran_f = granularity(sf)

        reports.append(_report("prelim.parseval", params, "==", "1", str(sf.parseval_sum()), tm))
        reports.append(_report("prelim.range_switch", params, "<=", 1, abs(sparsity_01(sf) - spar_pm)))

        form = _random_form(n, rng)
        b = int(rng.integers(0, 2))
        sys = LinearSystem.from_equations(n, [form], [b])
        restricted = spectrum_wht(restrict_affine(f, sys))
        paired = restricted_spectrum(sf, form, b)
        rparams = {**params, "form": form, "bit": b}
        reports.append(_report("prelim.restriction_pairing", rparams, "==", True, paired == restricted))
        reports.append(_report("prelim.restriction_sparsity", rparams, "<=", spar_pm, sparsity(restricted)))

        if spar_pm >= 2:
            # characters (sparsity 1) sit outside both inequalities
            reports.append(_report("prelim.sandwich_lower", params, "<=", spar_pm, 2 ** (gran_f + 1)))
            reports.append(_report("prelim.sandwich_upper", params, "<=", 4 ** gran_f, spar_pm))
            reports.append(_report("prelim.gap_lemma", params, "<=", _log2_floor(spar_pm) - 1, gran_f))

        if t % 2:
            half = n // 2
            g = _shift_poly(cons.random_polynomial(n - half, seed + t, density=Fraction(1, 3)), n, half)
            f_x = make_poly(n, [m for m in f.monomials if m < (1 << half)])
            layout = "disjoint"
        else:
            g = cons.random_polynomial(n, seed + t + 7919, max_degree=1 + (t // 2) % n)
            f_x = f
            layout = "shared"
        sfx = spectrum_wht(f_x)
        sg = spectrum_wht(g)
        h_conv = xor_convolution(sfx, sg)
        h_wht = spectrum_wht(add(f_x, g))
        gf, gg = granularity(sfx), granularity(sg)
        xparams = {**params, "layout": layout}
        reports.append(_report("prelim.xor_convolution", xparams, "==", True, h_conv == h_wht))
        gh = granularity(h_wht)
        reports.append(_report("prelim.xor_gran_lower", xparams, "<=", gh, abs(gf - gg)))
        reports.append(_report("prelim.xor_gran_upper", xparams, "<=", gf + gg, gh))

        L = LinearMap.random(n, rng)
        fl = substitute_linear(f, L)
        sfl = spectrum_wht(fl)
        reports.append(_report("prelim.linear_degree", params, "==", degree(f), degree(fl)))
        reports.append(_report("prelim.linear_spectrum", params, "==", True, sfl == linear_map_spectrum(sf, L)))
        reports.append(_report("prelim.linear_invariants", params, "==",
                               [sparsity_01(sf), spar_pm, gran_f], [sparsity_01(sfl), sparsity(sfl), granularity(sfl)]))
    return reports


# -- oracle equivalence and parity ----------------------------------------

def verify_oracle_equivalence(n_values=range(4, 13), count: int = 1000, seed: int = 0, exhaustive_max: int = 3) -> list:
    """Cover-weight spectra equal Walsh-Hadamard spectra, coefficient by coefficient."""
    reports = []
    for n in range(1, exhaustive_max + 1):
        with _Timer() as tm:
            mismatches = 0
            for anf in range(1 << (1 << n)):
                p = make_poly(n, [m for m in range(1 << n) if anf >> m & 1])
                mismatches += spectrum_covers(p) != spectrum_wht(p)
        reports.append(_report("oracle.exhaustive", {"n": n, "functions": 1 << (1 << n)}, "==", 0, mismatches, tm))
    for n in n_values:
        with _Timer() as tm:
            mismatches = 0
            for t in range(count):
                # vary both degree cap and density so sparse and dense inputs appear
                density = Fraction(1 + t % 4, 8) if t % 5 else Fraction(1, 2)
                p = cons.random_polynomial(n, seed + t, max_degree=t % (n + 1), density=density)
                mismatches += spectrum_covers(p) != spectrum_wht(p)
        reports.append(_report("oracle.random", {"n": n, "count": count, "seed": seed}, "==", 0, mismatches, tm))
    return reports


def verify_parity(s_max: int = 40) -> list:
    """Carry-free parity of binomials, and the power-of-two family used for covers."""
    with _Timer() as tm:
        bad = [(s, t) for s in range(s_max + 1) for t in range(s + 1) if binom_parity(s, t) != comb(s, t) % 2]
    reports = [_report("parity.lucas", {"s_max": s_max}, "==", [], bad, tm)]
    for d in (2, 4, 8, 16):
        observed = [binom_parity(j * d - 1, d - 1) for j in range(1, 9)]
        reports.append(_report("parity.power_of_two", {"d": d, "j_max": 8}, "==", [1] * 8, observed))
    return reports


# -- suite runner ----------------------------------------------------------

DEFAULT_TRIALS = 50
SUITES = ("symlrank", "restrictions", "complete", "disjoint", "grid", "granularity", "preliminaries", "oracle", "parity")


def run_suite(name: str, *, seed: int = 0, trials: int | None = None, n_max: int | None = None,
              d: int | None = None, n: int | None = None) -> list:
    """Run a named suite; ``d``/``n`` select one instance instead of the default sweep."""
    if name == "all":
        out = []
        for suite in SUITES:
            out.extend(run_suite(suite, seed=seed, trials=trials, n_max=n_max))
        return out
    if name == "symlrank":
        return verify_symlrank(8 if n_max is None else n_max)
    if name == "restrictions":
        return verify_cdn_restrictions(12 if n_max is None else n_max)
    if name == "complete":
        cases = [(d, n)] if d and n else [(dd, nn) for dd in (2, 4) for nn in (6, 8, 10)]
        return [r for dd, nn in cases for r in verify_complete_sparsity(dd, nn, _trials(trials, 50), seed)]
    if name == "disjoint":
        cases = [(d, n)] if d and n else [(2, 6), (2, 8), (3, 9), (4, 4)]
        return [r for dd, nn in cases for r in verify_disjoint_sparsity(dd, nn, _trials(trials, 20), seed)]
    if name == "grid":
        cases = [(d, n)] if d and n else [(3, 9), (3, 18), (5, 25)]
        return [r for dd, nn in cases for r in verify_grid_sparsity(dd, nn, _trials(trials, 10), seed)]
    if name == "granularity":
        top = 12 if n_max is None else n_max
        cases = [(d, n)] if d and n else [(dd, nn) for nn in range(1, top + 1) for dd in range(1, nn + 1)]
        return [r for dd, nn in cases for r in verify_granularity_bound(dd, nn, _trials(trials, 100), seed)]
    if name == "preliminaries":
        sizes = [n] if n else [4, 6, 8, 10]
        return [r for nn in sizes for r in verify_preliminaries(nn, _trials(trials, 200), seed)]
    if name == "oracle":
        top = 12 if n_max is None else n_max
        sizes = [n] if n else range(4, top + 1)
        return verify_oracle_equivalence(sizes, _trials(trials, 1000), seed)
    if name == "parity":
        return verify_parity()
    raise DomainError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)} or all")


def _trials(trials, default):
    return default if trials is None else trials


def failures(reports) -> list:
    return [r for r in reports if not r.passed]
