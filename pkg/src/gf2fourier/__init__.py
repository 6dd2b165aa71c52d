"""Exact Fourier analysis of Boolean functions given as GF(2) polynomials."""
from .constructions import (
    cdn_restrictions,
    complete_uniform,
    disjoint_maxonomials,
    grid_lines,
    random_lower_part,
)
from .dyadic import Dyadic, dyadic_add, dyadic_mul, granularity_of
from .errors import CapacityError, DomainError
from .fourier import (
    CoverTable,
    Spectrum,
    count_k_covers,
    cover_table,
    granularity,
    restricted_spectrum,
    sparsity,
    sparsity_01,
    spectrum_covers,
    spectrum_wht,
)
from .gf2poly import (
    Gf2Poly,
    LinearMap,
    LinearSystem,
    add,
    degree,
    evaluate,
    make_poly,
    maxonomials,
    multiply,
    restrict_affine,
    restrict_var,
    substitute_linear,
)
from .lrank import binom_parity, degree_drops, linear_rank, symlrank_formula
from .polytext import format_poly, parse_poly

__version__ = "0.1.0"
