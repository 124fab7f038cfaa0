"""Numerical laboratory for weighted Liouville estimates.

Submodules
----------
weights          submultiplicative weights, growth functionals, profiles
entire           polynomial-exponential entire functions and norm estimates
multiplier       Fourier multiplier symbols, mollifiers, kernel bounds
counterexamples  explicit constructions probing sharpness and failure modes
cli              command-line driver emitting JSON/CSV/SVG reports
"""

from .weights import (BorderlineExpWeight, ProductWeight, SampledWeight,
                      check_beurling_domar, check_submultiplicative,
                      compute_profile, eval_weight, find_uniform_tail_radius,
                      growth_factor, load_weight, save_weight)
from .entire import (PolyExpSum, derivative, kappa, load_function,
                     outer_function, poisson_extension, polydisc_derivative,
                     save_function, verify_tent, weighted_sup_norm)
from .multiplier import (LevySymbol, PolynomialSymbol, SampledSymbol,
                         apply_symbol, build_mollifier, converse_divergence,
                         eval_symbol, laplacian_symbol, load_symbol,
                         save_symbol, support_function, verify_liouville_bound,
                         verify_tauberian, zero_set)
from .counterexamples import (ZeroSequence, demo_zero_sequence,
                              harmonic_power, nonanalytic_series,
                              semi_elliptic, sqrt_cosine)

__version__ = "0.1.0"

__all__ = [
    "BorderlineExpWeight", "ProductWeight", "SampledWeight",
    "check_beurling_domar", "check_submultiplicative", "compute_profile",
    "eval_weight", "find_uniform_tail_radius", "growth_factor",
    "load_weight", "save_weight",
    "PolyExpSum", "derivative", "kappa", "load_function", "outer_function",
    "poisson_extension", "polydisc_derivative", "save_function",
    "verify_tent", "weighted_sup_norm",
    "LevySymbol", "PolynomialSymbol", "SampledSymbol", "apply_symbol",
    "build_mollifier", "converse_divergence", "eval_symbol",
    "laplacian_symbol", "load_symbol", "save_symbol", "support_function",
    "verify_liouville_bound", "verify_tauberian", "zero_set",
    "ZeroSequence", "demo_zero_sequence", "harmonic_power",
    "nonanalytic_series", "semi_elliptic", "sqrt_cosine",
]
