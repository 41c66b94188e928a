"""Skew polynomials over finite-field towers, their Taylor expansions and skew residues."""

from .errors import *  # noqa: F401,F403
from .field import (
    GF4,
    GF25,
    GF343,
    Field,
    FieldConfig,
    FieldElement,
    binomial_fraction_coeffs,
    frobenius_power,
    get_field,
    norm_K_F,
    trace_K_F,
    trace_one_element,
)
from .kernels import BACKEND
from .morphisms import apply_derivation, apply_morphism, canonical_divided_power
from .parsing import format_fraction, format_series, format_skew, parse, parse_fraction
from .rational import SkewRationalFunction, frac_add, frac_degree, frac_inverse, frac_mul, frac_section
from .residues import (
    INF,
    ZERO,
    ResidueRecord,
    bridge_check,
    chvar_check,
    gamma_star,
    is_gamma_regular,
    quotient_morphism_exists,
    residue_sum,
    sres,
    sres_infinity,
    sres_zero,
    zeta_root_check,
)
from .skew import (
    SkewPolynomial,
    central_right_multiple,
    euclid,
    left_divide,
    right_divide,
    section,
    skew_mul,
    twisted_norm,
    twisted_trace,
)
from .taylor import (
    AdmissibleLift,
    QuotientElement,
    TaylorSeries,
    XSeries,
    expand_admissible,
    expand_at_infinity,
    expand_at_zero,
    expand_canonical,
    hensel_lift,
    order_and_principal,
    quotient_mul,
)
from .ypoly import YPolynomial, YRational
from .commutative import residue_at, rho, residue_at_zeta, substitute_root

__version__ = "0.1.0"
