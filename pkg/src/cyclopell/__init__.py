"""Exact arithmetic in prime cyclotomic rings Z[zeta_p].

Covers lambda-adic digits and primary associates, the primary/real
criterion for units, the Gauss-sum split ``4 m_p = f^2 - p* g^2`` and the
resulting cyclotomic solution of Pell's equation, with a continued-fraction
solver as an independent cross-check.
"""

from .cyclotomic_core import (
    CycInt,
    LambdaDigits,
    conjugate,
    cyc_new,
    cyclotomic_unit,
    galois_apply,
    is_primary,
    is_prime_to_lambda,
    is_real,
    is_unit,
    lambda_digits,
    lambda_divide,
    norm,
    primary_exponent,
    unit_ratio_exponent,
    zeta_power,
)
from .errors import (
    CyclotomyError,
    InternalError,
    InvalidAutomorphismError,
    InvalidModulusError,
    ModulusMismatchError,
    NotInGroupError,
    PreconditionError,
    UnsupportedInputError,
)
from .gauss_split import GaussianInt, GaussSplit, IntPoly, build_q, eval_at_i, eval_at_one, m_poly, split_fg
from .pell import DirichletTrace, PellSolution, classify, power_solution, solve_cf, solve_dirichlet
from .quadratic_tools import legendre, p_star, sqrt_p_star
from .verify_flt import FermatTriple, factor_product_check, fermat_congruence_check, frobenius_check, norm_gap

__version__ = "0.1.0"
