"""Exact Q-umbral calculus: generalized differential operators, the star product,
Q-integration and the Q-difference Bernoulli-Taylor expansion."""

from .algebra import Poly, Rational, poly_add, poly_derivative, poly_eval, poly_mul
from .errors import (
    CapMismatch,
    DegreeOverflow,
    InvalidBasis,
    NotAdmissible,
    NotDegreeLowering,
    OrderOverflow,
    OutOfRange,
    ParseError,
    QUmbralError,
    SingularParameter,
    Unsolvable,
)
from .parser import parse_poly, render
from .presets import classical, forward_difference, jackson, psi_derivative
from .psi import PsiSeq, n_psi, psi_binomial, psi_exp_truncated, psi_factorial, psi_from_table
from .qcore import (
    BasicSeq,
    QContext,
    apply_q,
    apply_xhat,
    basic_from_operator,
    context_new,
    from_basic,
    q_exp_truncated,
    q_power,
    shifted_q_power,
    star_product,
    to_basic,
    translate,
)
from .qintegral import q_antiderivative, q_integral_definite
from .taylor import TaylorExpansion, bernoulli_taylor, cauchy_remainder, viskov_residual

__version__ = "0.1.0"
