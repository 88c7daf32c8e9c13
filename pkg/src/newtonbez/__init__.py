"""Exact Bezout and confederate resultant matrices for Newton-basis polynomials."""

from .bezout import (
    bezout_monomial,
    bezout_newton_preserving,
    bezout_newton_via_transform,
    cayley_quotient_oracle,
)
from .confederate import (
    ConfederateResult,
    char_poly,
    companion_matrix,
    confederate_matrix,
    confederate_resultant,
    confederate_resultant_A,
    confederate_resultant_B,
    confederate_resultant_C,
    sylvester_resultant,
)
from .field import OpCounter, ParseError, PreconditionError, parse_scalar, with_counting
from .linalg import DenseMatrix, SingularMatrixError, determinant, solve_linear
from .newton import (
    Instance,
    MonomialPolynomial,
    NewtonPolynomial,
    eval_newton,
    monomial_to_newton,
    newton_to_monomial,
    random_instance,
    transition_matrix,
)

__version__ = "0.1.0"
