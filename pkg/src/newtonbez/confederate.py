"""Companion and confederate matrices and the confederate resultant matrix.

``G(C_N(F))`` is computed three ways:

A. Newton-form Horner evaluation of G at the confederate matrix;
B. monomial conversion, classical Barnett formula, then a change of basis;
C. the generalized Barnett formula ``B_N(F,1)^{-1} B_N(F,G)`` using the
   basis-preserving Bezout construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bezout import _check_pair, bezout_monomial, bezout_newton_preserving
from .field import OpCounter, PreconditionError, is_inexact, with_counting
from .linalg import DenseMatrix, determinant, matmul, solve_linear
from .newton import (
    MonomialPolynomial,
    NewtonPolynomial,
    newton_basis_monomials,
    newton_to_monomial,
    transition_matrix,
)

APPROACHES = ("A", "B", "C")


@dataclass(frozen=True)
class ConfederateResult:
    matrix: DenseMatrix
    approach: str
    op_counts: Optional[OpCounter] = None


def _one_like(x):
    return 1.0 if is_inexact(x) else Fraction(1)


def companion_matrix(F: MonomialPolynomial) -> DenseMatrix:
    """Companion matrix with ``x (x^{n-1},...,1)^T = C (x^{n-1},...,1)^T mod F``."""
    n = F.degree
    if n < 1:
        raise PreconditionError("companion matrix needs deg F >= 1")
    a = F.coeffs
    lead = a[n]
    rows = [[-a[n - 1 - j] / lead for j in range(n)]]
    zero = rows[0][0] * 0
    for i in range(1, n):
        rows.append([_one_like(lead) if j == i - 1 else zero for j in range(n)])
    return DenseMatrix(rows)


def confederate_matrix(F: NewtonPolynomial) -> DenseMatrix:
    """Newton-basis analogue of the companion matrix.

    First row ``((a_n l_n - a_{n-1})/a_n, -a_{n-2}/a_n, ..., -a_0/a_n)``,
    ones on the subdiagonal and ``l_{n-1}, ..., l_1`` down the rest of the
    diagonal.
    """
    n = len(F.nodes)
    if n < 1 or len(F.coeffs) != n + 1 or F.coeffs[n] == 0:
        raise PreconditionError("confederate matrix needs deg F = n >= 1 with a_n != 0")
    a, lam = F.coeffs, F.nodes
    lead = a[n]
    first = [(lead * lam[n - 1] - a[n - 1]) / lead] + [-a[n - 1 - j] / lead for j in range(1, n)]
    zero = first[0] * 0
    one = _one_like(lead)
    rows = [first]
    for i in range(1, n):
        row = [zero] * n
        row[i - 1] = one
        row[i] = lam[n - 1 - i]
        rows.append(row)
    return DenseMatrix(rows)


def _scaled_identity(n: int, c, zero) -> DenseMatrix:
    return DenseMatrix([[c if i == j else zero for j in range(n)] for i in range(n)])


def _add_diagonal(M: DenseMatrix, c) -> DenseMatrix:
    rows = M.tolist()
    for i in range(len(rows)):
        rows[i][i] = rows[i][i] + c
    return DenseMatrix(rows)


def _counted(fn, F, G, count: bool) -> ConfederateResult:
    if count:
        result, counter = with_counting(fn, F, G)
        return ConfederateResult(result.matrix, result.approach, counter)
    return fn(F, G)


def _approach_a(F: NewtonPolynomial, G: NewtonPolynomial) -> ConfederateResult:
    n, m = _check_pair(F, G)
    C = confederate_matrix(F)
    b, lam = G.coeffs, G.nodes
    zero = C[0][0] * 0
    m = max(m, 0)
    # innermost b_m I, then R <- (C - l_k I) R + b_{k-1} I for k = m..1
    R = _scaled_identity(n, b[m], zero)
    for k in range(m, 0, -1):
        R = _add_diagonal(matmul(_add_diagonal(C, -lam[k - 1]), R), b[k - 1])
    return ConfederateResult(R, "A")


def _approach_b(F: NewtonPolynomial, G: NewtonPolynomial) -> ConfederateResult:
    n, _ = _check_pair(F, G)
    Fm, Gm = newton_to_monomial(F), newton_to_monomial(G)
    one = MonomialPolynomial((_one_like(F.coeffs[n]),))
    GC = solve_linear(bezout_monomial(Fm, one), bezout_monomial(Fm, Gm))
    U = transition_matrix(F.nodes, n)
    # C_N = U C U^{-1} for N~ = U P~, hence G(C_N) = U G(C) U^{-1}
    return ConfederateResult(solve_linear(U.T, matmul(U, GC).T).T, "B")


def _approach_c(F: NewtonPolynomial, G: NewtonPolynomial) -> ConfederateResult:
    n, _ = _check_pair(F, G)
    one = NewtonPolynomial(F.nodes, (_one_like(F.coeffs[n]),))
    return ConfederateResult(
        solve_linear(bezout_newton_preserving(F, one), bezout_newton_preserving(F, G)), "C"
    )


def confederate_resultant_A(F: NewtonPolynomial, G: NewtonPolynomial, count: bool = False) -> ConfederateResult:
    """``G(C_N(F))`` by the nested scheme
    ``b_0 I + (M - l_1 I)(b_1 I + (M - l_2 I)(... b_m I))``: m matrix products."""
    return _counted(_approach_a, F, G, count)


def confederate_resultant_B(F: NewtonPolynomial, G: NewtonPolynomial, count: bool = False) -> ConfederateResult:
    """``G(C_N(F))`` via the monomial basis: Barnett's ``B_P(F,1)^{-1} B_P(F,G)``
    followed by conjugation with the transition matrix."""
    return _counted(_approach_b, F, G, count)


def confederate_resultant_C(F: NewtonPolynomial, G: NewtonPolynomial, count: bool = False) -> ConfederateResult:
    """``G(C_N(F)) = B_N(F,1)^{-1} B_N(F,G)`` with both Bezout matrices built
    in the Newton basis.  Solves rather than inverts."""
    return _counted(_approach_c, F, G, count)


def confederate_resultant(F: NewtonPolynomial, G: NewtonPolynomial, approach: str, count: bool = False) -> ConfederateResult:
    fn = {"A": confederate_resultant_A, "B": confederate_resultant_B, "C": confederate_resultant_C}
    try:
        return fn[approach.upper()](F, G, count=count)
    except KeyError:
        raise ValueError(f"unknown approach {approach!r}; expected one of {APPROACHES}") from None


def companion_resultant(F: MonomialPolynomial, G: MonomialPolynomial) -> DenseMatrix:
    """``G(C(F))`` by plain Horner evaluation at the companion matrix."""
    C = companion_matrix(F)
    n = C.nrows
    zero = C[0][0] * 0
    c = G.coeffs[: max(G.degree, 0) + 1]
    R = _scaled_identity(n, c[-1], zero)
    for k in range(len(c) - 2, -1, -1):
        R = _add_diagonal(matmul(C, R), c[k])
    return R


def sylvester_matrix(F: MonomialPolynomial, G: MonomialPolynomial) -> DenseMatrix:
    n, m = F.degree, max(G.degree, 0)
    size = n + m
    f = list(reversed(F.coeffs[: n + 1]))
    g = list(reversed(G.coeffs[: m + 1]))
    rows = []
    for i in range(m):
        rows.append([0] * i + f + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + g + [0] * (size - m - 1 - i))
    return DenseMatrix(rows)


def sylvester_resultant(F: MonomialPolynomial, G: MonomialPolynomial):
    """Determinant of the (n+m) x (n+m) Sylvester matrix; ``b_0^n`` when m = 0."""
    n, m = F.degree, G.degree
    if n < 1:
        raise PreconditionError("sylvester_resultant needs deg F >= 1")
    if m <= 0:
        return G.coeffs[0] ** n
    return determinant(sylvester_matrix(F, G))


def char_poly(M: DenseMatrix) -> MonomialPolynomial:
    """Monic ``det(xI - M)`` by evaluation at ``0..n`` and interpolation."""
    if not M.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = M.nrows
    inexact = any(is_inexact(v) for v in M.entries())
    num = float if inexact else Fraction
    points = [num(t) for t in range(n + 1)]
    values = [determinant(_add_diagonal(-M, t)) for t in points]
    V = DenseMatrix([[t ** k for k in range(n + 1)] for t in points])
    coeffs = solve_linear(V, DenseMatrix([[v] for v in values]))
    return MonomialPolynomial([row[0] for row in coeffs])


def _poly_sub(p: list, q: list) -> list:
    size = max(len(p), len(q))
    p = p + [0] * (size - len(p))
    q = q + [0] * (size - len(q))
    return [x - y for x, y in zip(p, q)]


def defining_relation_residual(F: NewtonPolynomial) -> list[MonomialPolynomial]:
    """Rows of ``x N~(x) - C_N(F) N~(x)`` as monomial polynomials.

    For a correct confederate matrix, row 1 equals ``F / a_n`` and every
    other row vanishes identically.
    """
    n = len(F.nodes)
    C = confederate_matrix(F)
    basis = newton_basis_monomials(F.nodes, n)
    vec = [basis[n - 1 - i] for i in range(n)]  # N_{n-1}, ..., N_0
    rows = []
    for i in range(n):
        lhs = [0] + list(vec[i])  # x * N_{n-1-i}
        rhs = [0]
        for j in range(n):
            if C[i][j] != 0:
                rhs = _poly_sub(rhs, [-C[i][j] * c for c in vec[j]])
        rows.append(MonomialPolynomial(_poly_sub(lhs, rhs)))
    return rows
