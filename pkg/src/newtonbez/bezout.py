"""Bezout matrices of Newton polynomials.

The Bezout matrix ``B`` of ``F`` and ``G`` in the truncated Newton basis
``N~(x) = (N_{n-1}(x), ..., N_0(x))`` is the symmetric n x n matrix with::

    (F(x) G(y) - F(y) G(x)) / (x - y) = N~(x)^T  B  N~(y)

Three constructions are provided, plus a brute-force interpolation oracle:

* :func:`bezout_newton_preserving` -- O(n^2) recurrence that never leaves
  the Newton basis;
* :func:`bezout_monomial` -- the same recurrence with all nodes zero;
* :func:`bezout_newton_via_transform` -- convert to monomials, build the
  classical matrix, then undo the congruence ``B_P = U^T B_N U``;
* :func:`cayley_quotient_oracle` -- sample the quotient and solve for B.
"""

from __future__ import annotations

from fractions import Fraction

from .field import PreconditionError, is_inexact
from .linalg import DenseMatrix, SingularMatrixError, solve_linear
from .newton import (
    MonomialPolynomial,
    NewtonPolynomial,
    eval_newton,
    newton_basis_monomials,
    newton_to_monomial,
    transition_matrix,
)


def _check_pair(F: NewtonPolynomial, G: NewtonPolynomial) -> tuple[int, int]:
    n = len(F.nodes)
    if n == 0:
        raise PreconditionError("F must have degree n >= 1")
    if tuple(F.nodes) != tuple(G.nodes):
        raise PreconditionError("F and G must share the same node vector")
    if len(F.coeffs) != n + 1 or F.coeffs[n] == 0:
        raise PreconditionError(f"F must have degree exactly n={n} (a_n != 0)")
    m = G.degree
    if m > n:
        raise PreconditionError(f"deg G = {m} exceeds deg F = {n}")
    return n, m


def bezout_newton_preserving(F: NewtonPolynomial, G: NewtonPolynomial) -> DenseMatrix:
    """Bezout matrix of ``F`` and ``G`` in their own Newton basis.

    Entries follow the recurrence (1-based indices, ``[p, q] = a_p b_q - a_q b_p``)::

        c[i][j] = [n-i+1, n-j] + c[i-1][j+1] + (lam[n-j+1] - lam[n-i+2]) * c[i-1][j]

    with ``c[0][*] = c[*][n+1] = 0`` and ``b_p = 0`` for ``p > deg G``.  Only
    the upper triangle is computed, on an n x (n+1) workspace whose last
    column is zero; the result is then mirrored and the last column dropped.

    Costs exactly ``(3n^2 + n)/2`` multiplications and ``2n^2 - n`` additions.
    """
    n, _ = _check_pair(F, G)
    a = F.coeffs
    b = list(G.coeffs) + [0] * (n + 1 - len(G.coeffs))
    lam = F.nodes

    # Initialization: row i (1-based) holds [n-i+1, n-j] for j = i..n
    c = [[0] * (n + 1) for _ in range(n)]
    for i in range(1, n + 1):
        p = n - i + 1
        row = c[i - 1]
        for j in range(i, n + 1):
            q = n - j
            row[j - 1] = a[p] * b[q] - a[q] * b[p]

    # Recursion; i >= 2 keeps every node index within 1..n
    for i in range(2, n + 1):
        row, prev = c[i - 1], c[i - 2]
        lam_col = lam[n - i + 1]  # lambda_{n-i+2}
        for j in range(i, n + 1):
            row[j - 1] = row[j - 1] + prev[j] + (lam[n - j] - lam_col) * prev[j - 1]

    # Symmetrization and truncation
    for i in range(n):
        for j in range(i + 1, n):
            c[j][i] = c[i][j]
    return DenseMatrix(row[:n] for row in c)


def _as_newton_zero_nodes(p: MonomialPolynomial, n: int) -> NewtonPolynomial:
    return NewtonPolynomial((0,) * n, p.coeffs[: max(p.degree, 0) + 1])


def bezout_monomial(F: MonomialPolynomial, G: MonomialPolynomial) -> DenseMatrix:
    """Classical Bezout matrix against ``(x^{n-1}, ..., 1)``."""
    n = F.degree
    if n < 1:
        raise PreconditionError("F must have degree n >= 1")
    if G.degree > n:
        raise PreconditionError(f"deg G = {G.degree} exceeds deg F = {n}")
    return bezout_newton_preserving(_as_newton_zero_nodes(F, n), _as_newton_zero_nodes(G, n))


def _solve_unit_upper_transposed(U: DenseMatrix, B: list[list]) -> list[list]:
    """Solve ``U^T X = B`` by forward substitution (U unit upper triangular)."""
    n = len(B)
    X = [list(B[0])]
    for i in range(1, n):
        row = list(B[i])
        for k in range(i):
            u = U[k][i]
            if u != 0:
                xk = X[k]
                row = [r - u * v for r, v in zip(row, xk)]
        X.append(row)
    return X


def congruence_to_newton(B_P: DenseMatrix, U: DenseMatrix) -> DenseMatrix:
    """Return ``U^{-T} B_P U^{-1}`` for unit upper-triangular ``U``."""
    X = _solve_unit_upper_transposed(U, B_P.tolist())
    # X U^{-1} = (U^{-T} X^T)^T
    Y = _solve_unit_upper_transposed(U, [list(col) for col in zip(*X)])
    return DenseMatrix(zip(*Y))


def bezout_newton_via_transform(F: NewtonPolynomial, G: NewtonPolynomial) -> DenseMatrix:
    """Bezout matrix in the Newton basis computed through the monomial basis."""
    n, _ = _check_pair(F, G)
    Fm = newton_to_monomial(F)
    Gm = newton_to_monomial(G)
    B_P = bezout_monomial(Fm, Gm)
    U = transition_matrix(F.nodes, n)
    return congruence_to_newton(B_P, U)


def _newton_row(basis: list[list], x, n: int) -> list:
    # (N_{n-1}(x), ..., N_0(x)), each N_k evaluated from its monomial form
    vals = []
    for k in range(n - 1, -1, -1):
        acc = 0
        for c in reversed(basis[k]):
            acc = acc * x + c
        vals.append(acc)
    return vals


def cayley_quotient_oracle(F: NewtonPolynomial, G: NewtonPolynomial, offset: int = 0) -> DenseMatrix:
    """Recover the Bezout matrix by sampling the Cayley quotient.

    With probes ``x_k = k`` and ``y_l = n + l + 1`` (shifted by ``offset``),
    solves ``V_x B V_y^T = [Delta(x_k, y_l)]`` where row k of ``V_x`` is
    ``N~(x_k)``.  Exact arithmetic only.
    """
    n, _ = _check_pair(F, G)
    if any(is_inexact(v) for v in F.coeffs + G.coeffs + F.nodes):
        raise TypeError("the interpolation oracle requires exact (rational) inputs")
    xs = [Fraction(k + offset) for k in range(1, n + 1)]
    ys = [Fraction(n + l + 1 + offset) for l in range(1, n + 1)]
    Fx = [eval_newton(F, x) for x in xs]
    Gx = [eval_newton(G, x) for x in xs]
    Fy = [eval_newton(F, y) for y in ys]
    Gy = [eval_newton(G, y) for y in ys]
    D = DenseMatrix(
        [[(Fx[k] * Gy[l] - Fy[l] * Gx[k]) / (xs[k] - ys[l]) for l in range(n)] for k in range(n)]
    )
    basis = newton_basis_monomials(F.nodes, n)
    Vx = DenseMatrix(_newton_row(basis, x, n) for x in xs)
    Vy = DenseMatrix(_newton_row(basis, y, n) for y in ys)
    try:
        # V_x B V_y^T = D  =>  B V_y^T = W := V_x^{-1} D  =>  V_y B^T = W^T
        W = solve_linear(Vx, D)
        return solve_linear(Vy, W.T).T
    except SingularMatrixError:
        if offset > 8 * n:
            raise
        return cayley_quotient_oracle(F, G, offset + 2 * n + 1)
