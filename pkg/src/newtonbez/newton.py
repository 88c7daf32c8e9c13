"""Newton-basis and monomial-basis polynomials.

Coefficient tuples are stored ascending (index 0 first).  Matrix-facing
functions work against the *descending* truncated basis vectors
``(N_{n-1}(x), ..., N_0(x))`` and ``(x^{n-1}, ..., 1)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple

from .field import RATIONAL, PreconditionError, Scalar, check_mode, embed
from .linalg import DenseMatrix

NodeVector = tuple  # (lambda_1, ..., lambda_n); repeats and zeros allowed


def _semantic_degree(coeffs) -> int:
    for i in range(len(coeffs) - 1, -1, -1):
        if coeffs[i] != 0:
            return i
    return -1


@dataclass(frozen=True)
class NewtonPolynomial:
    """``sum(coeffs[i] * N_i(x))`` with ``N_0 = 1`` and
    ``N_i = (x - nodes[i-1]) * N_{i-1}``.

    Trailing zero coefficients are allowed as padding; :attr:`degree` is the
    index of the last nonzero coefficient (``-1`` for the zero polynomial).
    """

    nodes: NodeVector
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        if len(self.coeffs) > len(self.nodes) + 1:
            raise PreconditionError(
                f"{len(self.coeffs)} coefficients exceed the capacity of a "
                f"Newton basis with {len(self.nodes)} nodes"
            )

    @property
    def degree(self) -> int:
        return _semantic_degree(self.coeffs)

    @property
    def n(self) -> int:
        return len(self.nodes)

    def coeff(self, i: int):
        """Coefficient of ``N_i``, zero beyond the stored length."""
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __call__(self, x):
        return eval_newton(self, x)


@dataclass(frozen=True)
class MonomialPolynomial:
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a polynomial needs at least one coefficient")

    @property
    def degree(self) -> int:
        return _semantic_degree(self.coeffs)

    def coeff(self, i: int):
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __call__(self, x):
        return eval_monomial(self, x)

    def trimmed(self) -> "MonomialPolynomial":
        return MonomialPolynomial(self.coeffs[: max(self.degree, 0) + 1])


def eval_newton(p: NewtonPolynomial, x):
    """Nested evaluation ``a0 + (x-l1)(a1 + (x-l2)(a2 + ...))``.

    Costs d multiplications and 2d additions for d stored coefficients
    beyond the constant.
    """
    a, lam = p.coeffs, p.nodes
    acc = a[-1]
    for i in range(len(a) - 2, -1, -1):
        acc = a[i] + (x - lam[i]) * acc
    return acc


def eval_monomial(p: MonomialPolynomial, x):
    acc = p.coeffs[-1]
    for c in reversed(p.coeffs[:-1]):
        acc = acc * x + c
    return acc


def _times_linear(poly: list, root) -> list:
    """Ascending coefficients of ``poly * (x - root)``."""
    out = [-root * poly[0]]
    for k in range(1, len(poly)):
        out.append(poly[k - 1] - root * poly[k])
    out.append(poly[-1])
    return out


def newton_to_monomial(p: NewtonPolynomial) -> MonomialPolynomial:
    a, lam = p.coeffs, p.nodes
    acc = [a[-1]]
    for i in range(len(a) - 2, -1, -1):
        acc = _times_linear(acc, lam[i])
        acc[0] = acc[0] + a[i]
    return MonomialPolynomial(acc)


def monomial_to_newton(p: MonomialPolynomial, nodes: NodeVector) -> NewtonPolynomial:
    """Newton coefficients of ``p`` by repeated synthetic division by
    ``(x - nodes[i])``; each remainder is the next coefficient."""
    nodes = tuple(nodes)
    d = p.degree
    if d > len(nodes):
        raise PreconditionError(f"degree {d} exceeds basis capacity {len(nodes)}")
    q = list(p.coeffs[: max(d, 0) + 1])
    out = []
    for i in range(max(d, 0)):
        lam = nodes[i]
        # Horner-style synthetic division, highest coefficient first
        quotient = [q[-1]]
        for c in reversed(q[1:-1]):
            quotient.append(c + lam * quotient[-1])
        remainder = q[0] + lam * quotient[-1]
        out.append(remainder)
        q = quotient[::-1]
    out.append(q[0])
    return NewtonPolynomial(nodes, out)


def newton_basis_monomials(nodes: NodeVector, count: int) -> list[list]:
    """Ascending monomial coefficients of ``N_0, ..., N_{count-1}``."""
    one = 1
    basis = [[one]]
    for i in range(1, count):
        basis.append(_times_linear(basis[-1], nodes[i - 1]))
    return basis


def transition_matrix(nodes: NodeVector, size: int) -> DenseMatrix:
    """Unit upper-triangular ``U`` with ``(N_{n-1},...,N_0)^T = U (x^{n-1},...,1)^T``.

    Only ``nodes[:size-1]`` are used.
    """
    n = size
    if n < 1:
        raise ValueError("size must be positive")
    if len(nodes) < n - 1:
        raise PreconditionError(f"need {n - 1} nodes, got {len(nodes)}")
    basis = newton_basis_monomials(nodes, n)
    rows = []
    for i in range(n):
        poly = basis[n - 1 - i]
        rows.append([poly[n - 1 - j] if n - 1 - j < len(poly) else 0 for j in range(n)])
    return DenseMatrix(rows)


class Instance(NamedTuple):
    nodes: NodeVector
    F: NewtonPolynomial
    G: NewtonPolynomial


def random_instance(n: int, m: int, seed: int, field: str = RATIONAL, bound: int = 99) -> Instance:
    """Reproducible random ``(nodes, F, G)`` with deg F = n and deg G = m.

    Nodes and coefficients are integers in ``[-bound, bound]`` embedded in
    the field; the leading coefficients are forced nonzero.
    """
    check_mode(field)
    if n < 1:
        raise PreconditionError("n must be at least 1")
    if not 0 <= m <= n:
        raise PreconditionError(f"need 0 <= m <= n, got m={m}, n={n}")
    rng = random.Random(seed)
    draw = lambda: rng.randint(-bound, bound)  # noqa: E731

    def nonzero():
        while True:
            v = draw()
            if v:
                return v

    nodes = tuple(embed(draw(), field) for _ in range(n))
    a = [embed(draw(), field) for _ in range(n)] + [embed(nonzero(), field)]
    b = [embed(draw(), field) for _ in range(m)] + [embed(nonzero(), field)]
    return Instance(nodes, NewtonPolynomial(nodes, a), NewtonPolynomial(nodes, b))


def as_scalar_tuple(values, field: str = RATIONAL) -> tuple[Scalar, ...]:
    return tuple(embed(v, field) for v in values)
