import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from newtonbez import (
    DenseMatrix,
    MonomialPolynomial,
    NewtonPolynomial,
    PreconditionError,
    char_poly,
    companion_matrix,
    confederate_matrix,
    confederate_resultant,
    confederate_resultant_A,
    confederate_resultant_B,
    confederate_resultant_C,
    newton_to_monomial,
    random_instance,
    sylvester_resultant,
    transition_matrix,
)
from newtonbez.confederate import companion_resultant, defining_relation_residual

from conftest import Q

APPROACH_FNS = (confederate_resultant_A, confederate_resultant_B, confederate_resultant_C)


def test_companion_examples():
    assert companion_matrix(MonomialPolynomial(Q(4, 3, 2, 1))).tolist() == [[-2, -3, -4], [1, 0, 0], [0, 1, 0]]
    assert companion_matrix(MonomialPolynomial(Q(-6, 2))).tolist() == [[3]]
    shift = companion_matrix(MonomialPolynomial(Q(0, 0, 0, 1)))
    assert shift.tolist() == [[0, 0, 0], [1, 0, 0], [0, 1, 0]]


def test_confederate_example():
    F = NewtonPolynomial(Q(-1, 0, 2), Q(1, 1, 1, 1))
    assert confederate_matrix(F).tolist() == [[1, -1, -1], [1, 0, 0], [0, 1, -1]]


def test_confederate_one_by_one():
    F = NewtonPolynomial(Q(3), Q(5, 2))
    assert confederate_matrix(F).tolist() == [[Fraction(2 * 3 - 5, 2)]]


def test_confederate_zero_nodes_is_companion():
    inst = random_instance(6, 2, 7)
    F = NewtonPolynomial((Fraction(0),) * 6, inst.F.coeffs)
    assert confederate_matrix(F) == companion_matrix(newton_to_monomial(F))


@pytest.mark.parametrize("bad", [MonomialPolynomial(Q(3)), MonomialPolynomial(Q(0))])
def test_companion_preconditions(bad):
    with pytest.raises(PreconditionError):
        companion_matrix(bad)


def test_confederate_preconditions():
    with pytest.raises(PreconditionError):
        confederate_matrix(NewtonPolynomial(Q(1, 2), Q(1, 2, 0)))


def test_char_poly_examples():
    assert char_poly(DenseMatrix.zeros(2)).coeffs == Q(0, 0, 1)
    C = companion_matrix(MonomialPolynomial(Q(4, 3, 2, 1)))
    assert char_poly(C).coeffs == Q(4, 3, 2, 1)


def test_char_poly_matches_sympy():
    rng = random.Random(2)
    x = sympy.symbols("x")
    for _ in range(8):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        expected = sympy.Matrix(rows).charpoly(x).all_coeffs()[::-1]
        assert char_poly(DenseMatrix(rows)).coeffs == tuple(Fraction(int(c)) for c in expected)


@pytest.mark.parametrize(
    "f, g, expected", [((-1, 0, 1), (-2, 1), 3), ((-1, 0, 1), (-1, 1), 0), ((7, 1, 2), (1,), 1)]
)
def test_sylvester_examples(f, g, expected):
    assert sylvester_resultant(MonomialPolynomial(Q(*f)), MonomialPolynomial(Q(*g))) == expected


def test_sylvester_matches_sympy():
    rng = random.Random(6)
    x = sympy.symbols("x")
    for _ in range(10):
        n, m = rng.randint(1, 5), rng.randint(0, 5)
        f = [rng.randint(-6, 6) for _ in range(n)] + [rng.choice([-2, 1, 3])]
        g = [rng.randint(-6, 6) for _ in range(m)] + [rng.choice([-1, 2])]
        expected = sympy.resultant(sympy.Poly(f[::-1], x), sympy.Poly(g[::-1], x))
        assert sylvester_resultant(MonomialPolynomial(Q(*f)), MonomialPolynomial(Q(*g))) == int(expected)


@pytest.mark.parametrize("approach", APPROACH_FNS)
def test_constant_one_gives_identity(approach):
    inst = random_instance(5, 3, 1)
    one = NewtonPolynomial(inst.nodes, Q(1))
    assert approach(inst.F, one).matrix == DenseMatrix.identity(5)


def test_cayley_hamilton_confederate():
    for seed in range(5):
        inst = random_instance(2 + seed, 1, seed)
        assert confederate_resultant_A(inst.F, inst.F).matrix.is_zero()


def test_example1_a_equals_c(example1):
    F, G = example1
    A = confederate_resultant_A(F, G)
    C = confederate_resultant_C(F, G)
    assert (A.approach, C.approach) == ("A", "C")
    assert A.matrix == C.matrix == confederate_resultant_B(F, G).matrix


def test_zero_nodes_matches_companion_resultant():
    inst = random_instance(5, 4, 3)
    zeros = (Fraction(0),) * 5
    F, G = NewtonPolynomial(zeros, inst.F.coeffs), NewtonPolynomial(zeros, inst.G.coeffs)
    expected = companion_resultant(MonomialPolynomial(F.coeffs), MonomialPolynomial(G.coeffs))
    for fn in APPROACH_FNS:
        assert fn(F, G).matrix == expected


def test_dispatch_and_counts():
    inst = random_instance(4, 3, 0)
    res = confederate_resultant(inst.F, inst.G, "c", count=True)
    assert res.approach == "C"
    assert res.op_counts.multiplications > 0
    assert res.matrix == confederate_resultant_C(inst.F, inst.G).matrix
    with pytest.raises(ValueError):
        confederate_resultant(inst.F, inst.G, "D")


def test_approach_a_uses_m_matrix_products():
    # each n x n product costs n^3 multiplications; scaled identities add none
    inst = random_instance(4, 3, 2)
    counted = confederate_resultant_A(inst.F, inst.G, count=True).op_counts
    build = confederate_resultant_A(inst.F, NewtonPolynomial(inst.nodes, inst.G.coeffs[:1]), count=True).op_counts
    assert counted.multiplications - build.multiplications == 3 * 4**3


@st.composite
def instances(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, n))
    return random_instance(n, m, draw(st.integers(0, 10**6)))


@settings(max_examples=30, deadline=None)
@given(instances())
def test_cross_approach_equality(inst):
    A, B, C = (fn(inst.F, inst.G).matrix for fn in APPROACH_FNS)
    assert A == B == C


@settings(max_examples=30, deadline=None)
@given(instances())
def test_conjugation_relation(inst):
    n = len(inst.nodes)
    U = transition_matrix(inst.nodes, n)
    GC = companion_resultant(newton_to_monomial(inst.F), newton_to_monomial(inst.G))
    GCN = confederate_resultant_C(inst.F, inst.G).matrix
    assert U @ GC == GCN @ U


@settings(max_examples=30, deadline=None)
@given(instances())
def test_char_poly_identity(inst):
    n = len(inst.nodes)
    cp = char_poly(confederate_matrix(inst.F))
    assert tuple(inst.F.coeffs[n] * c for c in cp.coeffs) == newton_to_monomial(inst.F).coeffs


@settings(max_examples=30, deadline=None)
@given(instances())
def test_defining_relation(inst):
    n = len(inst.nodes)
    rows = defining_relation_residual(inst.F)
    an = inst.F.coeffs[n]
    assert rows[0].coeffs == tuple(c / an for c in newton_to_monomial(inst.F).coeffs)
    assert all(r.degree == -1 for r in rows[1:])


def test_float_mode_approaches_agree_approximately():
    inst = random_instance(6, 4, 11, "f64")
    A, B, C = (fn(inst.F, inst.G).matrix for fn in APPROACH_FNS)
    scale = max(abs(v) for v in A.entries())
    for X in (B, C):
        assert max(abs(x - y) for x, y in zip(A.entries(), X.entries())) <= 1e-6 * scale
