"""Invariant suite run by ``newtonbez verify``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .bezout import (
    bezout_monomial,
    bezout_newton_preserving,
    bezout_newton_via_transform,
    cayley_quotient_oracle,
)
from .confederate import (
    char_poly,
    companion_resultant,
    confederate_matrix,
    confederate_resultant_A,
    confederate_resultant_B,
    confederate_resultant_C,
    defining_relation_residual,
    sylvester_resultant,
)
from .field import unwrap, with_counting
from .linalg import DenseMatrix, determinant, matmul
from .newton import Instance, NewtonPolynomial, newton_to_monomial, random_instance, transition_matrix

CHECKS = (
    "symmetry",
    "oracle-equivalence",
    "congruence-determinant",
    "resultant-identity",
    "op-count",
    "cross-approach",
    "char-poly",
    "defining-relation",
)


def exact_instance(inst: Instance) -> Instance:
    """Re-embed an instance in Q (floats convert exactly)."""
    q = lambda vs: tuple(Fraction(unwrap(v)) for v in vs)  # noqa: E731
    nodes = q(inst.nodes)
    return Instance(nodes, NewtonPolynomial(nodes, q(inst.F.coeffs)), NewtonPolynomial(nodes, q(inst.G.coeffs)))


class _Ctx:
    """Per-instance cache so each construction runs once."""

    def __init__(self, inst: Instance, inject_fault: bool):
        self.inst = inst
        self.n = len(inst.nodes)
        self.m = inst.G.degree
        B = bezout_newton_preserving(inst.F, inst.G)
        if inject_fault:
            rows = B.tolist()
            rows[0][-1] = rows[0][-1] + 1
            B = DenseMatrix(rows)
        self.B_N = B
        self.Fm = newton_to_monomial(inst.F)
        self.Gm = newton_to_monomial(inst.G)
        self._B_P = None

    @property
    def B_P(self):
        if self._B_P is None:
            self._B_P = bezout_monomial(self.Fm, self.Gm)
        return self._B_P


def _symmetry(c: _Ctx):
    return c.B_N.is_symmetric(), ""


def _oracle(c: _Ctx):
    T = bezout_newton_via_transform(c.inst.F, c.inst.G)
    O = cayley_quotient_oracle(c.inst.F, c.inst.G)
    note = "zero matrix (G = F)" if c.B_N.is_zero() and c.inst.F == c.inst.G else ""
    return c.B_N == T == O, note


def _congruence(c: _Ctx):
    return determinant(c.B_N) == determinant(c.B_P), ""


def _resultant(c: _Ctx):
    n, m = c.n, c.m
    an = c.inst.F.coeffs[n]
    sign = (-1) ** (n * (n - 1) // 2)
    d = determinant(c.B_P)
    if m < 0:
        return d == 0, "G is zero"
    ok = d == sign * an ** (n - m) * sylvester_resultant(c.Fm, c.Gm)
    one = NewtonPolynomial(c.inst.nodes, (Fraction(1),))
    ok = ok and determinant(bezout_newton_preserving(c.inst.F, one)) == sign * an ** n
    return ok, ""


def _op_count(c: _Ctx):
    n = c.n
    _, counter = with_counting(bezout_newton_preserving, c.inst.F, c.inst.G)
    expected = ((3 * n * n + n) // 2, 2 * n * n - n)
    if counter.as_tuple() == expected:
        return True, ""
    return False, f"n={n}: counted {counter.as_tuple()}, expected {expected}"


def _cross(c: _Ctx):
    F, G = c.inst.F, c.inst.G
    A = confederate_resultant_A(F, G).matrix
    B = confederate_resultant_B(F, G).matrix
    C = confederate_resultant_C(F, G).matrix
    # G(C_N) = U G(C) U^{-1}
    U = transition_matrix(c.inst.nodes, c.n)
    conj = matmul(C, U) == matmul(U, companion_resultant(c.Fm, c.Gm))
    return A == B == C and conj, ""


def _char_poly(c: _Ctx):
    an = c.inst.F.coeffs[c.n]
    cp = char_poly(confederate_matrix(c.inst.F))
    return tuple(an * v for v in cp.coeffs) == c.Fm.coeffs, ""


def _defining_relation(c: _Ctx):
    rows = defining_relation_residual(c.inst.F)
    an = c.inst.F.coeffs[c.n]
    first = rows[0].coeffs == tuple(v / an for v in c.Fm.coeffs)
    return first and all(r.degree < 0 for r in rows[1:]), ""


_RUNNERS: dict[str, Callable[[_Ctx], tuple[bool, str]]] = {
    "symmetry": _symmetry,
    "oracle-equivalence": _oracle,
    "congruence-determinant": _congruence,
    "resultant-identity": _resultant,
    "op-count": _op_count,
    "cross-approach": _cross,
    "char-poly": _char_poly,
    "defining-relation": _defining_relation,
}


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    notes: set = field(default_factory=set)

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class VerificationReport:
    results: dict
    counterexample: Optional[Instance] = None
    counterexample_check: Optional[str] = None

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results.values())

    def lines(self) -> list[str]:
        out = []
        for r in self.results.values():
            status = "PASS" if r.ok else "FAIL"
            line = f"{status} {r.name} ({r.passed}/{r.passed + r.failed})"
            notes = sorted(n for n in r.notes if n)
            if notes:
                line += " -- " + "; ".join(notes)
            out.append(line)
        return out


def run_checks(instances: Iterable[Instance], inject_fault: bool = False) -> VerificationReport:
    results = {name: CheckResult(name) for name in CHECKS}
    report = VerificationReport(results)
    for inst in instances:
        ctx = _Ctx(exact_instance(inst), inject_fault)
        for name in CHECKS:
            ok, note = _RUNNERS[name](ctx)
            res = results[name]
            res.notes.add(note)
            if ok:
                res.passed += 1
            else:
                res.failed += 1
                if report.counterexample is None:
                    report.counterexample = ctx.inst
                    report.counterexample_check = name
    return report


def random_instances(n: int, m: int, seed: int, count: int) -> list[Instance]:
    return [random_instance(n, m, seed + k) for k in range(count)]
