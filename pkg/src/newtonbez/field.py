"""Scalars over Q (exact) or binary64 floats, and operation counting.

Algorithms in this package are written with plain arithmetic operators, so
they run unchanged on :class:`fractions.Fraction`, ``float`` or
:class:`Counted` scalars.  Counting works by wrapping the inputs of a
computation in :class:`Counted` values bound to a private
:class:`OpCounter`; see :func:`with_counting`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Union

Scalar = Union[Fraction, float]

RATIONAL = "rational"
F64 = "f64"
FIELD_MODES = (RATIONAL, F64)

_INT_RE = re.compile(r"-?\d+")
_FRAC_RE = re.compile(r"(-?\d+)/(\d+)")
_DEC_RE = re.compile(r"-?(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?")


class ParseError(ValueError):
    """Malformed scalar, instance or matrix text."""


class PreconditionError(ValueError):
    """Inputs violate an operation's precondition (e.g. deg G > deg F)."""


def check_mode(field: str) -> str:
    if field not in FIELD_MODES:
        raise ParseError(f"unknown field mode {field!r}; expected one of {FIELD_MODES}")
    return field


def parse_scalar(text: str, field: str = RATIONAL) -> Scalar:
    """Parse ``text`` as an integer, a fraction ``p/q`` or (f64 only) a decimal.

    Exact results are reduced with the sign on the numerator.
    """
    check_mode(field)
    if not isinstance(text, str):
        raise ParseError(f"scalar must be a string, got {type(text).__name__}")
    s = text.strip()
    if _INT_RE.fullmatch(s):
        value = Fraction(int(s))
    elif m := _FRAC_RE.fullmatch(s):
        den = int(m.group(2))
        if den == 0:
            raise ParseError(f"zero denominator in {text!r}")
        value = Fraction(int(m.group(1)), den)
    elif field == F64 and _DEC_RE.fullmatch(s):
        return float(s)
    else:
        raise ParseError(f"malformed scalar {text!r}")
    return float(value) if field == F64 else value


def format_scalar(x: Any) -> str:
    x = unwrap(x)
    if isinstance(x, float):
        return repr(x)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def embed(value: int | Fraction | float, field: str = RATIONAL) -> Scalar:
    """Map an integer (or rational) into the chosen field."""
    return float(value) if field == F64 else Fraction(value)


@dataclass
class OpCounter:
    """Tallies of field operations; subtraction counts as an addition and
    division as a multiplication.  Negation is free."""

    multiplications: int = 0
    additions: int = 0

    def snapshot(self) -> "OpCounter":
        return OpCounter(self.multiplications, self.additions)

    def as_tuple(self) -> tuple[int, int]:
        return self.multiplications, self.additions


class Counted:
    """A scalar whose arithmetic is tallied on a shared :class:`OpCounter`."""

    __slots__ = ("value", "counter")

    def __init__(self, value, counter: OpCounter):
        self.value = value
        self.counter = counter

    def _mul(self, value):
        self.counter.multiplications += 1
        return Counted(value, self.counter)

    def _add(self, value):
        self.counter.additions += 1
        return Counted(value, self.counter)

    def __add__(self, other):
        return self._add(self.value + unwrap(other))

    def __radd__(self, other):
        return self._add(unwrap(other) + self.value)

    def __sub__(self, other):
        return self._add(self.value - unwrap(other))

    def __rsub__(self, other):
        return self._add(unwrap(other) - self.value)

    def __mul__(self, other):
        return self._mul(self.value * unwrap(other))

    def __rmul__(self, other):
        return self._mul(unwrap(other) * self.value)

    def __truediv__(self, other):
        return self._mul(self.value / unwrap(other))

    def __rtruediv__(self, other):
        return self._mul(unwrap(other) / self.value)

    def __neg__(self):
        return Counted(-self.value, self.counter)

    def __pos__(self):
        return self

    def __abs__(self):
        return Counted(abs(self.value), self.counter)

    def __eq__(self, other):
        return self.value == unwrap(other)

    def __lt__(self, other):
        return self.value < unwrap(other)

    def __gt__(self, other):
        return self.value > unwrap(other)

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return bool(self.value)

    def __repr__(self):
        return f"Counted({self.value!r})"


def unwrap(x):
    return x.value if isinstance(x, Counted) else x


def is_inexact(x) -> bool:
    return isinstance(unwrap(x), float)


def _map_scalars(obj, fn):
    # late import: the polynomial/matrix types live downstream of this module
    from .linalg import DenseMatrix
    from .newton import MonomialPolynomial, NewtonPolynomial

    if isinstance(obj, (Fraction, float, int, Counted)) and not isinstance(obj, bool):
        return fn(obj)
    if isinstance(obj, NewtonPolynomial):
        return NewtonPolynomial(tuple(map(fn, obj.nodes)), tuple(map(fn, obj.coeffs)))
    if isinstance(obj, MonomialPolynomial):
        return MonomialPolynomial(tuple(map(fn, obj.coeffs)))
    if isinstance(obj, DenseMatrix):
        return DenseMatrix([[fn(v) for v in row] for row in obj])
    if isinstance(obj, tuple) and hasattr(obj, "_fields"):
        return type(obj)(*(_map_scalars(v, fn) for v in obj))
    if isinstance(obj, (list, tuple)):
        return type(obj)(_map_scalars(v, fn) for v in obj)
    if isinstance(obj, dict):
        return {k: _map_scalars(v, fn) for k, v in obj.items()}
    return obj


def with_counting(computation: Callable, *args, **kwargs) -> tuple[Any, OpCounter]:
    """Run ``computation(*args, **kwargs)`` and count its field operations.

    Every scalar reachable from the arguments (directly, or inside
    polynomials, matrices, lists and tuples) is wrapped so that its
    arithmetic is tallied on a fresh counter.  The result is returned with
    scalars unwrapped again.

    >>> _, c = with_counting(lambda a, b, c, d: a * b - c * d, 1, 2, 3, 4)
    >>> c.as_tuple()
    (2, 1)
    """
    counter = OpCounter()
    wrap = lambda v: Counted(unwrap(v), counter)  # noqa: E731
    args = _map_scalars(list(args), wrap)
    kwargs = _map_scalars(kwargs, wrap)
    result = computation(*args, **kwargs)
    return _map_scalars(result, unwrap), counter
