"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
3 precondition violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench, io
from .bezout import (
    bezout_monomial,
    bezout_newton_preserving,
    bezout_newton_via_transform,
    cayley_quotient_oracle,
)
from .confederate import confederate_resultant
from .field import F64, FIELD_MODES, RATIONAL, ParseError, PreconditionError
from .linalg import SingularMatrixError
from .newton import NewtonPolynomial, newton_to_monomial, random_instance
from .verify import exact_instance, random_instances, run_checks

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _emit(text: str, output) -> None:
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _zero_nodes(p: NewtonPolynomial) -> NewtonPolynomial:
    m = newton_to_monomial(p)
    return NewtonPolynomial((0,) * len(p.nodes), m.coeffs)


def cmd_bezout(args) -> int:
    inst, field = io.read_instance(args.input)
    F, G = inst.F, inst.G
    if args.basis == "monomial":
        if args.mode == "oracle":
            B = cayley_quotient_oracle(*(_zero_nodes(p) for p in exact_instance(inst)[1:]))
        else:
            B = bezout_monomial(newton_to_monomial(F), newton_to_monomial(G))
    elif args.mode == "preserving":
        B = bezout_newton_preserving(F, G)
    elif args.mode == "transform":
        B = bezout_newton_via_transform(F, G)
    else:
        B = cayley_quotient_oracle(*exact_instance(inst)[1:])
    _emit(io.dumps_matrix(B), args.output)
    return EXIT_OK


def cmd_confederate(args) -> int:
    inst, _ = io.read_instance(args.input)
    result = confederate_resultant(inst.F, inst.G, args.approach)
    _emit(io.dumps_matrix(result.matrix), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.random is not None:
        n, m, seed, count = args.random
        if not 0 <= m <= n or n < 1 or count < 1:
            raise PreconditionError(f"--random needs 0 <= m <= n, n >= 1, count >= 1 (got {n} {m} {seed} {count})")
        instances = random_instances(n, m, seed, count)
    elif args.input is not None:
        instances = [io.read_instance(args.input)[0]]
    else:
        raise _UsageError("verify needs an instance file or --random N M SEED COUNT")
    report = run_checks(instances, inject_fault=args.inject_fault)
    for line in report.lines():
        print(line)
    if report.ok:
        return EXIT_OK
    io.write_instance(args.counterexample, report.counterexample)
    print(f"first counterexample ({report.counterexample_check}) written to {args.counterexample}")
    return EXIT_VERIFY


def _degree_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad degree list {text!r}") from None


def cmd_bench(args) -> int:
    degrees = [d for chunk in args.degrees for d in chunk]
    if not degrees or any(d < 2 for d in degrees):
        raise _UsageError("bench needs a nonempty list of degrees, each >= 2")

    def progress(rec):
        print(
            f"n={rec.n} m={rec.m} t_preserving={rec.t_preserving:.4g}s "
            f"t_trans={rec.t_trans:.4g}s ratio={rec.ratio:.3g}",
            file=sys.stderr,
        )

    records = bench.run_bench(degrees, args.field, args.seed, args.repeats, progress=progress)
    bench.write_csv(args.csv, records)
    return EXIT_OK


def cmd_gen(args) -> int:
    if not 1 <= args.m <= args.n:
        raise PreconditionError(f"need 1 <= m <= n, got n={args.n}, m={args.m}")
    inst = random_instance(args.n, args.m, args.seed, args.field)
    _emit(io.dumps_instance(inst, args.field), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="newtonbez", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bezout", help="Bezout matrix of an instance file")
    p.add_argument("input")
    p.add_argument("--mode", choices=("preserving", "transform", "oracle"), default="preserving")
    p.add_argument("--basis", choices=("newton", "monomial"), default="newton")
    p.add_argument("-o", "--output", help="matrix JSON path (default: stdout)")
    p.set_defaults(func=cmd_bezout)

    p = sub.add_parser("confederate", help="confederate resultant matrix G(C_N(F))")
    p.add_argument("input")
    p.add_argument("--approach", type=str.upper, choices=("A", "B", "C"), default="C")
    p.add_argument("-o", "--output", help="matrix JSON path (default: stdout)")
    p.set_defaults(func=cmd_confederate)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("input", nargs="?")
    p.add_argument("--random", nargs=4, type=int, metavar=("N", "M", "SEED", "COUNT"))
    p.add_argument("--counterexample", default="counterexample.json",
                   help="where to write the first failing instance")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time preserving vs transform constructions")
    p.add_argument("degrees", nargs="*", type=_degree_list)
    p.add_argument("--field", choices=FIELD_MODES, default=F64)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--csv", default="bench.csv")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="write a reproducible random instance")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("seed", type=int)
    p.add_argument("-o", "--output", help="instance JSON path (default: stdout)")
    p.add_argument("--field", choices=FIELD_MODES, default=RATIONAL)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"newtonbez: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"newtonbez: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, SingularMatrixError) as exc:
        print(f"newtonbez: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"newtonbez: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
