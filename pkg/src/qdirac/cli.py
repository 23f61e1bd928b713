"""qdirac command line: apply operators, test kernels, decompose, verify.

Exit codes: 0 success / property holds / all identities pass, 1 verification
or property failure, 2 usage, parse or lowering errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .config import DEFAULT_LIMITS, UNLIMITED
from .errors import ExprSyntaxError, LoweringError, QDiracError, UnknownRelationName
from .fischer import fischer_inner, harmonic_decompose, monogenic_decompose
from .parser import parse_and_lower
from .qclifford import CliffordPolynomial
from .qpoly import QPolynomial, dim_p
from .render import json_dumps, render
from .scalars import GaussianRational, ScalarQ, eval_at
from .qoperators import OperatorExpr, apply, dirac_r, laplacian_r
from .verifier import SuiteConfig, relation_names, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _read_arg(text):
    if text == "-":
        return sys.stdin.read()
    return text


def _lower(text, n, want=None):
    value = parse_and_lower(_read_arg(text), n)
    if want is not None and not isinstance(value, want):
        wants = want if isinstance(want, tuple) else (want,)
        if isinstance(value, ScalarQ) and QPolynomial in wants:
            return QPolynomial.one(n).scale(value)
        wanted = " or ".join(w.__name__ for w in wants)
        raise LoweringError(f"expression lowers to {type(value).__name__}, expected {wanted}")
    return value


def _limits(args):
    return UNLIMITED if getattr(args, "unsafe_limits", False) else DEFAULT_LIMITS


def _check_poly_limits(args, poly):
    clifford = isinstance(poly, CliffordPolynomial) and not poly.is_scalar_valued()
    _limits(args).check(poly.n, max(poly.degree(), 0), clifford)


def cmd_apply(args):
    op = _lower(args.operator, args.n, OperatorExpr)
    poly = _lower(args.poly, args.n, (QPolynomial, CliffordPolynomial))
    _check_poly_limits(args, poly)
    out = apply(op, poly)
    print(render(out, args.format))
    return EXIT_OK


def cmd_check(args):
    poly = _lower(args.poly, args.n, (QPolynomial, CliffordPolynomial))
    _check_poly_limits(args, poly)
    if args.kind == "harmonic":
        if isinstance(poly, CliffordPolynomial):
            poly = poly.to_qpoly()
        op = laplacian_r(args.n)
    else:
        op = dirac_r(args.n)
        if isinstance(poly, QPolynomial):
            poly = CliffordPolynomial.from_qpoly(poly, 1)
    # inhomogeneous input: each homogeneous part must be in the kernel
    residual = apply(op, poly)
    ok = residual.is_zero()
    verdict = {"kind": args.kind, "holds": ok}
    if args.format == "json":
        if not ok:
            verdict["residual"] = render(residual, "json")
        print(json_dumps(verdict))
    else:
        print(f"{args.kind}: {'yes' if ok else 'no'}")
        if not ok:
            print(f"residual: {render(residual, args.format)}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_decompose(args):
    poly = _lower(args.poly, args.n, (QPolynomial, CliffordPolynomial))
    _check_poly_limits(args, poly)
    if args.kind == "harmonic":
        if isinstance(poly, CliffordPolynomial):
            poly = poly.to_qpoly()
        result = harmonic_decompose(poly)
    else:
        result = monogenic_decompose(poly)
    print(render(result, args.format))
    return EXIT_OK if result.verified else EXIT_FAIL


def cmd_inner(args):
    p1 = _lower(args.poly1, args.n, (QPolynomial, CliffordPolynomial))
    p2 = _lower(args.poly2, args.n, (QPolynomial, CliffordPolynomial))
    for p in (p1, p2):
        _check_poly_limits(args, p)
    value = fischer_inner(p1, p2)
    print(render(value, args.format))
    return EXIT_OK


def cmd_verify(args):
    names = "all" if args.all or not args.names else args.names
    config = SuiteConfig(
        scalar_n_max=args.n_max,
        clifford_n_max=min(args.n_max, args.clifford_n_max),
        deg_max=args.deg_max,
        seed=args.seed,
        bilinear_pairs=args.pairs,
    )
    if not args.unsafe_limits:
        DEFAULT_LIMITS.check(config.scalar_n_max, config.deg_max, False)
        DEFAULT_LIMITS.check(config.clifford_n_max, config.deg_max, True)
    report = run_suite(names, config)
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.to_table())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_dims(args):
    from .fischer import harmonic_kernel_dim, monogenic_kernel_dim

    rows = []
    for k in range(args.deg_max + 1):
        row = {
            "k": k,
            "dim_P": dim_p(args.n, k),
            "dim_H_formula": dim_p(args.n, k) - dim_p(args.n, k - 2),
            "dim_M_formula": (dim_p(args.n, k) - dim_p(args.n, k - 1)) * 2**args.n,
        }
        if args.computed:
            _limits(args).check(args.n, k, False)
            _limits(args).check(args.n, k, True)
            row["dim_H_kernel"] = harmonic_kernel_dim(args.n, k)
            row["dim_M_kernel"] = monogenic_kernel_dim(args.n, k)
        rows.append(row)
    if args.format == "json":
        print(json_dumps({"n": args.n, "rows": rows}))
    else:
        cols = list(rows[0].keys())
        print("  ".join(f"{c:>14}" for c in cols))
        for row in rows:
            print("  ".join(f"{row[c]:>14}" for c in cols))
    return EXIT_OK


def _parse_s_value(text):
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def cmd_eval(args):
    value = _lower(args.expr, args.n, ScalarQ)
    result = eval_at(value, GaussianRational(_parse_s_value(args.s)))
    if args.format == "json":
        print(json_dumps({"re": str(result.re), "im": str(result.im)}))
    else:
        print(result)
    return EXIT_OK


def build_parser():
    top = argparse.ArgumentParser(
        prog="qdirac",
        description="Exact q-Clifford analysis on quantum Euclidean space",
    )
    sub = top.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="ambient dimension (default 2)")
    common.add_argument(
        "--format", choices=("text", "latex", "json"), default="text"
    )
    common.add_argument("--seed", type=int, default=20240901)
    common.add_argument("--deg-max", type=int, default=5)
    common.add_argument(
        "--unsafe-limits",
        action="store_true",
        help="bypass the desk-scale envelope checks",
    )

    p = sub.add_parser("apply", parents=[common], help="apply an operator to a polynomial")
    p.add_argument("operator")
    p.add_argument("poly", help="polynomial expression, or - for stdin")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("check", parents=[common], help="test harmonicity or monogenicity")
    p.add_argument("kind", choices=("harmonic", "monogenic"))
    p.add_argument("poly")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", parents=[common], help="harmonic or Fischer (monogenic) tower")
    p.add_argument("kind", choices=("harmonic", "fischer"))
    p.add_argument("poly")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("inner", parents=[common], help="q-Fischer inner product")
    p.add_argument("poly1")
    p.add_argument("poly2")
    p.set_defaults(func=cmd_inner)

    p = sub.add_parser("verify", parents=[common], help="run the relation suite")
    p.add_argument("names", nargs="*", help="relation names (see --list); default all")
    p.add_argument("--all", action="store_true", help="run every built-in relation")
    p.add_argument("--list", action="store_true", help="list relation names and exit")
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--clifford-n-max", type=int, default=3)
    p.add_argument("--pairs", type=int, default=60, help="random pairs per bilinear relation")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dims", parents=[common], help="dimension bookkeeping per degree")
    p.add_argument(
        "--computed",
        action="store_true",
        help="also compute kernel ranks exactly (slower)",
    )
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("eval", parents=[common], help="evaluate a scalar at numeric s")
    p.add_argument("expr")
    p.add_argument("--s", required=True, help="rational s value, e.g. 1/2")
    p.set_defaults(func=cmd_eval)

    return top


def main(argv=None):
    top = build_parser()
    try:
        args = top.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return EXIT_USAGE if exc.code not in (0,) else 0
    if args.command == "verify" and getattr(args, "list", False):
        for name in relation_names():
            print(name)
        return EXIT_OK
    try:
        return args.func(args)
    except (ExprSyntaxError, LoweringError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownRelationName as exc:
        print(f"error: unknown relation {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (QDiracError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
