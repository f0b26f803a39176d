"""Command-line front end.

Subcommands: basis, mul, reduce, verify, check-algebra.  A context is
selected with --kind (ls, pcls, free-rb, env-pre, env-post) plus the
matching source flags: --alphabet for the free kinds, --graph for pcls,
--weight for free-rb, --algebra for the enveloping kinds.  Output is
plain text and deterministic for fixed flags and seed.

Exit codes: 0 success or all checks pass, 1 a verification check failed,
2 usage, parse, or file-format error, 3 fuel exhausted.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter

from .algebras import load_algebra
from .enveloping import EnvContext, pbw_table
from .expr import ExprError, format_lincomb, format_word, parse_expr
from .free_rb import FreeRBContext
from .pcls import CommGraph, LSContext, PCLSContext, load_graph
from .straighten import FuelError, enumerate_basis
from .terms import Alphabet
from .verify import PROPERTIES, run_property

__all__ = ["main"]

KINDS = ("ls", "pcls", "free-rb", "env-pre", "env-post")


class UsageError(Exception):
    pass


def _add_context_flags(sub):
    sub.add_argument("--kind", choices=KINDS, help="which algebra the words live in")
    sub.add_argument("--alphabet", help="generators, comma-separated, decreasing")
    sub.add_argument("--graph", help="commutation graph file (pcls only)")
    sub.add_argument("--algebra", help="structure-constant file (env kinds)")
    sub.add_argument("--weight", type=int, choices=(0, 1), default=None,
                     help="operator weight (free-rb only; default 0)")
    sub.add_argument("--fuel", type=int, default=None,
                     help="rewrite-step budget per product")


def _build_context(args):
    kind = args.kind
    if kind is None and args.algebra:
        algebra = load_algebra(args.algebra)
        kind = "env-pre" if algebra.kind == "pre" else "env-post"
    elif kind is None:
        raise UsageError("--kind is required (or --algebra to imply an env kind)")

    if kind in ("env-pre", "env-post"):
        if args.alphabet or args.graph or args.weight is not None:
            raise UsageError("env kinds take their data from --algebra alone")
        if not args.algebra:
            raise UsageError("--algebra is required for %s" % kind)
        algebra = load_algebra(args.algebra)
        want = "pre" if kind == "env-pre" else "post"
        if algebra.kind != want:
            raise UsageError("%s expects a %s table, file says %r"
                             % (kind, want, algebra.kind))
        ctx = EnvContext(algebra)
    else:
        if args.algebra:
            raise UsageError("--algebra only applies to env kinds")
        if not args.alphabet:
            raise UsageError("--alphabet is required for %s" % kind)
        alphabet = Alphabet.from_spec(args.alphabet)
        if kind == "ls":
            if args.graph or args.weight is not None:
                raise UsageError("ls takes only --alphabet")
            ctx = LSContext(alphabet)
        elif kind == "pcls":
            if args.weight is not None:
                raise UsageError("pcls has no weight")
            graph = load_graph(args.graph, alphabet) if args.graph \
                else CommGraph.empty(alphabet)
            ctx = PCLSContext(alphabet, graph)
        else:
            if args.graph:
                raise UsageError("free-rb has no graph flag")
            ctx = FreeRBContext(alphabet, weight=args.weight or 0)
    if args.fuel is not None:
        if args.fuel < 1:
            raise UsageError("--fuel must be positive")
        ctx.fuel_limit = args.fuel
    return ctx


def _check_rdeg(ctx, max_rdeg):
    if max_rdeg and not ctx.supports_operator:
        raise UsageError("--max-rdeg applies to operator kinds only")


def cmd_basis(args):
    ctx = _build_context(args)
    _check_rdeg(ctx, args.max_rdeg)
    words = enumerate_basis(ctx, args.max_deg, args.max_rdeg)
    if args.counts or args.tsv:
        table = Counter((w.xdeg, w.degr) for w in words)
        for (d, r) in sorted(table):
            if args.tsv:
                print("%d\t%d\t%d" % (d, r, table[(d, r)]))
            else:
                print("(%d, %d): %d" % (d, r, table[(d, r)]))
    else:
        for w in words:
            print(format_word(w))
    return 0


def _parse_operands(ctx, texts):
    out = []
    for text in texts:
        out.append(ctx.evaluate(parse_expr(text, ctx.alphabet)))
    return out


def cmd_mul(args):
    ctx = _build_context(args)
    x, y = _parse_operands(ctx, [args.left, args.right])
    print(format_lincomb(ctx.mult_comb(x, y)))
    return 0


def cmd_reduce(args):
    ctx = _build_context(args)
    (x,) = _parse_operands(ctx, [args.expr])
    print(format_lincomb(x))
    return 0


def cmd_verify(args):
    ctx = None
    if args.property != "enum-oracles":
        ctx = _build_context(args)
        if args.corrupt_rule:
            ctx.corrupt_sign = True
    report = run_property(
        args.property, ctx,
        seed=args.seed, count=args.samples,
        max_deg=args.max_deg, max_rdeg=args.max_rdeg,
    )
    print(report.line())
    if args.property == "pbw" and report.passed:
        table = pbw_table(ctx, args.max_deg, args.max_rdeg)
        for key in sorted(table):
            print("(%d, %d): %d" % (key[0], key[1], table[key]))
    return 0 if report.passed else 1


def cmd_check_algebra(args):
    algebra = load_algebra(args.path)
    report = algebra.validate()
    print(report.line())
    return 0 if report.passed else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rblie",
        description="Bases and products for Lie algebras with a Rota-Baxter operator.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("basis", help="list basis words within bidegree bounds")
    _add_context_flags(p)
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--max-rdeg", type=int, default=0)
    p.add_argument("--counts", action="store_true",
                   help="print a (deg, degR): count table instead of words")
    p.add_argument("--tsv", action="store_true",
                   help="counts as tab-separated deg/degR/count rows")
    p.set_defaults(func=cmd_basis)

    p = subs.add_parser("mul", help="straighten a product of two expressions")
    _add_context_flags(p)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_mul)

    p = subs.add_parser("reduce", help="rewrite an expression onto the basis")
    _add_context_flags(p)
    p.add_argument("expr")
    p.set_defaults(func=cmd_reduce)

    p = subs.add_parser("verify", help="run a property check and report PASS/FAIL")
    _add_context_flags(p)
    p.add_argument("--property", required=True, choices=PROPERTIES)
    p.add_argument("--max-deg", type=int, default=3)
    p.add_argument("--max-rdeg", type=int, default=2)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--corrupt-rule", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("check-algebra", help="validate a structure-constant file")
    p.add_argument("path")
    p.set_defaults(func=cmd_check_algebra)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FuelError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except ExprError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
