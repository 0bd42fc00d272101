"""Command line entry point: ``cubecalc <command> ...``.

Exit codes: 0 success, 1 failed gadget verification, 2 usage error,
3 parse error, 4 precondition violation, 5 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .compile import (
    compile_derivative_instance,
    compile_integration_instance,
    decide_sat_via_derivative,
    decide_sat_via_integration,
)
from .cnf import truth_table_sat
from .derivative import derivative_at_origin_oracle, multilinear_coefficient
from .errors import CubecalcError, PreconditionError, ResourceLimitError
from .gadgets import default_gadgets, verify_gadgets
from .integrate import expand_prodsum, expand_product, integrate_cwide, integrate_prodsum, width_of
from .io import PolyDocument, format_dimacs, parse_dimacs, parse_poly, serialize_poly
from .montecarlo import mc_estimate, mc_samples
from .poly import format_rat, multipoly_integrate01_all
from .reductions import reduce_3sat_to_33sat


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as e:
        raise PreconditionError(f"cannot read {path}: {e.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def exact_integral(doc: PolyDocument, method: str, c: int | None = None):
    if method == "dp":
        if doc.kind != "prodsum":
            raise PreconditionError("method 'dp' needs a prodsum document")
        return integrate_prodsum(doc.to_prodsum())
    if method == "expand":
        if doc.kind == "prodsum":
            return multipoly_integrate01_all(expand_prodsum(doc.to_prodsum()))
        return multipoly_integrate01_all(expand_product(doc.to_prodmulti().factors))
    if method == "cwide":
        pm = doc.to_prodmulti()
        if not pm.factors:
            return integrate_cwide(pm, c or 1)
        return integrate_cwide(pm, c if c is not None else width_of(pm))
    raise PreconditionError(f"unknown method {method!r}")


def cmd_verify_gadgets(args) -> int:
    report = verify_gadgets(default_gadgets())
    for chk in report.checks:
        status = "pass" if chk.passed else "FAIL"
        print(f"{chk.name}\t{format_rat(chk.value)}\t{chk.expectation}\t{status}")
    return 0 if report.passed else 1


def cmd_integrate(args) -> int:
    doc = parse_poly(_read(args.infile))
    print(format_rat(exact_integral(doc, args.method, args.c)))
    return 0


def cmd_derivative(args) -> int:
    pm = parse_poly(_read(args.infile)).to_prodmulti()
    vs = list(range(pm.num_vars))
    fn = multilinear_coefficient if args.method == "prune" else derivative_at_origin_oracle
    print(format_rat(fn(pm, vs)))
    return 0


def cmd_reduce(args) -> int:
    F = parse_dimacs(_read(args.infile))
    _write(args.out, format_dimacs(reduce_3sat_to_33sat(F)))
    return 0


def cmd_compile(args) -> int:
    F = parse_dimacs(_read(args.infile))
    if args.target == "integration":
        p = compile_integration_instance(F, default_gadgets(), args.scale)
    else:
        p, _ = compile_derivative_instance(F, args.scale)
    _write(args.out, serialize_poly(p))
    return 0


def cmd_decide(args) -> int:
    F = parse_dimacs(_read(args.infile))
    decide = {
        "integration": decide_sat_via_integration,
        "derivative": decide_sat_via_derivative,
        "truthtable": truth_table_sat,
    }[args.via]
    print("satisfiable" if decide(F) else "unsatisfiable")
    return 0


def cmd_estimate(args) -> int:
    doc = parse_poly(_read(args.infile))
    if args.samples < 1:
        raise PreconditionError("--samples must be >= 1")
    est = mc_estimate(doc, args.samples, args.seed)
    print(f"estimate\t{est.mean:.10g}")
    print(f"stderr\t{est.stderr:.10g}")
    print(f"samples\t{est.samples}")
    print(f"seed\t{est.seed}")
    print(f"generator\t{est.generator}")
    if args.plot:
        from .plotting import plot_convergence

        exact = None
        try:
            exact = exact_integral(doc, "dp" if doc.kind == "prodsum" else "expand")
        except ResourceLimitError:
            pass
        if exact is not None:
            print(f"exact\t{format_rat(exact)}")
        out = plot_convergence(
            mc_samples(doc, args.samples, args.seed), args.plot, exact,
            title=f"{Path(args.infile).name}, seed {args.seed}",
        )
        print(f"figure\t{out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cubecalc", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-gadgets", help="check the seven gadget integrals")
    p.set_defaults(func=cmd_verify_gadgets)

    p = sub.add_parser("integrate", help="exact unit-cube integral of a polynomial document")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--method", choices=["dp", "expand", "cwide"], default="dp")
    p.add_argument("--c", type=int, default=None, help="width for --method cwide")
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("derivative", help="mixed derivative in all variables at the origin")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--method", choices=["prune", "expand"], default="prune")
    p.set_defaults(func=cmd_derivative)

    p = sub.add_parser("reduce", help="rewrite a 3-CNF so each variable occurs <= 3 times")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("compile", help="compile a (3,3) CNF into a polynomial document")
    p.add_argument("--target", choices=["integration", "derivative"], required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--scale", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("decide", help="decide satisfiability of a 3-CNF")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--via", choices=["integration", "derivative", "truthtable"], default="integration")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("estimate", help="Monte Carlo estimate of the cube integral")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--plot", default=None, metavar="PNG", help="write a convergence figure")
    p.set_defaults(func=cmd_estimate)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CubecalcError as e:
        print(f"cubecalc: {type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
