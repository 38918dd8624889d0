"""Command-line interface: construct, distance, bound, sweep, verify.

Exit codes: 0 success, 1 invariant/verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import arithmetic, catalog, css, gbcode
from .distance import DistanceBudget, determine, reduced_pair_lower_bound
from .gf2poly import parse_poly
from .lattice import gb_lattice, min_l1, shortest_norm2


def _budget_from_args(args: argparse.Namespace) -> DistanceBudget:
    return DistanceBudget(
        kernel_cap=args.kernel_cap,
        use_parity_refinement=not args.no_parity_refinement,
        certificate_slack=args.certificate_slack,
    )


def _add_budget_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kernel-cap", type=int, default=css.DEFAULT_KERNEL_CAP,
                        help="largest kernel dimension the exhaustive oracle may sweep")
    parser.add_argument("--no-parity-refinement", action="store_true",
                        help="use only the plain lattice lower bound")
    parser.add_argument("--certificate-slack", type=int, default=2,
                        help="extra L1 radius searched for upper-bound certificates")


def cmd_construct(args: argparse.Namespace) -> int:
    spec = gbcode.GbSpec(parse_poly(args.a), parse_poly(args.b), args.n)
    code = gbcode.build(spec)
    k_rank = css.dimension(code)
    k_gcd = gbcode.dimension_formula(spec)
    summary = f"[[{spec.length}, {k_rank}]]"
    canonical = None
    exponents = gbcode.weight2_exponents(spec)
    if exponents is not None:
        try:
            canonical = gbcode.canonicalize_w2(exponents[0], exponents[1], spec.n)
        except ValueError as exc:
            print(f"not canonicalized: {exc}")
    if canonical is not None:
        lat = gb_lattice(canonical.alpha, canonical.n)
        summary += f" lambda2={shortest_norm2(lat)} minL1={min_l1(lat).value}"
    print(summary)
    agree = "ok" if k_rank == k_gcd else "MISMATCH"
    print(f"k-check: rank-based={k_rank} gcd-formula={k_gcd} {agree}")
    if canonical is not None:
        print(f"canonical: alpha={canonical.alpha} n={canonical.n}")
    if k_rank == 0:
        print("distance: infinite")
    return 0 if agree == "ok" else 1


def cmd_distance(args: argparse.Namespace) -> int:
    report = determine(args.alpha, args.n, _budget_from_args(args))
    print(f"alpha={report.alpha} n={report.n} length={report.length} k={report.k}")
    hyp = "yes" if report.hypothesis_met else "no (n < 6)"
    refined = report.parity_refined_lower if report.parity_refined_lower is not None else "-"
    print(f"lower={report.lower_bound} (hypothesis-met={hyp}) parity-refined={refined}")
    exact = report.exact if report.exact is not None else "-"
    closed = f" closed-by={report.closed_by}" if report.closed_by else ""
    print(f"upper={report.upper_bound} exact={exact} method={report.method}{closed}")
    print(f"certificate={list(report.certificate)} (weight {len(report.certificate)})")
    print(f"z-side={report.z_side}")
    return 0


def cmd_bound(args: argparse.Namespace) -> int:
    bound = reduced_pair_lower_bound(args.u, args.v, args.n)
    canonical = gbcode.canonicalize_w2(args.u, args.v, args.n)
    lam2 = shortest_norm2(gb_lattice(canonical.alpha, canonical.n))
    print(f"alpha={canonical.alpha} lower-bound={bound} lambda2={lam2}")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    budget = _budget_from_args(args)
    entries = catalog.sweep_catalog(args.max_length, budget, args.seed)
    path = args.output or f"catalog.{args.format}"
    catalog.write_catalog(path, entries, args.max_length, budget, args.seed, fmt=args.format)
    print(f"{len(entries)} entries -> {path}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    count, problems = catalog.verify_catalog(args.catalog)
    for p in problems:
        print(p, file=sys.stderr)
    if problems:
        print(f"FAILED: {len(problems)} problem(s) in {count} record(s)", file=sys.stderr)
        return 1
    if count == 0:
        print("warning: 0 records")
    else:
        print(f"OK: {count} record(s) verified")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gbcodex",
        description="Construct weight-4 generalized bicycle CSS codes and certify their distance.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code from generator polynomials")
    p.add_argument("--a", required=True, help="first generator, e.g. 1+x")
    p.add_argument("--b", required=True, help="second generator, e.g. 1+x^5")
    p.add_argument("--n", required=True, type=int, help="circulant size")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("distance", help="certified distance report for (alpha, n)")
    p.add_argument("--alpha", required=True, type=int)
    p.add_argument("--n", required=True, type=int)
    _add_budget_flags(p)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("bound", help="lattice lower bound for (1+x^u, 1+x^v, n)")
    p.add_argument("--u", required=True, type=int)
    p.add_argument("--v", required=True, type=int)
    p.add_argument("--n", required=True, type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("sweep", help="catalog all admissible lengths up to a bound")
    p.add_argument("--max-length", required=True, type=int)
    p.add_argument("--output", default=None, help="output path (default catalog.<format>)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--seed", type=int, default=arithmetic.DEFAULT_SEED)
    _add_budget_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="recheck every record of a written catalog")
    p.add_argument("catalog", help="path to a catalog file")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc.strerror}: {exc.filename}", file=sys.stderr)
        return 1


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
