"""CLI entry point: characteristic numbers, singularity counts, degree bounds and example checks."""

import sys
import os
import logging
import argparse

# Ensure project root is on path
sys.path.insert(0, os.path.dirname(__file__))

import config
from analysis.bounds import alpha_ratios, feasibility_report
from analysis.chern import CompleteIntersectionSpec, chi_section, chi_sections
from analysis.identities import positivity_counterexamples, run_all
from analysis.invariants import (
    polar_classes_severi_todd, polar_classes_via_chern, sing_count_all_forms, sing_count_poly,
)
from utils.serialize import dumps, render_table, write_json

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    datefmt="%H:%M:%S",
)
logger = logging.getLogger(__name__)

COMMANDS = ["chi", "polar", "count", "bound", "verify-example", "verify-field", "identities"]


def parse_degrees(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"degrees must be a comma list of integers, got {text!r}")


def _spec(args) -> CompleteIntersectionSpec:
    if args.n is None or args.degrees is None:
        raise ValueError(f"{args.command} needs -n and -D")
    return CompleteIntersectionSpec(args.n, args.degrees)


def run_chi(spec: CompleteIntersectionSpec, q: int | None = None):
    """Euler characteristics of V and its generic linear sections."""
    if q is None:
        values = list(enumerate(chi_sections(spec)))
    else:
        values = [(q, chi_section(spec, q))]
    rows = [{"q": q, "chi": chi} for q, chi in values]
    payload = {"spec": str(spec), "chi": [chi for _, chi in values]}
    return payload, rows, config.EXIT_OK


def run_polar(spec: CompleteIntersectionSpec):
    todd = polar_classes_severi_todd(spec)
    chern = polar_classes_via_chern(spec)
    rows = [{"j": j, "rho": a, "rho_via_chern": b} for j, (a, b) in enumerate(zip(todd, chern))]
    agree = todd == chern
    if not agree:
        logger.error(f"polar class paths disagree for {spec}: {todd.rho} vs {chern.rho}")
    payload = {"spec": str(spec), "rho": list(todd.rho), "agree": agree}
    return payload, rows, config.EXIT_OK if agree else config.EXIT_MISMATCH


def run_count(spec: CompleteIntersectionSpec, d: int | None):
    if d is None:
        raise ValueError("count needs the foliation degree -d")
    forms = sing_count_all_forms(spec, d)
    poly = sing_count_poly(spec)
    rows = [{"form": name, "N": value} for name, value in forms.items() if name != "agree"]
    payload = {"spec": str(spec), "d": d, "forms": forms, "polynomial": list(poly.coeffs)}
    return payload, rows, config.EXIT_OK if forms["agree"] else config.EXIT_MISMATCH


def run_bound(spec: CompleteIntersectionSpec, d: int | None):
    report = feasibility_report(spec, d if d is not None else 2)
    payload = {"report": report, "alpha_ratios": alpha_ratios(spec), "attained": report.attained}
    rows = [{"quantity": key, "value": value} for key, value in vars(report).items()]
    return payload, rows, config.EXIT_OK


def _verification_output(result):
    report = result.report
    payload = {
        "example": result.case.name,
        "spec": str(result.case.spec),
        "d": result.d,
        "certificate": {
            "ok": result.certificate.ok,
            "reason": result.certificate.reason,
            "cofactors": [list(row) for row in result.certificate.cofactors],
        },
        "points": list(report.points),
        "residuals": list(report.residuals),
        "nondegenerate": list(report.nondegenerate),
        "smooth": list(report.smooth),
        "warnings": list(report.warnings),
        "seed": report.seed,
        "starts_per_chart": report.starts_per_chart,
        "comparison": result.comparison,
        "min_degree": result.min_degree,
        "bound_attained": result.bound_attained,
    }
    rows = [
        {"point": p, "residual": r, "nondegenerate": nd, "smooth": sm}
        for p, r, nd, sm in zip(report.points, report.residuals, report.nondegenerate, report.smooth)
    ]
    code = config.EXIT_OK if result.ok else config.EXIT_MISMATCH
    return payload, rows, code


def _solver_options(args) -> dict:
    return {
        "seed": args.seed,
        "starts": args.starts,
        "tol_residual": args.tol_residual,
        "tol_dedup": args.tol_dedup,
        "max_retries": args.retries,
    }


def run_verify_example(args):
    from verifier.examples import get_case, verify_case

    which = args.target
    if which not in ("1", "2"):
        raise ValueError(f"verify-example needs 1 or 2, got {which!r}")
    if which == "2" and args.as_printed:
        which = "2-printed"
    case = get_case(which, n=args.example_n, ell=args.ell)
    return _verification_output(verify_case(case, **_solver_options(args)))


def run_verify_field(args):
    """Field components and defining equations read from plain-text files."""
    from verifier.examples import ExampleCase, verify_case
    from verifier.fields import AffineVectorField
    from verifier.parser import read_polys

    if not args.field or not args.variety:
        raise ValueError("verify-field needs --field and --variety files")
    for path in (args.field, args.variety):
        if not os.path.isfile(path):
            raise ValueError(f"no such file: {path}")
    # one component per affine variable
    n = len(read_polys(args.field))
    components = read_polys(args.field, num_vars=n)
    equations = read_polys(args.variety, num_vars=n)
    field = AffineVectorField(tuple(components))
    case = ExampleCase(f"field from {args.field}", field, tuple(equations))
    return _verification_output(verify_case(case, **_solver_options(args)))


def run_identities(quick: bool):
    table = run_all(quick=quick)
    if quick:
        extra = positivity_counterexamples(max_n=5, degrees=range(2, 4), foliation_degrees=range(2, 5))
    else:
        extra = positivity_counterexamples()
    violations = int(table["violations"].sum())
    payload = {"suites": table, "positivity_counterexamples": extra, "violations": violations}
    return payload, table, config.EXIT_OK if violations == 0 else config.EXIT_MISMATCH


def dispatch(args):
    if args.command == "chi":
        return run_chi(_spec(args), args.q)
    elif args.command == "polar":
        return run_polar(_spec(args))
    elif args.command == "count":
        return run_count(_spec(args), args.d)
    elif args.command == "bound":
        return run_bound(_spec(args), args.d)
    elif args.command == "verify-example":
        return run_verify_example(args)
    elif args.command == "verify-field":
        return run_verify_field(args)
    elif args.command == "identities":
        return run_identities(args.quick)
    raise ValueError(f"unknown command {args.command!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Characteristic numbers of complete intersections and invariant-variety degree bounds"
    )
    parser.add_argument("command", choices=COMMANDS, help="Computation to run")
    parser.add_argument("target", nargs="?", help="Example number for verify-example (1 or 2)")
    parser.add_argument("-n", type=int, help="Ambient projective dimension")
    parser.add_argument("-D", "--degrees", type=parse_degrees, help="Comma list of degrees, e.g. 2,2")
    parser.add_argument("-d", type=int, help="Foliation degree")
    parser.add_argument("-q", type=int, help="Single hyperplane-section index for chi")
    parser.add_argument("--format", choices=["table", "json"], default=config.OUTPUT_FORMAT)
    parser.add_argument("--output", help="Also write the JSON report to this path")
    parser.add_argument("--seed", type=int, default=config.SEED)
    parser.add_argument("--starts", type=int, default=config.STARTS_PER_CHART, help="Random starts per chart")
    parser.add_argument("--retries", type=int, default=config.MAX_RETRIES,
                        help="Retries (doubling the starts) for charts where nothing converged")
    parser.add_argument("--tol-residual", type=float, default=config.TOL_RESIDUAL)
    parser.add_argument("--tol-dedup", type=float, default=config.TOL_DEDUP)
    parser.add_argument("--example-n", type=int, default=1, help="n for example 1 (hypersurface in P^2n)")
    parser.add_argument("--ell", type=int, default=3, help="Degree l for example 1")
    parser.add_argument("--as-printed", action="store_true",
                        help="Example 2 with the quadrics X1X3 + X2X4 (four lines, not a smooth curve)")
    parser.add_argument("--field", help="File with one field component per line")
    parser.add_argument("--variety", help="File with one defining equation per line")
    parser.add_argument("--quick", action="store_true", help="Smaller identity grids")
    parser.add_argument("--verbose", action="store_true", help="Debug logging")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        payload, rows, code = dispatch(args)
    except (ValueError, OSError) as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return config.EXIT_VALIDATION
    except ArithmeticError as e:
        logger.error(f"invariant breach: {e}")
        return config.EXIT_MISMATCH

    if args.format == "json":
        print(dumps(payload))
    else:
        print(render_table(rows))
    if args.output:
        path = write_json(payload, args.output)
        logger.info(f"Wrote report to {path}")
    return code


if __name__ == "__main__":
    sys.exit(main())
