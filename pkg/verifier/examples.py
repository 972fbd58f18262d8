"""Worked foliations with invariant complete intersections, and an end-to-end check.

example1(n, l): Fermat hypersurface of degree l in P^{2n}, field of degree l-1.
example2(): two quadrics in P^3 and a degree-2 field. Q1 +- 2 Q2 are sums
of two squares there, so that intersection is four lines rather than a
smooth quartic; it is kept for the certificate only.
example2_smooth(): a smooth elliptic quartic in P^3 with a degree-2 field
leaving it invariant; four nondegenerate singular points on the curve.
"""

import logging
from dataclasses import dataclass

import config
from analysis.bounds import theorem2_min_degree
from analysis.chern import CompleteIntersectionSpec
from analysis.invariants import sing_count_wronski
from verifier.certificates import InvarianceCertificate, invariance_certificate
from verifier.fields import (
    AffineVectorField, HomogeneousField, foliation_degree, homogenize_equations, homogenize_field,
)
from verifier.polynomials import MultiPoly
from verifier.solver import SolveReport, singular_points_on_variety

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExampleCase:
    name: str
    field: AffineVectorField
    equations: tuple[MultiPoly, ...]

    @property
    def spec(self) -> CompleteIntersectionSpec:
        return CompleteIntersectionSpec(self.field.n, tuple(F.degree for F in self.equations))

    @property
    def degree(self) -> int:
        return foliation_degree(self.field).d

    @property
    def homogeneous_field(self) -> HomogeneousField:
        return homogenize_field(self.field)

    @property
    def homogeneous_equations(self) -> list[MultiPoly]:
        return homogenize_equations(list(self.equations), self.field.chart)


def example1(n: int, ell: int) -> tuple[AffineVectorField, MultiPoly]:
    """Fermat hypersurface sum X_i^l = 0 in P^{2n}, chart X_{2n+1} = 1."""
    if n < 1:
        raise ValueError(f"example 1 needs n >= 1, got n={n}")
    if ell < 3:
        raise ValueError(f"example 1 needs l >= 3, got l={ell}")
    size = 2 * n
    z = MultiPoly.gens(size)
    lead = z[1] ** (ell - 1)
    comps = [lead * z[0], z[1] ** ell + 1]
    for i in range(2, n + 1):
        odd, even = z[2 * i - 2], z[2 * i - 1]
        comps.append(lead * odd - even ** (ell - 1))
        comps.append(lead * even + odd ** (ell - 1))
    F = sum((zi ** ell for zi in z), MultiPoly.constant(1, size))
    return AffineVectorField(tuple(comps), chart=size), F


def example2() -> tuple[AffineVectorField, list[MultiPoly]]:
    """Q1 = sum X_i^2, Q2 = X1 X3 + X2 X4 and the cubic field, chart X4 = 1."""
    z1, z2, z3 = MultiPoly.gens(3)
    comps = (
        -(z1 ** 2) * z2 + z1 * z3,
        -z1 * z2 ** 2 + 2 * z2 * z3 - z1,
        -z1 * z2 * z3 - z2 ** 2 + z3 ** 2 + 1,
    )
    Q1 = z1 ** 2 + z2 ** 2 + z3 ** 2 + 1
    Q2 = z1 * z3 + z2
    return AffineVectorField(comps, chart=3), [Q1, Q2]


def example2_smooth() -> tuple[AffineVectorField, list[MultiPoly]]:
    """Q1 = sum X_i^2, Q2 = X2^2 + 2 X3^2 + 3 X4^2 with the field (0, -X3X4, 2X2X4, -X2X3).

    In the chart X4 = 1 the field gains the radial part z2 z3 R; both quadrics
    are multiplied by 2 z2 z3 under it. Singular points on the curve are
    (0, +-1, +-i sqrt 2, 1).
    """
    z1, z2, z3 = MultiPoly.gens(3)
    comps = (
        z1 * z2 * z3,
        z2 ** 2 * z3 - z3,
        z2 * z3 ** 2 + 2 * z2,
    )
    Q1 = z1 ** 2 + z2 ** 2 + z3 ** 2 + 1
    Q2 = z2 ** 2 + 2 * z3 ** 2 + 3
    return AffineVectorField(comps, chart=3), [Q1, Q2]


def get_case(which: str, n: int = 1, ell: int = 3) -> ExampleCase:
    if which == "1":
        X, F = example1(n, ell)
        return ExampleCase(f"example1(n={n}, l={ell})", X, (F,))
    if which == "2":
        X, Fs = example2_smooth()
        return ExampleCase("example2 (smooth elliptic quartic)", X, tuple(Fs))
    if which == "2-printed":
        X, Fs = example2()
        return ExampleCase("example2 (quadrics as printed)", X, tuple(Fs))
    raise ValueError(f"unknown example {which!r}; choose 1, 2 or 2-printed")


def compare_with_formula(spec: CompleteIntersectionSpec, d: int, report: SolveReport) -> dict:
    expected = sing_count_wronski(spec, d)
    match = report.count == expected and report.all_nondegenerate and all(report.smooth)
    if not match:
        logger.warning(f"{spec}, d={d}: formula N={expected}, solver found {report.count}")
    return {
        "expected": expected,
        "found": report.count,
        "nondegenerate": sum(report.nondegenerate),
        "match": match,
    }


@dataclass(frozen=True)
class CaseVerification:
    case: ExampleCase
    d: int
    certificate: InvarianceCertificate
    report: SolveReport
    comparison: dict
    min_degree: int | None

    @property
    def ok(self) -> bool:
        return self.certificate.ok and self.comparison["match"]

    @property
    def bound_attained(self) -> bool:
        return self.min_degree == self.d


def verify_case(
    case: ExampleCase,
    seed: int = config.SEED,
    starts: int = config.STARTS_PER_CHART,
    tol_residual: float = config.TOL_RESIDUAL,
    tol_dedup: float = config.TOL_DEDUP,
    max_retries: int = config.MAX_RETRIES,
) -> CaseVerification:
    """Certificate, numeric singular points, formula comparison and bound for one case."""
    d = case.degree
    spec = case.spec
    logger.info(f"verifying {case.name}: {spec}, d={d}")
    certificate = invariance_certificate(case.field, list(case.equations))
    if not certificate.ok:
        logger.warning(f"{case.name}: {certificate.reason}")
    report = singular_points_on_variety(
        case.homogeneous_field, case.homogeneous_equations, seed=seed, starts=starts,
        tol_residual=tol_residual, tol_dedup=tol_dedup, max_retries=max_retries,
    )
    comparison = compare_with_formula(spec, d, report)
    min_degree = theorem2_min_degree(spec) if spec.dim % 2 and not spec.is_linear else None
    return CaseVerification(case, d, certificate, report, comparison, min_degree)

