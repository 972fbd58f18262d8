"""Numerical singular points of a homogeneous field on a projective variety.

A point p of V is singular for Y when Y(p) is parallel to p. In the chart
X_c = 1 this reads Y_i(p) - p_i Y_c(p) = 0 for i != c, together with the
defining equations. Every chart is attacked with seeded random starts and a
damped Gauss-Newton iteration; roots from all charts are normalized,
deduplicated by chordal distance and sorted canonically, so the output only
depends on the seed.
"""

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import null_space, svdvals

import config
from verifier.fields import HomogeneousField
from verifier.polynomials import MultiPoly

logger = logging.getLogger(__name__)


class NumericSystem:
    """A list of MultiPoly compiled to exponent/coefficient arrays."""

    def __init__(self, polys: list[MultiPoly]):
        if not polys:
            raise ValueError("empty polynomial system")
        self.num_vars = polys[0].num_vars
        if any(p.num_vars != self.num_vars for p in polys):
            raise ValueError("polynomials in one system must share their variables")
        self._values = [self._compile(p) for p in polys]
        self._jacobian = [
            [self._compile(p.partial_derivative(i)) for i in range(self.num_vars)] for p in polys
        ]

    def _compile(self, p: MultiPoly) -> tuple[np.ndarray, np.ndarray]:
        exps = np.array(list(p.terms.keys()), dtype=np.int64).reshape(len(p.terms), self.num_vars)
        coeffs = np.array([complex(c) for c in p.terms.values()], dtype=np.complex128)
        return exps, coeffs

    @staticmethod
    def _eval(compiled, x: np.ndarray) -> complex:
        exps, coeffs = compiled
        if coeffs.size == 0:
            return 0j
        return np.prod(np.power(x, exps), axis=1) @ coeffs

    def values(self, x: np.ndarray) -> np.ndarray:
        return np.array([self._eval(c, x) for c in self._values], dtype=np.complex128)

    def jacobian(self, x: np.ndarray) -> np.ndarray:
        return np.array(
            [[self._eval(c, x) for c in row] for row in self._jacobian], dtype=np.complex128
        )


@dataclass(frozen=True)
class SolveReport:
    points: tuple[tuple[complex, ...], ...]
    residuals: tuple[float, ...]
    nondegenerate: tuple[bool, ...]
    smooth: tuple[bool, ...]
    seed: int
    starts_per_chart: int
    charts_without_roots: tuple[int, ...] = ()
    warnings: tuple[str, ...] = field(default_factory=tuple)

    @property
    def count(self) -> int:
        return len(self.points)

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)

    @property
    def all_nondegenerate(self) -> bool:
        return all(self.nondegenerate)


# ── point normalization ──────────────────────────────────────────────


def normalize_point(point) -> np.ndarray:
    """Scale so the first coordinate of (near-)maximal modulus is exactly 1."""
    p = np.asarray(point, dtype=np.complex128)
    moduli = np.abs(p)
    top = moduli.max()
    if top == 0:
        raise ValueError("the zero vector is not a projective point")
    # ties within rounding noise resolve to the lowest index
    index = int(np.flatnonzero(moduli >= top * (1 - 1e-8))[0])
    q = p / p[index]
    q[index] = 1.0
    re = np.where(np.abs(q.real) < 1e-14, 0.0, q.real) + 0.0
    im = np.where(np.abs(q.imag) < 1e-14, 0.0, q.imag) + 0.0
    return re + 1j * im


def chordal_distance(p, q) -> float:
    p = np.asarray(p, dtype=np.complex128)
    q = np.asarray(q, dtype=np.complex128)
    overlap = abs(np.vdot(p, q)) ** 2 / (np.vdot(p, p).real * np.vdot(q, q).real)
    return float(np.sqrt(max(0.0, 1.0 - overlap)))


def _sort_key(p: np.ndarray) -> tuple:
    return tuple((round(float(z.real), 9), round(float(z.imag), 9)) for z in p)


def _chart_of(p: np.ndarray) -> int:
    return int(np.flatnonzero(p == 1.0)[0])


# ── systems ──────────────────────────────────────────────────────────


def _check_inputs(Y: HomogeneousField, Fs_homog: list[MultiPoly]):
    if not Fs_homog:
        raise ValueError("need at least one defining equation")
    for F in Fs_homog:
        if F.num_vars != Y.num_vars:
            raise ValueError(f"equation has {F.num_vars} variables, field has {Y.num_vars}")
        if F.is_zero() or not F.is_homogeneous():
            raise ValueError(f"defining equation is not a nonzero homogeneous polynomial: {F}")
    if len(Fs_homog) > Y.num_vars - 2:
        raise ValueError(f"{len(Fs_homog)} equations leave no curve in P^{Y.num_vars - 1}")


def chart_system(Y: HomogeneousField, Fs_homog: list[MultiPoly], chart: int) -> list[MultiPoly]:
    """Affine equations of sing(Y) on V in the chart X_chart = 1."""
    _check_inputs(Y, Fs_homog)
    return list(Y.chart_field(chart).components) + [F.dehomogenize(chart) for F in Fs_homog]


def _gauss_newton(system: NumericSystem, x0: np.ndarray, max_iter: int, tol: float):
    x = x0
    f = system.values(x)
    r = np.linalg.norm(f)
    for _ in range(max_iter):
        if r <= tol * 1e-4:
            break
        J = system.jacobian(x)
        step = np.linalg.lstsq(J, -f, rcond=None)[0]
        t = 1.0
        while True:
            x_new = x + t * step
            f_new = system.values(x_new)
            r_new = np.linalg.norm(f_new)
            if r_new < r:
                break
            t *= 0.5
            if t < 1e-4:
                return x, r
        x, f, r = x_new, f_new, r_new
        if np.linalg.norm(x) > 1e8:
            return x, np.inf
        if np.linalg.norm(t * step) <= 1e-15 * max(1.0, np.linalg.norm(x)):
            break
    return x, r


def _residual(point: np.ndarray, field_system: NumericSystem, eq_system: NumericSystem) -> float:
    """max |Y_i p_j - Y_j p_i| and |F_l| at the point."""
    y = field_system.values(point)
    minors = np.outer(y, point) - np.outer(point, y)
    return float(max(np.abs(minors).max(), np.abs(eq_system.values(point)).max()))


def _solve_chart(system, chart, rng, starts, max_iter, tol_residual):
    n = system.num_vars
    roots = []
    draws = rng.uniform(-1, 1, (starts, n)) + 1j * rng.uniform(-1, 1, (starts, n))
    for x0 in config.START_RADIUS * draws:
        x, r = _gauss_newton(system, x0, max_iter, tol_residual)
        if r < tol_residual:
            roots.append(np.insert(x, chart, 1.0))
    return roots


def singular_points_on_variety(
    Y: HomogeneousField,
    Fs_homog: list[MultiPoly],
    seed: int = config.SEED,
    starts: int = config.STARTS_PER_CHART,
    tol_residual: float = config.TOL_RESIDUAL,
    tol_dedup: float = config.TOL_DEDUP,
    tol_rank: float = config.TOL_RANK,
    max_retries: int = config.MAX_RETRIES,
    max_iter: int = config.NEWTON_MAX_ITER,
) -> SolveReport:
    _check_inputs(Y, Fs_homog)
    if starts < 1:
        raise ValueError(f"need at least one start per chart, got {starts}")
    field_system = NumericSystem(list(Y.components))
    eq_system = NumericSystem(list(Fs_homog))

    kept: list[tuple[np.ndarray, float]] = []
    silent_charts, warnings = [], []
    for chart in range(Y.num_vars):
        system = NumericSystem(chart_system(Y, Fs_homog, chart))
        rng = np.random.default_rng([seed, chart])
        n_starts = starts
        roots = _solve_chart(system, chart, rng, n_starts, max_iter, tol_residual)
        for _ in range(max_retries):
            if roots:
                break
            n_starts *= 2
            logger.warning(f"chart {chart}: no start converged, retrying with {n_starts} starts")
            roots = _solve_chart(system, chart, rng, n_starts, max_iter, tol_residual)
        if not roots:
            silent_charts.append(chart)
            warnings.append(f"no start converged in chart {chart}")

        accepted = 0
        for root in roots:
            if np.abs(root).max() > config.CHART_ACCEPT_RATIO:
                continue  # better conditioned in another chart
            p = normalize_point(root)
            res = _residual(p, field_system, eq_system)
            if res >= tol_residual:
                continue
            accepted += 1
            for i, (q, q_res) in enumerate(kept):
                if chordal_distance(p, q) < tol_dedup:
                    if res < q_res:
                        kept[i] = (p, res)
                    break
            else:
                kept.append((p, res))
        logger.debug(f"chart {chart}: {len(roots)} converged starts, {accepted} accepted")

    kept.sort(key=lambda item: _sort_key(item[0]))
    smooth, nondegenerate = [], []
    for p, _ in kept:
        try:
            nondegenerate.append(nondegeneracy_check(p, Y, Fs_homog, tol_rank))
            smooth.append(True)
        except ValueError:
            smooth.append(False)
            nondegenerate.append(False)
            warnings.append(f"singular point of V at {_sort_key(p)}")

    logger.info(f"found {len(kept)} singular points on V across {Y.num_vars} charts")
    return SolveReport(
        points=tuple(tuple(complex(z) for z in p) for p, _ in kept),
        residuals=tuple(res for _, res in kept),
        nondegenerate=tuple(nondegenerate),
        smooth=tuple(smooth),
        seed=seed,
        starts_per_chart=starts,
        charts_without_roots=tuple(silent_charts),
        warnings=tuple(warnings),
    )


def _affine_jacobian(Fs_homog: list[MultiPoly], p: np.ndarray, chart: int) -> np.ndarray:
    a = np.delete(p, chart)
    return NumericSystem([F.dehomogenize(chart) for F in Fs_homog]).jacobian(a)


def is_smooth_point(point, Fs_homog: list[MultiPoly], tol_rank: float = config.TOL_RANK) -> bool:
    """Defining equations have independent differentials at the point."""
    p = normalize_point(point)
    DF = _affine_jacobian(Fs_homog, p, _chart_of(p))
    s = svdvals(DF)
    return bool(s.min() > tol_rank * max(1.0, s.max()))


def nondegeneracy_check(
    point, Y: HomogeneousField, Fs_homog: list[MultiPoly], tol_rank: float = config.TOL_RANK
) -> bool:
    """Derivative of the field restricted to T_pV is invertible.

    Uses the chart where the point's largest coordinate is 1; the tangent
    space is the kernel of the equations' Jacobian there.
    """
    p = normalize_point(point)
    chart = _chart_of(p)
    DF = _affine_jacobian(Fs_homog, p, chart)
    s = svdvals(DF)
    if s.min() <= tol_rank * max(1.0, s.max()):
        raise ValueError(f"not a smooth point of V: {tuple(p)}")
    tangent = null_space(DF)
    if tangent.shape[1] != DF.shape[1] - DF.shape[0]:
        raise ValueError(f"not a smooth point of V: tangent space of dimension {tangent.shape[1]}")

    a = np.delete(p, chart)
    DX = NumericSystem(list(Y.chart_field(chart).components)).jacobian(a)
    restricted = tangent.conj().T @ DX @ tangent
    sv = svdvals(restricted)
    return bool(sv.min() > tol_rank * max(1.0, sv.max()))
