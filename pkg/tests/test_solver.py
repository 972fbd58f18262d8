import cmath

import numpy as np
import pytest

import config
from verifier.examples import get_case, verify_case
from verifier.fields import HomogeneousField
from verifier.polynomials import MultiPoly
from verifier.solver import (
    NumericSystem, _solve_chart, chart_system, chordal_distance, is_smooth_point,
    nondegeneracy_check, normalize_point, singular_points_on_variety,
)


def _matches(found, expected, tol=config.TOL_DEDUP):
    return all(any(chordal_distance(p, q) < tol for q in found) for p in expected)


@pytest.fixture(scope="module")
def smooth_quartic():
    case = get_case("2")
    return case, verify_case(case)


@pytest.fixture(scope="module")
def printed_quartic():
    return get_case("2-printed")


@pytest.fixture(scope="module")
def quartic_chart_roots():
    """Accepted, normalized roots of the smooth quartic, solved chart by chart."""
    case = get_case("2")
    Y, Fs = case.homogeneous_field, list(case.homogeneous_equations)
    roots = {}
    for chart in range(Y.num_vars):
        system = NumericSystem(chart_system(Y, Fs, chart))
        rng = np.random.default_rng([config.SEED, chart])
        found = _solve_chart(
            system, chart, rng, config.STARTS_PER_CHART, config.NEWTON_MAX_ITER, config.TOL_RESIDUAL
        )
        roots[chart] = [
            normalize_point(r) for r in found if np.abs(r).max() <= config.CHART_ACCEPT_RATIO
        ]
    return roots


def test_normalize_point():
    p = normalize_point((0, 2j, 1))
    assert p[1] == 1
    assert p[2] == pytest.approx(-0.5j)
    assert p[0] == 0


def test_normalize_breaks_ties_at_lowest_index():
    w = cmath.exp(1j * cmath.pi / 3)
    p = normalize_point((0, w, 1))
    assert p[1] == 1
    assert p[2] == pytest.approx(1 / w)


def test_normalize_rejects_zero():
    with pytest.raises(ValueError):
        normalize_point((0, 0, 0))


def test_chordal_distance_is_projective():
    assert chordal_distance((1, 2j, 3), (2j, -4, 6j)) == pytest.approx(0, abs=1e-12)
    assert chordal_distance((1, 0), (0, 1)) == pytest.approx(1)


def test_numeric_system_matches_exact_evaluation():
    z1, z2 = MultiPoly.gens(2)
    polys = [z1 ** 2 * z2 - 3, 2 * z2 + z1]
    system = NumericSystem(polys)
    x = np.array([1 + 1j, 0.5 - 2j])
    assert list(system.values(x)) == pytest.approx([p.evaluate(tuple(x)) for p in polys])
    assert list(system.jacobian(x)[0]) == pytest.approx([2 * x[0] * x[1], x[0] ** 2])


def test_chart_system_shape(printed_quartic):
    Y, Fs = printed_quartic.homogeneous_field, printed_quartic.homogeneous_equations
    system = chart_system(Y, Fs, 3)
    assert len(system) == 5
    assert all(p.num_vars == 3 for p in system)


def test_too_many_equations(printed_quartic):
    Y, Fs = printed_quartic.homogeneous_field, printed_quartic.homogeneous_equations
    with pytest.raises(ValueError):
        singular_points_on_variety(Y, Fs + [Fs[0]])


def test_zero_starts_rejected(printed_quartic):
    with pytest.raises(ValueError):
        singular_points_on_variety(
            printed_quartic.homogeneous_field, printed_quartic.homogeneous_equations, starts=0
        )


def test_zero_field_rejected():
    with pytest.raises(ValueError, match="zero homogeneous field"):
        HomogeneousField((MultiPoly.zero(3),) * 3)


@pytest.mark.parametrize("ell, key", [(3, "example1_n1_l3"), (4, "example1_n1_l4")])
def test_fermat_curves(ell, key, example_points):
    result = verify_case(get_case("1", n=1, ell=ell))
    fixture = example_points[key]
    assert result.report.count == int(fixture["expected"]) == ell
    assert _matches(result.report.points, fixture["points"])
    assert result.report.all_nondegenerate
    assert result.ok


def test_smooth_quartic_points(smooth_quartic, example_points):
    _, result = smooth_quartic
    report = result.report
    assert report.count == 4
    assert _matches(report.points, example_points["example2_smooth"]["points"])
    assert report.all_nondegenerate and all(report.smooth)
    assert report.max_residual < 1e-10
    assert result.comparison == {"expected": 4, "found": 4, "nondegenerate": 4, "match": True}
    assert result.bound_attained


def test_quartic_points_lie_off_the_first_chart(quartic_chart_roots):
    # X1 = 0 at all four points
    assert quartic_chart_roots[0] == []


@pytest.mark.parametrize("a, b", [(1, 2), (2, 3), (1, 3)])
def test_overlapping_charts_find_the_same_points(quartic_chart_roots, example_points, a, b):
    expected = example_points["example2_smooth"]["points"]
    # every point has all coordinates within 1.5x the chart coordinate in charts 1, 2 and 3
    for chart in (a, b):
        assert _matches(quartic_chart_roots[chart], expected)
    assert _matches(quartic_chart_roots[b], quartic_chart_roots[a])
    assert _matches(quartic_chart_roots[a], quartic_chart_roots[b])


def test_points_are_sorted_and_normalized(smooth_quartic):
    _, result = smooth_quartic
    points = result.report.points
    assert all(max(abs(z) for z in p) == pytest.approx(1) for p in points)
    assert all(1 + 0j in p for p in points)
    assert len({tuple(np.round(p, 6)) for p in points}) == len(points)


def test_seeded_runs_are_identical(smooth_quartic):
    case, result = smooth_quartic
    again = verify_case(case)
    assert again.report == result.report


def test_printed_points_are_singular(printed_quartic, example_points):
    Y, Fs = printed_quartic.homogeneous_field, printed_quartic.homogeneous_equations
    for p in example_points["example2_printed"]["points"]:
        y = [c.evaluate(p) for c in Y.components]
        minors = np.outer(y, p) - np.outer(p, y)
        assert np.abs(minors).max() < 1e-12
        assert max(abs(F.evaluate(p)) for F in Fs) < 1e-12


def test_printed_nodes_are_not_smooth(printed_quartic, example_points):
    fixture = example_points["example2_printed"]
    Y, Fs = printed_quartic.homogeneous_field, printed_quartic.homogeneous_equations
    for p, node in zip(fixture["points"], fixture["nodes_of_V"]):
        assert is_smooth_point(p, Fs) is (not node)
        if node:
            with pytest.raises(ValueError, match="not a smooth point"):
                nondegeneracy_check(p, Y, Fs)


def test_vanishing_factor_makes_zero_degenerate(smooth_quartic):
    case, _ = smooth_quartic
    Y, Fs = case.homogeneous_field, case.homogeneous_equations
    x = MultiPoly.gens(4)
    scaled = HomogeneousField(tuple((x[1] - x[3]) * c for c in Y.components))
    p = (0, 1, 1j * 2 ** 0.5, 1)
    assert nondegeneracy_check(p, Y, Fs)
    assert not nondegeneracy_check(p, scaled, Fs)
