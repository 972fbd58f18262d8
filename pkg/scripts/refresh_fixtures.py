#!/usr/bin/env python3
"""
refresh_fixtures.py — Rebuild data/example_points.json from closed-form singular points.

The points are written from their analytic expressions, then each solvable
case is run through the numeric verifier and every analytic point must be
matched (chordal distance below the dedup tolerance) before the file is
written. The quadrics-as-printed case is recorded without a solver run:
four of its points are nodes of the variety.
"""

import sys
import os
import logging
import cmath

# Ensure project root is on path
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, PROJECT_ROOT)

import config
from utils.serialize import write_json
from verifier.examples import get_case, verify_case
from verifier.solver import chordal_distance

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    datefmt="%H:%M:%S",
)
logger = logging.getLogger("refresh_fixtures")

FIXTURE_PATH = os.path.join(PROJECT_ROOT, "data", "example_points.json")


def fermat_curve_points(ell: int) -> list[tuple[complex, ...]]:
    """(0, w, 1) with w^l = -1."""
    return [(0j, cmath.exp(1j * cmath.pi * (2 * r + 1) / ell), 1 + 0j) for r in range(ell)]


def smooth_quartic_points() -> list[tuple[complex, ...]]:
    root = 1j * 2 ** 0.5
    return [(0j, s + 0j, t * root, 1 + 0j) for s in (1, -1) for t in (1, -1)]


def printed_quartic_points() -> tuple[list[tuple[complex, ...]], list[bool]]:
    affine = [(0j, 0j, 1j, 1 + 0j), (0j, 0j, -1j, 1 + 0j)]
    nodes = [(a * 1j, b + 0j, a * b * 1j, 1 + 0j) for a in (1, -1) for b in (1, -1)]
    infinity = [(0j, 1 + 0j, 1j, 0j), (0j, 1 + 0j, -1j, 0j)]
    points = affine + nodes + infinity
    return points, [False] * 2 + [True] * 4 + [False] * 2


def _check_against_solver(which: str, points, **case_args) -> dict:
    case = get_case(which, **case_args)
    result = verify_case(case)
    missing = [
        p for p in points
        if not any(chordal_distance(p, q) < config.TOL_DEDUP for q in result.report.points)
    ]
    if missing or result.report.count != len(points):
        raise RuntimeError(
            f"{case.name}: solver found {result.report.count} points, "
            f"{len(missing)} analytic points unmatched"
        )
    logger.info(f"{case.name}: all {len(points)} analytic points matched")
    return {"d": result.d, "expected": result.comparison["expected"], "points": points}


def main():
    fixtures = {
        "example1_n1_l3": _check_against_solver("1", fermat_curve_points(3), n=1, ell=3),
        "example1_n1_l4": _check_against_solver("1", fermat_curve_points(4), n=1, ell=4),
        "example2_smooth": _check_against_solver("2", smooth_quartic_points()),
    }
    points, nodes = printed_quartic_points()
    fixtures["example2_printed"] = {"d": 2, "points": points, "nodes_of_V": nodes}
    path = write_json(fixtures, FIXTURE_PATH)
    logger.info(f"Wrote {path}")


if __name__ == "__main__":
    main()
