"""Exhaustive identity and inequality grids behind the `identities` subcommand.

Each suite walks a finite grid and counts violations; run_all() collects
them into one DataFrame (identity, checked, violations, first_violation).
"""

import logging
import math
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Callable, Iterable

import pandas as pd

import config
from analysis.bounds import alpha, alpha_ratios, beta, theorem2_min_degree
from analysis.chern import (
    CompleteIntersectionSpec, chi_section, euler_char_of, total_chern_ci, total_chern_closed_form,
)
from analysis.invariants import (
    lefschetz_coefficient_check, pencil_relation_check, polar_classes_severi_todd,
    polar_classes_via_chern, polar_relations_check, sing_count_all_forms, sing_count_wronski,
)
from analysis.symfun import (
    lemma1_check, log_concavity_check, ratio_chain_check, reduction_identity_check,
    shifted_alternating_sum_check, stifel_check, wronski, wronski_bruteforce,
    wronski_shifted_via_todd,
)

logger = logging.getLogger(__name__)

COLUMNS = ["identity", "checked", "violations", "first_violation"]


def _suite(name: str, cases: Iterable, check: Callable[..., bool]) -> dict:
    checked = violations = 0
    first = ""
    for case in cases:
        checked += 1
        if not check(*case):
            violations += 1
            if not first:
                first = repr(case)
    if violations:
        logger.error(f"{name}: {violations} of {checked} cases violated, first {first}")
    else:
        logger.info(f"{name}: {checked} cases, no violations")
    return {"identity": name, "checked": checked, "violations": violations, "first_violation": first}


# ── grids ─────────────────────────────────────────────────────────────


def wronski_arguments(max_k: int = config.LEMMA_MAX_K, max_x: int = config.LEMMA_MAX_X):
    """Nonnegative argument vectors up to permutation (W is symmetric)."""
    for k in range(1, max_k + 1):
        yield from combinations_with_replacement(range(max_x + 1), k)


def spec_grid(max_n: int = config.GRID_MAX_N, degrees: Iterable[int] = config.GRID_DEGREES):
    degrees = list(degrees)
    for n in range(2, max_n + 1):
        for k in range(1, n):
            for ds in combinations_with_replacement(degrees, k):
                yield CompleteIntersectionSpec(n, ds)


def _bound_grid(max_n: int, degrees: Iterable[int]) -> list[CompleteIntersectionSpec]:
    # linear factors excluded: alpha needs rho_{n-k-1} > 0
    return list(spec_grid(max_n, [d for d in degrees if d >= 2]))


# ── suites ────────────────────────────────────────────────────────────


def symfun_suites(
    max_k: int = config.LEMMA_MAX_K,
    max_x: int = config.LEMMA_MAX_X,
    max_j: int = config.LEMMA_MAX_J,
) -> list[dict]:
    args = list(wronski_arguments(max_k, max_x))
    todd_args = [
        ds for k in range(1, config.TODD_MAX_K + 1)
        for ds in combinations_with_replacement(range(1, max_x + 1), k)
    ]
    reduction_args = [xs for k in range(2, max_k + 1) for xs in product(range(max_x + 1), repeat=k)]
    return [
        _suite(
            "recurrence = brute force",
            ((j, xs) for xs in args for j in range(max_j + 1)),
            lambda j, xs: wronski(j, xs) == wronski_bruteforce(j, xs),
        ),
        _suite(
            "W1 W(j-1) - W(j) >= W1 W(j-2) - W(j-1) >= 0",
            ((j, xs) for xs in args for j in range(2, max_j + 1)),
            lemma1_check,
        ),
        _suite(
            "log-concavity W(j)^2 >= W(j-1) W(j+1)",
            ((j, xs) for xs in args for j in range(1, max_j + 1)),
            log_concavity_check,
        ),
        _suite("ratio chain W(j)/W(j-1) decreasing", ((max_j, xs) for xs in args), ratio_chain_check),
        _suite(
            "Todd: shifted W from unshifted",
            ((p, ds) for ds in todd_args for p in range(config.TODD_MAX_P + 1)),
            lambda p, ds: wronski_shifted_via_todd(p, ds) == wronski(p, [d - 1 for d in ds]),
        ),
        _suite(
            "shifted alternating sum",
            ((j, ds) for ds in todd_args for j in range(config.TODD_MAX_P + 1)),
            shifted_alternating_sum_check,
        ),
        _suite(
            "reduction W(k) = W(k+1) - x W(k+1)(j-1)",
            ((j, xs) for xs in reduction_args for j in range(max_j + 1)),
            reduction_identity_check,
        ),
        _suite(
            "Stifel C(m+1,l) = C(m,l) + C(m,l-1)",
            ((m, l) for m in range(config.STIFEL_MAX_M + 1) for l in range(-1, m + 3)),
            stifel_check,
        ),
    ]


def spec_suites(
    max_n: int = config.GRID_MAX_N,
    degrees: Iterable[int] = config.GRID_DEGREES,
    foliation_degrees: Iterable[int] = config.GRID_FOLIATION_DEGREES,
) -> list[dict]:
    specs = list(spec_grid(max_n, degrees))
    fol = list(foliation_degrees)
    logger.info(f"spec grid: {len(specs)} complete intersections, d in {fol}")
    return [
        _suite(
            "Chern series = closed form",
            ((s,) for s in specs),
            lambda s: total_chern_ci(s).as_ints() == total_chern_closed_form(s),
        ),
        _suite(
            "three count forms agree",
            ((s, d) for s in specs for d in fol),
            lambda s, d: sing_count_all_forms(s, d)["agree"],
        ),
        _suite(
            "N > 0 for even n-k",
            ((s, d) for s in specs if s.dim % 2 == 0 for d in fol),
            lambda s, d: sing_count_wronski(s, d) > 0,
        ),
        _suite(
            "polar classes: both paths agree",
            ((s,) for s in specs),
            lambda s: polar_classes_severi_todd(s) == polar_classes_via_chern(s),
        ),
        _suite(
            "Lefschetz coefficient identity",
            ((s, j) for s in specs for j in range(1, s.dim + 1)),
            lefschetz_coefficient_check,
        ),
        _suite(
            "hyperplane sections = degree-1 padding",
            ((s, q) for s in specs for q in range(s.dim + 1)),
            lambda s, q: chi_section(s, q) == euler_char_of(s.n, s.degrees + (1,) * q),
        ),
        _suite("Lefschetz pencil relation", ((s,) for s in specs), pencil_relation_check),
        _suite("polar class inequalities", ((s,) for s in specs), polar_relations_check),
        _suite(
            "hypersurface polar classes d(d-1)^j",
            ((n, d1) for n in range(2, max_n + 1) for d1 in range(1, 7)),
            _hypersurface_polar_check,
        ),
    ]


def _hypersurface_polar_check(n: int, d1: int) -> bool:
    spec = CompleteIntersectionSpec(n, (d1,))
    expected = tuple(d1 * (d1 - 1) ** j for j in range(spec.dim + 1))
    return polar_classes_severi_todd(spec).rho == expected == polar_classes_via_chern(spec).rho


def _lemma2_contrapositive(spec: CompleteIntersectionSpec) -> bool:
    """n-k odd and 2 <= d < beta (integer d) force N <= 0."""
    b = beta(spec)
    return all(sing_count_wronski(spec, d) <= 0 for d in range(2, math.ceil(b)))


def bound_suites(
    max_n: int = config.GRID_MAX_N,
    degrees: Iterable[int] = config.GRID_DEGREES,
) -> list[dict]:
    specs = _bound_grid(max_n, degrees)
    odd = [s for s in specs if s.dim % 2]
    return [
        _suite("alpha >= beta > alpha - 1", ((s,) for s in specs), lambda s: alpha(s) >= beta(s) > alpha(s) - 1),
        _suite(
            "alpha is the smallest ratio",
            ((s,) for s in specs),
            lambda s: min(alpha_ratios(s)) == alpha(s) == alpha_ratios(s)[-1],
        ),
        _suite(
            "alpha = rho(n-k) / rho(n-k-1)",
            ((s,) for s in specs),
            lambda s: _polar_ratio(s) == alpha(s),
        ),
        _suite("d < beta implies N <= 0 (n-k odd)", ((s,) for s in odd), _lemma2_contrapositive),
    ]


def _polar_ratio(spec: CompleteIntersectionSpec) -> Fraction:
    rho = polar_classes_severi_todd(spec)
    return Fraction(rho[spec.dim], rho[spec.dim - 1])


def positivity_counterexamples(
    max_n: int = config.GRID_MAX_N,
    degrees: Iterable[int] = config.GRID_DEGREES,
    foliation_degrees: Iterable[int] = config.GRID_FOLIATION_DEGREES,
) -> pd.DataFrame:
    """(spec, d) with n-k odd, d >= the minimal admissible degree and N <= 0.

    The degree bound is necessary only; these are the cases where the
    formula still rules a nondegenerate invariant foliation out.
    """
    rows = []
    for spec in _bound_grid(max_n, degrees):
        if spec.dim % 2 == 0:
            continue
        low = theorem2_min_degree(spec)
        for d in foliation_degrees:
            if d < low:
                continue
            count = sing_count_wronski(spec, d)
            if count <= 0:
                rows.append({"spec": str(spec), "d": d, "min_degree": low, "N": count})
    if rows:
        logger.info(f"{len(rows)} cases with d >= min degree but N <= 0")
    return pd.DataFrame(rows, columns=["spec", "d", "min_degree", "N"])


def run_all(quick: bool = False) -> pd.DataFrame:
    """Every suite on the default grids; quick shrinks them for smoke runs."""
    if quick:
        rows = symfun_suites(max_k=3, max_x=4, max_j=5)
        rows += spec_suites(max_n=5, degrees=range(1, 4), foliation_degrees=range(2, 5))
        rows += bound_suites(max_n=5, degrees=range(2, 4))
    else:
        rows = symfun_suites() + spec_suites() + bound_suites()
    return pd.DataFrame(rows, columns=COLUMNS)
