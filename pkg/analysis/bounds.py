"""Degree bound d >= rho_{n-k} / rho_{n-k-1} for foliations leaving V invariant (n-k odd).

All ratios are exact Fractions of Wronski values at (d_1-1, ..., d_k-1).
alpha is the smallest consecutive ratio W_j/W_{j-1}, beta the smallest of
W_1 and the difference ratios (W_j - W_{j-1})/(W_{j-1} - W_{j-2});
alpha >= beta > alpha - 1 always holds.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from analysis.chern import CompleteIntersectionSpec, require_foliation_degree
from analysis.invariants import sing_count_wronski
from analysis.symfun import wronski_sequence

logger = logging.getLogger(__name__)

VACUOUS = "vacuous"


@dataclass(frozen=True)
class BoundReport:
    spec: str
    d: int
    alpha: Fraction
    beta: Fraction
    lemma2_threshold: Union[Fraction, str]
    min_degree: Optional[int]
    parity: str
    applicable: bool
    passes: Optional[bool]
    count: int
    skipped_terms: tuple[int, ...] = field(default_factory=tuple)

    @property
    def attained(self) -> bool:
        return self.applicable and self.min_degree == self.d


def _shifted_wronski(spec: CompleteIntersectionSpec) -> list[int]:
    if spec.is_linear and spec.dim >= 2:
        raise ValueError(
            f"bound undefined for {spec}: linear subspaces are excluded "
            "(rho_{n-k-1} vanishes)"
        )
    return wronski_sequence(spec.dim, spec.shifted_degrees)


def alpha(spec: CompleteIntersectionSpec) -> Fraction:
    w = _shifted_wronski(spec)
    m = spec.dim
    return Fraction(w[m], w[m - 1])


def alpha_ratios(spec: CompleteIntersectionSpec) -> list[Fraction]:
    """W_j / W_{j-1} for 1 <= j <= n-k; the last one is the smallest."""
    w = _shifted_wronski(spec)
    return [Fraction(w[j], w[j - 1]) for j in range(1, spec.dim + 1)]


def _difference_ratios(w: list[int], m: int) -> tuple[dict[int, Fraction], list[int]]:
    """(W_j - W_{j-1}) / (W_{j-1} - W_{j-2}) for 2 <= j <= m; zero denominators skipped."""
    ratios, skipped = {}, []
    for j in range(2, m + 1):
        num = w[j] - w[j - 1]
        den = w[j - 1] - w[j - 2]
        if den == 0:
            # W constant from j-2 on: the term is +infinity for the min
            skipped.append(j)
            continue
        ratios[j] = Fraction(num, den)
    return ratios, skipped


def beta_details(spec: CompleteIntersectionSpec) -> tuple[Fraction, list[int]]:
    w = _shifted_wronski(spec)
    ratios, skipped = _difference_ratios(w, spec.dim)
    if skipped:
        logger.debug(f"beta for {spec}: skipped 0-denominator terms at j={skipped}")
    return min([Fraction(w[1]), *ratios.values()]), skipped


def beta(spec: CompleteIntersectionSpec) -> Fraction:
    return beta_details(spec)[0]


def lemma2_threshold(spec: CompleteIntersectionSpec) -> Union[Fraction, str]:
    """min over 2 <= delta <= n-k of the difference ratios, or VACUOUS for an empty range."""
    w = _shifted_wronski(spec)
    ratios, _ = _difference_ratios(w, spec.dim)
    if not ratios:
        return VACUOUS
    return min(ratios.values())


def theorem2_min_degree(spec: CompleteIntersectionSpec) -> int:
    """Smallest admissible foliation degree: max(2, ceil(alpha)), n-k odd only."""
    if spec.is_linear:
        raise ValueError(f"degree bound undefined for {spec}: linear subspaces are excluded")
    if spec.dim % 2 == 0:
        raise ValueError(
            f"degree bound not applicable to {spec}: n-k = {spec.dim} is even"
        )
    return max(2, math.ceil(alpha(spec)))


def curve_degree_bound(n: int, d: int) -> Fraction:
    """Upper bound (1 + d/(n-1))^(n-1) on the degree of an invariant complete-intersection curve."""
    if n < 2:
        raise ValueError(f"ambient dimension must be >= 2, got n={n}")
    d = require_foliation_degree(d)
    return (1 + Fraction(d, n - 1)) ** (n - 1)


def hypersurface_degree_bound(d: int) -> int:
    """Invariant smooth hypersurfaces with n-1 odd have degree <= d + 1."""
    return require_foliation_degree(d) + 1


def feasibility_report(spec: CompleteIntersectionSpec, d: int) -> BoundReport:
    d = require_foliation_degree(d)
    a = alpha(spec)
    b, skipped = beta_details(spec)
    parity = "odd" if spec.dim % 2 else "even"
    applicable = parity == "odd" and not spec.is_linear
    min_degree = theorem2_min_degree(spec) if applicable else None
    report = BoundReport(
        spec=str(spec),
        d=d,
        alpha=a,
        beta=b,
        lemma2_threshold=lemma2_threshold(spec),
        min_degree=min_degree,
        parity=parity,
        applicable=applicable,
        passes=(d >= a) if applicable else None,
        count=sing_count_wronski(spec, d),
        skipped_terms=tuple(skipped),
    )
    logger.debug(f"feasibility {spec} d={d}: alpha={a} beta={b} N={report.count}")
    return report
