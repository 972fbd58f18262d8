"""Polar classes and the singularity count N(F^d, V) of a foliation leaving V invariant."""

import logging
from dataclasses import dataclass

from analysis.chern import (
    CompleteIntersectionSpec, chi_section, chi_sections, require_foliation_degree,
    total_chern_ci, twisted_top_chern_count,
)
from analysis.symfun import binomial, wronski_sequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolarClasses:
    """(rho_0, ..., rho_{n-k}); rho_0 is the degree of V."""

    rho: tuple[int, ...]

    def __getitem__(self, j: int) -> int:
        return self.rho[j]

    def __len__(self) -> int:
        return len(self.rho)

    def __iter__(self):
        return iter(self.rho)


@dataclass(frozen=True)
class SingCountPolynomial:
    """N as a polynomial in d; coeffs[j] multiplies d^(n-k-j)."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, d: int) -> int:
        # Horner, leading coefficient first
        value = 0
        for c in self.coeffs:
            value = value * d + c
        return value

    def __str__(self):
        m = self.degree
        return " + ".join(f"{c}*d^{m - j}" for j, c in enumerate(self.coeffs))


def polar_classes_severi_todd(spec: CompleteIntersectionSpec) -> PolarClasses:
    """rho_j = (d_1...d_k) W_j(d_1-1, ..., d_k-1)."""
    w = wronski_sequence(spec.dim, spec.shifted_degrees)
    return PolarClasses(tuple(spec.total_degree * wj for wj in w))


def polar_classes_via_chern(spec: CompleteIntersectionSpec) -> PolarClasses:
    """rho_j = integral of sum_i (-1)^i C(n-k+1-i, j-i) c_i(V) h^{n-k-i}."""
    c = total_chern_ci(spec).as_ints()
    m = spec.dim
    rho = []
    for j in range(m + 1):
        s = sum((-1) ** i * binomial(m + 1 - i, j - i) * c[i] for i in range(j + 1))
        rho.append(s * spec.total_degree)
    return PolarClasses(tuple(rho))


def polar_class(spec: CompleteIntersectionSpec, j: int) -> int:
    if not 0 <= j <= spec.dim:
        raise ValueError(f"polar class index must be in 0..{spec.dim}, got {j}")
    return polar_classes_severi_todd(spec)[j]


def sing_count_poly(spec: CompleteIntersectionSpec) -> SingCountPolynomial:
    """Coefficient j is (d_1...d_k) * sum_{delta<=j} (-1)^delta W_delta(d-1)."""
    w = wronski_sequence(spec.dim, spec.shifted_degrees)
    coeffs = []
    partial = 0
    for j, wj in enumerate(w):
        partial += (-1) ** j * wj
        coeffs.append(spec.total_degree * partial)
    return SingCountPolynomial(tuple(coeffs))


def sing_count_wronski(spec: CompleteIntersectionSpec, d: int) -> int:
    d = require_foliation_degree(d)
    return sing_count_poly(spec).evaluate(d)


def sing_count_unshifted(spec: CompleteIntersectionSpec, d: int) -> int:
    """Same count written with W_delta at the degrees themselves:

        (d_1...d_k) sum_j [sum_delta (-1)^delta C(k+j, j-delta) W_delta(d_1..d_k)] d^(n-k-j)
    """
    d = require_foliation_degree(d)
    m, k = spec.dim, spec.k
    w = wronski_sequence(m, spec.degrees)
    total = 0
    for j in range(m + 1):
        inner = sum((-1) ** delta * binomial(k + j, j - delta) * w[delta] for delta in range(j + 1))
        total += inner * d ** (m - j)
    return total * spec.total_degree


def sing_count_euler(spec: CompleteIntersectionSpec, d: int) -> int:
    """chi(V_[m]) d^m + sum_{j>=1} [chi(V_[m-j]) - chi(V_[m-j+1])] d^(m-j), m = n-k."""
    d = require_foliation_degree(d)
    m = spec.dim
    chi = chi_sections(spec)
    total = chi[m] * d ** m
    for j in range(1, m + 1):
        total += (chi[m - j] - chi[m - j + 1]) * d ** (m - j)
    return total


def sing_count_all_forms(spec: CompleteIntersectionSpec, d: int) -> dict:
    forms = {
        "euler": sing_count_euler(spec, d),
        "wronski": sing_count_wronski(spec, d),
        "chern": twisted_top_chern_count(spec, d),
        "unshifted": sing_count_unshifted(spec, d),
    }
    agree = len(set(forms.values())) == 1
    if not agree:
        logger.error(f"singularity-count forms disagree for {spec}, d={d}: {forms}")
    return {**forms, "agree": agree}


def lefschetz_coefficient_check(spec: CompleteIntersectionSpec, j: int) -> bool:
    """sum_{i<=j} (-1)^i rho_i == chi(V_[m-j]) - chi(V_[m-j+1]), 1 <= j <= m."""
    m = spec.dim
    if not 1 <= j <= m:
        raise ValueError(f"Lefschetz coefficient index must be in 1..{m}, got {j}")
    rho = polar_classes_severi_todd(spec)
    lhs = sum((-1) ** i * rho[i] for i in range(j + 1))
    rhs = chi_section(spec, m - j) - chi_section(spec, m - j + 1)
    return lhs == rhs


def pencil_relation_check(spec: CompleteIntersectionSpec) -> bool:
    """chi(V) == 2 chi(V_[1]) - chi(V_[2]) + (-1)^m rho_m (Lefschetz pencil)."""
    m = spec.dim
    chi0 = chi_section(spec, 0)
    chi1 = chi_section(spec, 1)
    # a curve cut twice is empty
    chi2 = chi_section(spec, 2) if m >= 2 else 0
    rho_top = polar_class(spec, m)
    return chi0 == 2 * chi1 - chi2 + (-1) ** m * rho_top


def polar_relations_check(spec: CompleteIntersectionSpec) -> bool:
    """rho_1 rho_{j-1} - rho_j >= rho_1 rho_{j-2} - rho_{j-1} and rho_j^2 >= rho_{j-1} rho_{j+1}."""
    rho = polar_classes_severi_todd(spec)
    m = spec.dim
    for j in range(2, m + 1):
        if rho[1] * rho[j - 1] - rho[j] < rho[1] * rho[j - 2] - rho[j - 1]:
            return False
    for j in range(1, m):
        if rho[j] ** 2 < rho[j - 1] * rho[j + 1]:
            return False
    return True


def projective_space_sing_count(n: int, d: int) -> int:
    """d^n + ... + d + 1: singularities of a nondegenerate F^d on all of P^n."""
    if n < 1:
        raise ValueError(f"projective dimension must be >= 1, got {n}")
    d = require_foliation_degree(d)
    return sum(d ** j for j in range(n + 1))
