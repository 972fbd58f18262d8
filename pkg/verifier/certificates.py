"""Exact invariance certificates: X(F_m) = sum_l A_{m,l} F_l.

Each cofactor A_{m,l} is a generic polynomial of degree deg X(F_m) - deg F_l;
matching coefficients gives a linear system over Q solved exactly with sympy.
Failure means "not invariant up to the ansatz degree", never a proof of
non-invariance.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from verifier.fields import AffineVectorField, apply_field
from verifier.polynomials import MultiPoly

logger = logging.getLogger(__name__)

NOT_INVARIANT = "not invariant (up to the ansatz degree)"


@dataclass(frozen=True)
class InvarianceCertificate:
    ok: bool
    cofactors: tuple[tuple[MultiPoly, ...], ...] = field(default_factory=tuple)
    reason: str = ""

    def cofactor(self, m: int, l: int) -> MultiPoly:
        return self.cofactors[m][l]


def _to_rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _solve_membership(target: MultiPoly, Fs: list[MultiPoly]) -> list[MultiPoly] | None:
    """Cofactors A_l with target = sum A_l F_l, or None when the ansatz has no solution."""
    n = target.num_vars
    unknowns = []  # (generator index, monomial exponent)
    for l, F in enumerate(Fs):
        ansatz_degree = target.degree - F.degree
        for exp in MultiPoly.monomials_up_to(ansatz_degree, n) if ansatz_degree >= 0 else []:
            unknowns.append((l, exp))
    if not unknowns:
        return None

    columns = [MultiPoly(n, {exp: 1}) * Fs[l] for l, exp in unknowns]
    monomials = sorted(set(target.terms).union(*(c.terms for c in columns)))
    row_of = {mono: r for r, mono in enumerate(monomials)}

    A = sympy.zeros(len(monomials), len(unknowns))
    b = sympy.zeros(len(monomials), 1)
    for col, poly in enumerate(columns):
        for mono, c in poly.terms.items():
            A[row_of[mono], col] = _to_rational(c)
    for mono, c in target.terms.items():
        b[row_of[mono], 0] = _to_rational(c)

    try:
        solution, params = A.gauss_jordan_solve(b)
    except ValueError:
        return None
    # any particular solution will do
    solution = solution.subs({p: 0 for p in params})

    cofactors = [MultiPoly.zero(n) for _ in Fs]
    for (l, exp), value in zip(unknowns, solution):
        coeff = _to_fraction(value)
        if coeff:
            cofactors[l] = cofactors[l] + MultiPoly(n, {exp: coeff})
    return cofactors


def invariance_certificate(X: AffineVectorField, Fs: list[MultiPoly]) -> InvarianceCertificate:
    """Cofactor matrix certifying that V(Fs) is invariant by X, re-multiplied exactly."""
    if not Fs:
        raise ValueError("need at least one defining equation")
    for F in Fs:
        if F.num_vars != X.n:
            raise ValueError(f"equation has {F.num_vars} variables, field has {X.n}")
        if F.is_zero():
            raise ValueError("zero defining equation")

    rows = []
    for m, F in enumerate(Fs):
        target = apply_field(X, F)
        if target.is_zero():
            rows.append(tuple(MultiPoly.zero(X.n) for _ in Fs))
            continue
        cofactors = _solve_membership(target, Fs)
        if cofactors is None:
            logger.info(f"X(F_{m + 1}) is not in the ideal at the ansatz degree")
            return InvarianceCertificate(ok=False, reason=NOT_INVARIANT)
        check = sum((a * G for a, G in zip(cofactors, Fs)), MultiPoly.zero(X.n))
        if check != target:
            return InvarianceCertificate(ok=False, reason="cofactors failed exact re-multiplication")
        rows.append(tuple(cofactors))
    logger.debug(f"invariance certified with {len(Fs)} cofactor rows")
    return InvarianceCertificate(ok=True, cofactors=tuple(rows))
