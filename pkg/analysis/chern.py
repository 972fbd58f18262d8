"""Chern classes and Euler characteristics of smooth complete intersections in P^n.

Everything lives in the truncated ring Q[h]/(h^{dim+1}) where h is the
hyperplane class restricted to V; integration over V reads the top
coefficient and multiplies by the degree d_1...d_k.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

from analysis.symfun import binomial, wronski_sequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompleteIntersectionSpec:
    """V_(d_1..d_k) in P^n, cut out by k equations of the given degrees."""

    n: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if self.n < 2:
            raise ValueError(f"ambient dimension must be >= 2, got n={self.n}")
        k = len(self.degrees)
        if not 1 <= k <= self.n - 1:
            raise ValueError(
                f"need 1 <= k <= n-1 equations, got k={k} for n={self.n}"
            )
        if any(d < 1 for d in self.degrees):
            raise ValueError(f"every degree must be >= 1, got {self.degrees}")

    @property
    def k(self) -> int:
        return len(self.degrees)

    @property
    def dim(self) -> int:
        return self.n - self.k

    @property
    def total_degree(self) -> int:
        return prod(self.degrees)

    @property
    def shifted_degrees(self) -> tuple[int, ...]:
        return tuple(d - 1 for d in self.degrees)

    @property
    def is_linear(self) -> bool:
        return all(d == 1 for d in self.degrees)

    def __str__(self):
        return f"V({','.join(map(str, self.degrees))}) in P^{self.n}"


def require_foliation_degree(d: int) -> int:
    if int(d) != d or d < 2:
        raise ValueError(f"foliation degree must be an integer >= 2, got d={d}")
    return int(d)


@dataclass(frozen=True)
class HSeries:
    """Polynomial in h with Fraction coefficients, truncated above h^order."""

    coeffs: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"truncation order must be >= 0, got {self.order}")
        cs = [Fraction(c) for c in self.coeffs][: self.order + 1]
        cs += [Fraction(0)] * (self.order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, value, order: int) -> "HSeries":
        return cls((value,), order)

    @classmethod
    def linear(cls, a, order: int) -> "HSeries":
        """1 + a*h."""
        return cls((1, a), order)

    def _check(self, other: "HSeries"):
        if not isinstance(other, HSeries):
            raise TypeError(f"expected HSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "HSeries") -> "HSeries":
        self._check(other)
        return HSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    def __sub__(self, other: "HSeries") -> "HSeries":
        self._check(other)
        return HSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HSeries(tuple(c * other for c in self.coeffs), self.order)
        self._check(other)
        m = self.order
        out = [Fraction(0)] * (m + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(m + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return HSeries(tuple(out), m)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "HSeries":
        if e < 0:
            return series_invert(self) ** (-e)
        result = HSeries.constant(1, self.order)
        for _ in range(e):
            result = result * self
        return result

    def coefficient(self, i: int) -> Fraction:
        if not 0 <= i <= self.order:
            raise ValueError(f"coefficient index {i} outside 0..{self.order}")
        return self.coeffs[i]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ArithmeticError(f"series has non-integer coefficients: {self}")
        return tuple(int(c) for c in self.coeffs)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(f"{c}*h^{i}" if i > 1 else f"{c}*h")
        return " + ".join(terms)


def series_invert(s: HSeries) -> HSeries:
    """Multiplicative inverse modulo h^{order+1} (term-by-term division)."""
    a0 = s.coeffs[0]
    if a0 == 0:
        raise ValueError("cannot invert a series with zero constant term")
    m = s.order
    inv = [Fraction(0)] * (m + 1)
    inv[0] = 1 / a0
    for i in range(1, m + 1):
        acc = sum(s.coeffs[j] * inv[i - j] for j in range(1, i + 1))
        inv[i] = -acc / a0
    return HSeries(tuple(inv), m)


@lru_cache(maxsize=4096)
def _chern_series(n: int, degrees: tuple[int, ...]) -> HSeries:
    """(1+h)^{n+1} / prod(1 + d h), truncated at the dimension n - k (>= 0)."""
    order = n - len(degrees)
    if order < 0:
        raise ValueError(f"{len(degrees)} equations in P^{n} leave nothing to intersect")
    numerator = HSeries.linear(1, order) ** (n + 1)
    denominator = HSeries.constant(1, order)
    for d in degrees:
        denominator = denominator * HSeries.linear(d, order)
    c = numerator * series_invert(denominator)
    if not c.is_integral():
        raise ArithmeticError(f"non-integer Chern coefficient for degrees {degrees} in P^{n}: {c}")
    return c


def total_chern_ci(spec: CompleteIntersectionSpec) -> HSeries:
    return _chern_series(spec.n, spec.degrees)


def total_chern_closed_form(spec: CompleteIntersectionSpec) -> tuple[int, ...]:
    """c_i = sum_delta (-1)^delta C(n+1, i-delta) W_delta(d_1..d_k), 0 <= i <= n-k."""
    w = wronski_sequence(spec.dim, spec.degrees)
    return tuple(
        sum((-1) ** delta * binomial(spec.n + 1, i - delta) * w[delta] for delta in range(i + 1))
        for i in range(spec.dim + 1)
    )


def integrate(spec: CompleteIntersectionSpec, series: HSeries) -> Fraction:
    """Integral over V of a class in Q[h]: top coefficient times deg V (Bezout)."""
    if series.order != spec.dim:
        raise ValueError(f"series truncated at {series.order}, V has dimension {spec.dim}")
    return series.coefficient(spec.dim) * spec.total_degree


def euler_char_of(n: int, degrees) -> int:
    """chi of the complete intersection of the given degrees in P^n; dimension 0 allowed."""
    degrees = tuple(int(d) for d in degrees)
    if not degrees or any(d < 1 for d in degrees):
        raise ValueError(f"need at least one degree, all >= 1, got {degrees}")
    c = _chern_series(n, degrees)
    return int(c.coeffs[-1]) * prod(degrees)


def euler_char(spec: CompleteIntersectionSpec) -> int:
    return int(integrate(spec, total_chern_ci(spec)))


def chi_section(spec: CompleteIntersectionSpec, q: int) -> int:
    """chi(V_[q]): same multidegree regarded in P^{n-q}."""
    if not 0 <= q <= spec.dim:
        raise ValueError(f"section index q must be in 0..{spec.dim}, got {q}")
    return euler_char_of(spec.n - q, spec.degrees)


def chi_sections(spec: CompleteIntersectionSpec) -> list[int]:
    return [chi_section(spec, q) for q in range(spec.dim + 1)]


def twisted_top_chern_count(spec: CompleteIntersectionSpec, d: int) -> int:
    """Integral over V of c_{n-k}(TV (x) O(d-1)), expanded through c_i(V)."""
    d = require_foliation_degree(d)
    c = total_chern_ci(spec).as_ints()
    m = spec.dim
    total = 0
    for j in range(m + 1):
        inner = sum(
            (-1) ** (j - i) * binomial(m - i, j - i) * c[i] for i in range(j + 1)
        )
        total += inner * d ** (m - j)
    return total * spec.total_degree
