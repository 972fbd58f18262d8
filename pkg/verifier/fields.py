"""Polynomial vector fields: affine charts, degree decomposition and homogenization.

An affine field X = sum_j X_j + g R on C^n (R radial, X_j homogeneous of
degree j, g homogeneous of degree d) extends to a degree-d foliation of P^n.
The chart index says which homogeneous coordinate was set to 1.
"""

import logging
from dataclasses import dataclass

from verifier.polynomials import MultiPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AffineVectorField:
    components: tuple[MultiPoly, ...]
    chart: int | None = None

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        n = len(comps)
        if n < 1:
            raise ValueError("vector field needs at least one component")
        for i, c in enumerate(comps):
            if c.num_vars != n:
                raise ValueError(
                    f"component {i + 1} has {c.num_vars} variables, field has {n} components"
                )
        chart = n if self.chart is None else self.chart
        if not 0 <= chart <= n:
            raise ValueError(f"chart index {chart} outside 0..{n}")
        object.__setattr__(self, "chart", chart)

    @property
    def n(self) -> int:
        return len(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __str__(self):
        return "\n".join(str(c) for c in self.components)


@dataclass(frozen=True)
class FoliationDecomposition:
    """X = X_0 + ... + X_d + g R with every part exact."""

    d: int
    g: MultiPoly
    parts: tuple[tuple[MultiPoly, ...], ...]


@dataclass(frozen=True)
class HomogeneousField:
    """Y_0..Y_n on C^{n+1}, all homogeneous of one degree d."""

    components: tuple[MultiPoly, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        size = len(comps)
        if size < 2:
            raise ValueError("homogeneous field needs at least two components")
        if any(c.num_vars != size for c in comps):
            raise ValueError(f"every component must have {size} variables")
        if all(c.is_zero() for c in comps):
            raise ValueError("zero homogeneous field")
        degrees = {c.degree for c in comps if not c.is_zero()}
        if len(degrees) != 1 or not all(c.is_homogeneous() for c in comps):
            raise ValueError(f"components are not homogeneous of one degree: {sorted(degrees)}")

    @property
    def num_vars(self) -> int:
        return len(self.components)

    @property
    def degree(self) -> int:
        return next(c.degree for c in self.components if not c.is_zero())

    def chart_field(self, chart: int) -> AffineVectorField:
        """The field in the chart X_chart = 1: (Y_i - z_i Y_c)(z, 1) for i != chart."""
        size = self.num_vars
        if not 0 <= chart < size:
            raise ValueError(f"chart index {chart} outside 0..{size - 1}")
        zs = MultiPoly.gens(size)
        y_c = self.components[chart]
        comps = [
            (self.components[i] - zs[i] * y_c).dehomogenize(chart)
            for i in range(size) if i != chart
        ]
        return AffineVectorField(tuple(comps), chart)


def apply_field(X: AffineVectorField, F: MultiPoly) -> MultiPoly:
    """X(F) = sum_i X_i dF/dz_i."""
    if F.num_vars != X.n:
        raise ValueError(f"polynomial has {F.num_vars} variables, field has {X.n}")
    total = MultiPoly.zero(X.n)
    for i, comp in enumerate(X.components):
        if not comp.is_zero():
            total = total + comp * F.partial_derivative(i)
    return total


def _radial_coefficient(part: list[MultiPoly]) -> MultiPoly | None:
    """h with part = h * R (R = sum z_i d/dz_i), or None."""
    n = len(part)
    h = None
    for i, p in enumerate(part):
        if p.is_zero():
            continue
        q = p.divide_by_variable(i)
        if q is None:
            return None
        h = q
        break
    if h is None:
        return MultiPoly.zero(n)
    zs = MultiPoly.gens(n)
    if all(p == h * zs[i] for i, p in enumerate(part)):
        return h
    return None


def foliation_degree(X: AffineVectorField, degree: int | None = None) -> FoliationDecomposition:
    top = max(c.degree for c in X.components)
    if top < 0:
        raise ValueError("zero vector field")

    if degree is None:
        h = _radial_coefficient([c.homogeneous_part(top) for c in X.components])
        if h is not None and not h.is_zero() and top >= 1:
            d, g = top - 1, h
        else:
            d, g = top, MultiPoly.zero(X.n)
    else:
        d = int(degree)
        if top > d + 1:
            raise ValueError(f"field has a degree-{top} part, too high for foliation degree {d}")
        if top == d + 1:
            h = _radial_coefficient([c.homogeneous_part(top) for c in X.components])
            if h is None:
                raise ValueError(f"degree-{top} part is not radial, so the foliation degree exceeds {d}")
            g = h
        else:
            g = MultiPoly.zero(X.n)
        if g.is_zero() and _radial_coefficient([c.homogeneous_part(d) for c in X.components]) is not None:
            raise ValueError("degree representation not reduced")

    if d < 1:
        raise ValueError(f"foliation degree {d} is below 1")
    zs = MultiPoly.gens(X.n)
    reduced = [c - g * zs[i] for i, c in enumerate(X.components)]
    parts = tuple(tuple(c.homogeneous_part(j) for c in reduced) for j in range(d + 1))
    logger.debug(f"foliation degree {d}, g = {g}")
    return FoliationDecomposition(d=d, g=g, parts=parts)


def homogenize_field(X: AffineVectorField, degree: int | None = None) -> HomogeneousField:
    """Degree-d homogeneous field on C^{n+1} whose chart X.chart restriction is X.

    The chart coordinate gets -g; every other one the degree-d homogenization
    of X_i - g z_i.
    """
    dec = foliation_degree(X, degree)
    c = X.chart
    zs = MultiPoly.gens(X.n)
    comps = [(X.components[i] - dec.g * zs[i]).homogenize(dec.d, c) for i in range(X.n)]
    y_chart = (-dec.g).homogenize(dec.d, c)
    comps.insert(c, y_chart)
    return HomogeneousField(tuple(comps))


def homogenize_equations(Fs: list[MultiPoly], chart: int) -> list[MultiPoly]:
    """Each affine equation homogenized to its own degree at the chart coordinate."""
    return [F.homogenize(F.degree, chart) for F in Fs]
