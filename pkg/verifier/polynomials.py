"""Sparse multivariate polynomials with exact rational coefficients.

Terms are stored as {exponent tuple: Fraction}; zero coefficients are never
stored. Variables are z1..zN in text form, indices 0..N-1 in code.
"""

from fractions import Fraction
from itertools import combinations_with_replacement
from numbers import Number, Rational


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value)
    raise TypeError(f"exact coefficients only, got {type(value).__name__}")


class MultiPoly:

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: dict | None = None):
        if num_vars < 0:
            raise ValueError(f"num_vars must be >= 0, got {num_vars}")
        self.num_vars = num_vars
        self.terms: dict[tuple[int, ...], Fraction] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != num_vars:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {num_vars}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = _coerce(coeff)
            if c != 0:
                self.terms[exp] = self.terms.get(exp, Fraction(0)) + c
                if self.terms[exp] == 0:
                    del self.terms[exp]

    # ── constructors ──────────────────────────────────────────────

    @classmethod
    def zero(cls, num_vars: int) -> "MultiPoly":
        return cls(num_vars)

    @classmethod
    def constant(cls, value, num_vars: int) -> "MultiPoly":
        return cls(num_vars, {(0,) * num_vars: value})

    @classmethod
    def variable(cls, index: int, num_vars: int) -> "MultiPoly":
        if not 0 <= index < num_vars:
            raise ValueError(f"variable index {index} outside 0..{num_vars - 1}")
        exp = [0] * num_vars
        exp[index] = 1
        return cls(num_vars, {tuple(exp): 1})

    @classmethod
    def gens(cls, num_vars: int) -> list["MultiPoly"]:
        return [cls.variable(i, num_vars) for i in range(num_vars)]

    @classmethod
    def monomials_up_to(cls, degree: int, num_vars: int) -> list[tuple[int, ...]]:
        """Exponent vectors of every monomial of total degree <= degree."""
        out = []
        for deg in range(degree + 1):
            for picks in combinations_with_replacement(range(num_vars), deg):
                exp = [0] * num_vars
                for i in picks:
                    exp[i] += 1
                out.append(tuple(exp))
        return out

    # ── arithmetic ────────────────────────────────────────────────

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.num_vars != self.num_vars:
                raise ValueError(
                    f"variable-count mismatch: {self.num_vars} vs {other.num_vars}"
                )
            return other
        return MultiPoly.constant(_coerce(other), self.num_vars)

    def __add__(self, other) -> "MultiPoly":
        other = self._lift(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, Fraction(0)) + c
        return MultiPoly(self.num_vars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        other = self._lift(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.num_vars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultiPoly":
        if e < 0:
            raise ValueError("negative powers of polynomials are not polynomials")
        result = MultiPoly.constant(1, self.num_vars)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c) -> "MultiPoly":
        c = _coerce(c)
        return MultiPoly(self.num_vars, {e: v * c for e, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.num_vars == other.num_vars and self.terms == other.terms
        if isinstance(other, Number):
            return self == MultiPoly.constant(_coerce(other), self.num_vars)
        return NotImplemented

    __hash__ = None

    # ── structure ─────────────────────────────────────────────────

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, degree: int) -> "MultiPoly":
        return MultiPoly(self.num_vars, {e: c for e, c in self.terms.items() if sum(e) == degree})

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {sum(e) for e in self.terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return degree is None or degrees == {degree}

    def coefficient(self, exp) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def partial_derivative(self, index: int) -> "MultiPoly":
        if not 0 <= index < self.num_vars:
            raise ValueError(f"variable index {index} outside 0..{self.num_vars - 1}")
        out = {}
        for e, c in self.terms.items():
            if e[index] == 0:
                continue
            new = list(e)
            new[index] -= 1
            out[tuple(new)] = c * e[index]
        return MultiPoly(self.num_vars, out)

    def gradient(self) -> list["MultiPoly"]:
        return [self.partial_derivative(i) for i in range(self.num_vars)]

    def divide_by_variable(self, index: int) -> "MultiPoly | None":
        """self / z_index when every term contains z_index, else None."""
        out = {}
        for e, c in self.terms.items():
            if e[index] == 0:
                return None
            new = list(e)
            new[index] -= 1
            out[tuple(new)] = c
        return MultiPoly(self.num_vars, out)

    def homogenize(self, degree: int, position: int) -> "MultiPoly":
        """Insert a new variable at `position` raising every term to total degree `degree`."""
        if degree < self.degree:
            raise ValueError(f"cannot homogenize degree-{self.degree} polynomial to degree {degree}")
        if not 0 <= position <= self.num_vars:
            raise ValueError(f"insert position {position} outside 0..{self.num_vars}")
        out = {}
        for e, c in self.terms.items():
            out[e[:position] + (degree - sum(e),) + e[position:]] = c
        return MultiPoly(self.num_vars + 1, out)

    def dehomogenize(self, position: int) -> "MultiPoly":
        """Set the variable at `position` to 1 and drop it."""
        if not 0 <= position < self.num_vars:
            raise ValueError(f"variable index {position} outside 0..{self.num_vars - 1}")
        out: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            key = e[:position] + e[position + 1:]
            out[key] = out.get(key, Fraction(0)) + c
        return MultiPoly(self.num_vars - 1, out)

    # ── evaluation ────────────────────────────────────────────────

    def evaluate(self, point):
        """Value at `point`: exact for rational input, complex/float otherwise."""
        if len(point) != self.num_vars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.num_vars}")
        exact = all(isinstance(x, Rational) for x in point)
        total = Fraction(0) if exact else 0j
        for e, c in self.terms.items():
            term = c if exact else complex(c)
            for x, k in zip(point, e):
                if k:
                    term *= x ** k
            total += term
        return total

    def __call__(self, *point):
        return self.evaluate(point)

    # ── text form ─────────────────────────────────────────────────

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exp, c in self.sorted_terms():
            factors = []
            for i, k in enumerate(exp):
                if k == 1:
                    factors.append(f"z{i + 1}")
                elif k > 1:
                    factors.append(f"z{i + 1}^{k}")
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = " * ".join(factors)
            else:
                body = " * ".join([str(magnitude), *factors])
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"MultiPoly({self.num_vars}, '{self}')"
