"""Plain-text polynomial format.

One polynomial per line; blank lines and text after '#' are ignored. A line
is an arithmetic expression in z1, z2, ... (1-based) with integer or p/q
coefficients, '*', '+', '-', '/' by constants and '^' (or '**') for
nonnegative integer powers:

    3/2 * z1^2 * z3 - z2 + 1

sympy reads the expression and expands it over QQ. ``str(MultiPoly)``
writes the same format, so format_poly output always parses back.
"""

import logging
import re
from fractions import Fraction
from pathlib import Path
from tokenize import TokenError

from sympy import Expr, Float, Integer, Poly, Rational, S, Symbol, symbols
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.polyerrors import BasePolynomialError

from verifier.polynomials import MultiPoly

logger = logging.getLogger(__name__)

_VAR = re.compile(r"z([1-9]\d*)")

# names the parser may emit; everything else becomes a Symbol and is rejected below
_GLOBALS = {
    "Integer": Integer,
    "Rational": Rational,
    "Float": Float,
    "Symbol": Symbol,
    "__builtins__": {},
}


def _parse_expr(text: str) -> tuple[str, Expr]:
    source = text.split("#", 1)[0].strip()
    if not source:
        raise ValueError("empty polynomial")
    try:
        expr = parse_expr(source.replace("^", "**"), global_dict=dict(_GLOBALS))
    except (SyntaxError, TokenError, TypeError, NameError, AttributeError) as e:
        raise ValueError(f"cannot parse {source!r}: {e}") from e
    if not isinstance(expr, Expr):
        raise ValueError(f"not a polynomial expression: {source!r}")
    if expr.has(S.ComplexInfinity, S.NaN, S.Infinity, S.NegativeInfinity):
        raise ValueError(f"division by zero in {source!r}")
    if expr.atoms(Float):
        raise ValueError(f"exact coefficients only (write p/q) in {source!r}")
    return source, expr


def _max_var(source: str, expr: Expr) -> int:
    indices = []
    for sym in expr.free_symbols:
        m = _VAR.fullmatch(sym.name)
        if not m:
            raise ValueError(f"unknown variable {sym.name} in {source!r}; use z1, z2, ...")
        indices.append(int(m.group(1)))
    return max(indices, default=0)


def _to_fraction(value) -> Fraction:
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def _to_multipoly(source: str, expr: Expr, num_vars: int) -> MultiPoly:
    top = _max_var(source, expr)
    if top > num_vars:
        raise ValueError(f"variable z{top} outside z1..z{num_vars} in {source!r}")
    if num_vars == 0:
        if not expr.is_Rational:
            raise ValueError(f"not a rational constant: {source!r}")
        return MultiPoly.constant(_to_fraction(expr), 0)
    gens = symbols(f"z1:{num_vars + 1}")
    try:
        poly = Poly(expr, *gens, domain="QQ")
    except BasePolynomialError as e:
        raise ValueError(f"not a polynomial over Q: {source!r} ({e})") from e
    return MultiPoly(num_vars, {exp: _to_fraction(c) for exp, c in poly.terms()})


def parse_poly(text: str, num_vars: int | None = None) -> MultiPoly:
    """Parse one polynomial; num_vars defaults to the largest index seen."""
    source, expr = _parse_expr(text)
    if num_vars is None:
        num_vars = _max_var(source, expr)
    return _to_multipoly(source, expr, num_vars)


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_polys(text: str, num_vars: int | None = None) -> list[MultiPoly]:
    """Every non-blank line is one polynomial; all share one variable count."""
    parsed = [_parse_expr(line) for line in _content_lines(text)]
    if num_vars is None:
        num_vars = max((_max_var(source, expr) for source, expr in parsed), default=0)
    return [_to_multipoly(source, expr, num_vars) for source, expr in parsed]


def read_polys(path: str | Path, num_vars: int | None = None) -> list[MultiPoly]:
    path = Path(path)
    polys = parse_polys(path.read_text(), num_vars)
    logger.debug(f"read {len(polys)} polynomials from {path}")
    return polys


def format_poly(poly: MultiPoly) -> str:
    return str(poly)
