from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from verifier.parser import format_poly, parse_poly, parse_polys, read_polys
from verifier.polynomials import MultiPoly

z1, z2, z3 = MultiPoly.gens(3)

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)
exponents = st.tuples(*[st.integers(min_value=0, max_value=3)] * 3)
polys3 = st.dictionaries(exponents, coefficients, max_size=6).map(lambda t: MultiPoly(3, t))


def test_zero_coefficients_are_dropped():
    p = MultiPoly(2, {(1, 0): 0, (0, 1): Fraction(1, 2)})
    assert p.terms == {(0, 1): Fraction(1, 2)}
    assert (z1 - z1).is_zero()
    assert MultiPoly.zero(3).degree == -1


def test_constructor_validation():
    with pytest.raises(ValueError):
        MultiPoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        MultiPoly(2, {(1, -1): 1})
    with pytest.raises(TypeError):
        MultiPoly(2, {(1, 0): 0.5})
    with pytest.raises(ValueError):
        MultiPoly.variable(3, 3)


def test_arithmetic():
    p = (z1 + 2 * z2) * (z1 - 2 * z2)
    assert p == z1 ** 2 - 4 * z2 ** 2
    assert 1 - z3 == -(z3 - 1)
    assert (z1 + 1) ** 3 == z1 ** 3 + 3 * z1 ** 2 + 3 * z1 + 1
    assert MultiPoly.constant(5, 3) == 5
    assert z1 * Fraction(1, 2) == MultiPoly(3, {(1, 0, 0): Fraction(1, 2)})


def test_mixed_variable_counts_rejected():
    with pytest.raises(ValueError):
        z1 + MultiPoly.variable(0, 2)


def test_negative_power_rejected():
    with pytest.raises(ValueError):
        z1 ** -1


def test_degree_and_homogeneity():
    p = z1 ** 2 * z3 + z2 ** 3 - z1 + 7
    assert p.degree == 3
    assert p.homogeneous_part(3) == z1 ** 2 * z3 + z2 ** 3
    assert p.homogeneous_part(1) == -z1
    assert not p.is_homogeneous()
    assert p.homogeneous_part(3).is_homogeneous(3)
    assert not p.homogeneous_part(3).is_homogeneous(2)
    assert MultiPoly.zero(3).is_homogeneous(5)


def test_partial_derivatives():
    p = z1 ** 3 * z2 - 4 * z2 * z3 + z3
    assert p.gradient() == [3 * z1 ** 2 * z2, z1 ** 3 - 4 * z3, 1 - 4 * z2]
    with pytest.raises(ValueError):
        p.partial_derivative(3)


def test_divide_by_variable():
    assert (z1 * z2 + z1 ** 2).divide_by_variable(0) == z2 + z1
    assert (z1 * z2 + z3).divide_by_variable(0) is None


def test_homogenize_and_dehomogenize():
    p = z1 ** 2 + z2 - 3
    h = p.homogenize(2, 3)
    x1, x2, x3, x4 = MultiPoly.gens(4)
    assert h == x1 ** 2 + x2 * x4 - 3 * x4 ** 2
    assert h.dehomogenize(3) == p
    with pytest.raises(ValueError):
        p.homogenize(1, 0)


def test_monomials_up_to():
    monomials = MultiPoly.monomials_up_to(2, 3)
    assert len(monomials) == 10
    assert (0, 0, 0) in monomials and (1, 0, 1) in monomials


def test_evaluation():
    p = z1 ** 2 - Fraction(1, 2) * z2 * z3
    assert p.evaluate((Fraction(1), 2, 3)) == Fraction(-2)
    assert isinstance(p.evaluate((1, 2, 3)), Fraction)
    assert p(1j, 0, 5) == pytest.approx(-1)
    with pytest.raises(ValueError):
        p.evaluate((1, 2))


def test_text_form():
    p = Fraction(3, 2) * z1 ** 2 * z3 - z2 + 1
    assert str(p) == "3/2 * z1^2 * z3 - z2 + 1"
    assert str(-z1 * z2) == "-z1 * z2"
    assert str(MultiPoly.zero(3)) == "0"
    assert format_poly(p) == str(p)


@pytest.mark.parametrize("text, expected", [
    ("z1 + z2", z1 + z2),
    ("-z1^2*z3 + 2/3", -z1 ** 2 * z3 + Fraction(2, 3)),
    ("z1 * z1 * 4", 4 * z1 ** 2),
    ("z3 - z3", MultiPoly.zero(3)),
    ("  z2^2 - 1   # unit circle", z2 ** 2 - 1),
])
def test_parse_poly(text, expected):
    assert parse_poly(text, 3) == expected


def test_parse_infers_variable_count():
    assert parse_poly("z4 + 1").num_vars == 4
    assert parse_poly("7").num_vars == 0


@pytest.mark.parametrize("text", [
    "", "z1 +", "2 z1", "z1^(1/2)", "z1^-1", "1/z1", "z1 ^ z2", "x1 + 1", "z0", "z1 + z5",
    "0.5 * z1", "sqrt(2) * z1", "(z1, z2)",
])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_poly(text, 3)


@pytest.mark.parametrize("text", ["1/0 * z1", "z1 + 3/0", "z2 / (z1 - z1)"])
def test_parse_rejects_zero_denominators(text):
    with pytest.raises(ValueError, match="division by zero"):
        parse_poly(text, 3)


def test_parse_expands_products_and_powers():
    assert parse_poly("(z1 + 1)^2 - z2 ** 3 / 4", 3) == z1 ** 2 + 2 * z1 + 1 - Fraction(1, 4) * z2 ** 3


def test_parse_polys_shares_variable_count():
    polys = parse_polys("z1 + 1\n\n# comment only\nz3^2\n")
    assert [p.num_vars for p in polys] == [3, 3]
    assert polys[1] == MultiPoly(3, {(0, 0, 2): 1})


def test_read_polys(tmp_path):
    path = tmp_path / "system.txt"
    path.write_text("z1*z2 - 1\nz2^3\n")
    assert read_polys(path) == [MultiPoly(2, {(1, 1): 1, (0, 0): -1}), MultiPoly(2, {(0, 3): 1})]


@given(p=polys3)
def test_formatted_text_parses_back(p):
    assert parse_poly(format_poly(p), 3) == p


@given(p=polys3, q=polys3)
def test_product_rule(p, q):
    for i in range(3):
        assert (p * q).partial_derivative(i) == p.partial_derivative(i) * q + p * q.partial_derivative(i)
