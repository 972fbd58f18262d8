import pytest
from hypothesis import given
from hypothesis import strategies as st

from analysis.chern import CompleteIntersectionSpec, chi_section, euler_char
from analysis.invariants import (
    SingCountPolynomial, lefschetz_coefficient_check, pencil_relation_check, polar_class,
    polar_classes_severi_todd, polar_classes_via_chern, polar_relations_check,
    projective_space_sing_count, sing_count_all_forms, sing_count_euler, sing_count_poly,
    sing_count_unshifted, sing_count_wronski,
)

from tests.strategies import complete_intersections


@pytest.mark.parametrize("n, degrees, expected", [
    (3, (2, 2), (4, 8)),
    (2, (3,), (3, 6)),
    (3, (2,), (2, 2, 2)),
    (4, (1, 1), (1, 0, 0)),
])
def test_polar_classes_both_paths(n, degrees, expected):
    spec = CompleteIntersectionSpec(n, degrees)
    assert polar_classes_severi_todd(spec).rho == expected
    assert polar_classes_via_chern(spec).rho == expected


def test_polar_class_index_range():
    spec = CompleteIntersectionSpec(3, (2, 2))
    assert polar_class(spec, 1) == 8
    with pytest.raises(ValueError):
        polar_class(spec, 2)


@pytest.mark.parametrize("n, degrees, d, expected", [
    (3, (2, 2), 2, 4),
    (2, (3,), 2, 3),
    (3, (2,), 3, 20),
    (2, (4,), 3, 4),
])
def test_singularity_count(n, degrees, d, expected):
    spec = CompleteIntersectionSpec(n, degrees)
    forms = sing_count_all_forms(spec, d)
    assert forms["agree"]
    assert forms["wronski"] == forms["euler"] == forms["chern"] == forms["unshifted"] == expected


def test_count_polynomial_of_quadric_surface():
    poly = sing_count_poly(CompleteIntersectionSpec(3, (2,)))
    assert poly.coeffs == (2, 0, 2)
    assert poly.evaluate(3) == 20
    assert str(poly) == "2*d^2 + 0*d^1 + 2*d^0"


def test_count_polynomial_horner():
    assert SingCountPolynomial((1, -4, 11, -24)).evaluate(3) == 0


def test_count_rejects_degree_one():
    with pytest.raises(ValueError):
        sing_count_wronski(CompleteIntersectionSpec(3, (2,)), 1)


def test_linear_subspace_matches_projective_space():
    for d in range(2, 7):
        assert sing_count_wronski(CompleteIntersectionSpec(5, (1, 1)), d) == projective_space_sing_count(3, d)
    assert projective_space_sing_count(2, 2) == 7


def test_count_can_vanish_above_the_degree_bound():
    # five quadrics in P^8: d = 3 meets the bound yet N = 0
    spec = CompleteIntersectionSpec(8, (2, 2, 2, 2, 2))
    assert sing_count_wronski(spec, 3) == 0
    assert sing_count_all_forms(spec, 3)["agree"]


def test_lefschetz_index_range():
    spec = CompleteIntersectionSpec(4, (2,))
    assert all(lefschetz_coefficient_check(spec, j) for j in range(1, 4))
    with pytest.raises(ValueError):
        lefschetz_coefficient_check(spec, 0)
    with pytest.raises(ValueError):
        lefschetz_coefficient_check(spec, 4)


@pytest.mark.parametrize("n, degrees", [(2, (3,)), (3, (2, 2)), (3, (4,)), (5, (2, 3))])
def test_pencil_relation(n, degrees):
    assert pencil_relation_check(CompleteIntersectionSpec(n, degrees))


def test_euler_form_leading_coefficient_is_degree():
    spec = CompleteIntersectionSpec(4, (3,))
    # N(d) ~ deg(V) d^(n-k) for large d
    assert round(sing_count_euler(spec, 10 ** 6) / 10 ** 18) == 3


@given(spec=complete_intersections(), d=st.integers(min_value=2, max_value=6))
def test_all_forms_agree(spec, d):
    assert sing_count_all_forms(spec, d)["agree"]
    assert sing_count_unshifted(spec, d) == sing_count_wronski(spec, d)


@given(spec=complete_intersections())
def test_polar_relations_and_paths(spec):
    assert polar_classes_severi_todd(spec) == polar_classes_via_chern(spec)
    assert polar_relations_check(spec)
    assert pencil_relation_check(spec)


@given(spec=complete_intersections())
def test_alternating_polar_sum_is_euler_characteristic(spec):
    # j = n-k of the Lefschetz identity: sum (-1)^i rho_i = chi(V) - chi(V_[1])
    rho = polar_classes_severi_todd(spec)
    assert lefschetz_coefficient_check(spec, spec.dim)
    assert sum((-1) ** i * r for i, r in enumerate(rho)) == euler_char(spec) - chi_section(spec, 1)
