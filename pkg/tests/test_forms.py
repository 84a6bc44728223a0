from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from tricoble.fields import GF, QQ
from tricoble.forms import (HomogeneousForm, InexactDivisionError,
                            exact_divide, monomial_exponents,
                            restrict_to_line, restrict_to_plane)
from tricoble.projgeom import ProjPoint

CUBIC_EXPS = monomial_exponents(4, 3)


def form_from_coeffs(coeffs, nvars=4, degree=3):
    return HomogeneousForm.from_vector(nvars, degree, coeffs)


coeff_vec = st.lists(st.integers(min_value=-9, max_value=9), min_size=20,
                     max_size=20)
point4 = st.lists(st.integers(min_value=-9, max_value=9), min_size=4,
                  max_size=4)


def test_monomial_exponents_shape():
    assert len(CUBIC_EXPS) == 20
    assert all(sum(e) == 3 and len(e) == 4 for e in CUBIC_EXPS)
    assert len(set(CUBIC_EXPS)) == 20
    assert len(monomial_exponents(3, 2)) == 6
    assert len(monomial_exponents(4, 2)) == 10


@given(coeff_vec)
def test_vector_round_trip(coeffs):
    f = form_from_coeffs(coeffs)
    assert [int(c) for c in f.coefficient_vector()] == coeffs


@given(coeff_vec, point4)
def test_euler_identity(coeffs, point):
    # sum_i x_i dF/dx_i = deg(F) * F for homogeneous F
    f = form_from_coeffs(coeffs)
    pt = [Fraction(x) for x in point]
    grads = [g.evaluate(pt) for g in f.gradient()]
    assert sum(x * g for x, g in zip(pt, grads)) == 3 * f.evaluate(pt)


def test_evaluate_known_cubic():
    # x^3 + 2 y^2 w at (1, 2, 0, 3)
    terms = {(3, 0, 0, 0): 1, (0, 2, 0, 1): 2}
    f = HomogeneousForm(4, 3, terms)
    assert f.evaluate([1, 2, 0, 3]) == 1 + 2 * 4 * 3


def test_fixture_incidence_values(fixture_config):
    q1, q2, q3 = fixture_config.quadrics
    p1 = fixture_config.points["p1"]
    assert q1.evaluate(p1) == QQ.zero
    assert q2.evaluate(p1) == QQ.zero
    assert q3.evaluate(p1) == QQ.of(-175)


def test_fixture_gradient_direction(fixture_config):
    q1 = fixture_config.quadrics[0]
    p1 = fixture_config.points["p1"]
    g = [part.evaluate(p1) for part in q1.gradient()]
    n = (9, 4, 0, -5)
    for i in range(4):
        for j in range(i + 1, 4):
            assert g[i] * n[j] == g[j] * n[i]


@given(coeff_vec, coeff_vec)
def test_addition_is_coefficientwise(a, b):
    fa, fb = form_from_coeffs(a), form_from_coeffs(b)
    total = fa + fb
    assert [int(c) for c in total.coefficient_vector()] == [
        x + y for x, y in zip(a, b)]
    assert (fa - fa).is_zero


def test_multiplication_degree_and_values():
    x = HomogeneousForm(4, 1, {(1, 0, 0, 0): 1})
    y = HomogeneousForm(4, 1, {(0, 1, 0, 0): 1})
    xy = x * y
    assert xy.degree == 2
    assert xy.evaluate([3, 5, 0, 0]) == 15


def test_shape_mismatch_raises():
    a = HomogeneousForm(4, 1, {(1, 0, 0, 0): 1})
    b = HomogeneousForm(3, 1, {(1, 0, 0): 1})
    with pytest.raises(ValueError):
        a + b


def independent(*rows):
    from tricoble.fields import QQ as F
    from tricoble.linalg import Matrix, rank
    return rank(Matrix([list(r) for r in rows], F)) == len(rows)


@given(coeff_vec, point4, point4,
       st.integers(min_value=-5, max_value=5),
       st.integers(min_value=-5, max_value=5))
def test_restrict_to_line_agrees_with_direct_evaluation(coeffs, a, b, u, v):
    assume(independent(a, b))
    f = form_from_coeffs(coeffs)
    g = restrict_to_line(f, a, b)
    direct = f.evaluate([u * x + v * y for x, y in zip(a, b)])
    assert g.evaluate([u, v]) == direct


@given(coeff_vec, point4, point4, point4,
       st.lists(st.integers(min_value=-4, max_value=4), min_size=3,
                max_size=3))
def test_restrict_to_plane_agrees_with_direct_evaluation(coeffs, a, b, c, uvw):
    assume(independent(a, b, c))
    f = form_from_coeffs(coeffs)
    g = restrict_to_plane(f, [a, b, c])
    u, v, w = uvw
    direct = f.evaluate([u * x + v * y + w * z for x, y, z in zip(a, b, c)])
    assert g.evaluate([u, v, w]) == direct


def test_restrict_to_line_rejects_coincident_endpoints():
    f = form_from_coeffs([1] + [0] * 19)
    with pytest.raises(ValueError):
        restrict_to_line(f, [1, 2, 3, 4], [2, 4, 6, 8])


def test_exact_divide_on_coefficient_lists():
    # (x^2 - 1) / (x - 1) = x + 1, coefficients ascending
    assert exact_divide([-1, 0, 1], [-1, 1]) == (1, 1)
    assert exact_divide([0, 0, 6], [0, 2]) == (0, 3)
    with pytest.raises(InexactDivisionError):
        exact_divide([1, 0, 1], [-1, 1])


def test_normalized_clears_denominators():
    f = HomogeneousForm(2, 2, {(2, 0): Fraction(1, 2), (0, 2): Fraction(1, 3)})
    g = f.normalized()
    assert [int(c) for c in g.coefficient_vector()] == [3, 0, 2]


def test_forms_over_prime_field():
    K = GF(5)
    f = HomogeneousForm.from_vector(2, 2, [1, 2, 3], K)
    assert f.evaluate([K.one, K.one]) == K.of(6)
    assert f.evaluate([K.of(2), K.one]) == K.of(4 + 4 + 3)
