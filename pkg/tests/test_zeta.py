"""
Tests for the zeta module.
"""

import numpy as np
import pytest

from catalanff.exceptions import BudgetExceededError, ZetaError
from catalanff.ffield import count_points, make_curve
from catalanff.gf import make_field
from catalanff.polyarith import parse_polynomial
from catalanff.zeta import (
    LPolynomial,
    _newton_coefficients,
    class_number,
    class_number_table,
    constant_extension_class_number,
    curve_lpolynomial,
    cyclotomic_degree,
    lpoly_from_counts,
    resultant,
)

F3 = make_field(3)
F5 = make_field(5)


def curve_of(field, e, f_text):
    return make_curve(field, e, parse_polynomial(field, f_text))


@pytest.fixture
def elliptic():
    """y^2 = x^3 + x + 1 over F_5."""
    return curve_of(F5, 2, "x^3 + x + 1")


@pytest.fixture
def genus_two():
    """y^2 = x^5 - x over F_3."""
    return curve_of(F3, 2, "x^5 + 2*x")


def test_lpoly_from_counts_genus_one():
    """Test L(t) = 1 + 3t + 5t^2 from N_1 = 9."""
    lpoly = lpoly_from_counts(5, 1, [9])

    assert lpoly.coeffs == (1, 3, 5)
    assert str(lpoly) == "1 + 3t + 5t^2"
    assert class_number(lpoly) == 9


def test_predicted_count_matches_direct_count(elliptic):
    """Test that the L-polynomial predicts N_2 = 27."""
    lpoly = lpoly_from_counts(5, 1, [9])

    assert lpoly.predicted_count(1) == 9
    assert lpoly.predicted_count(2) == 27
    assert lpoly.predicted_count(2) == count_points(elliptic, 2)


def test_inconsistent_counts_are_rejected():
    """Test that a corrupted second count is rejected."""
    with pytest.raises(ZetaError, match="counts violate functional equation"):
        lpoly_from_counts(5, 1, [9, 28])


def test_weil_bound_violation_is_rejected():
    """Test that N_1 = 20 over F_5 cannot come from a genus-1 curve."""
    with pytest.raises(ZetaError, match="counts violate functional equation"):
        lpoly_from_counts(5, 1, [20])


def test_functional_equation_checked_on_construction():
    """Test that coefficients violating a_2g = q^g are rejected."""
    with pytest.raises(ZetaError, match="counts violate functional equation"):
        LPolynomial(5, 1, [1, 3, 4])
    with pytest.raises(ZetaError):
        LPolynomial(5, 1, [1, 3])


def test_newton_coefficients_must_be_integral():
    """Test that non-integral Newton coefficients are reported."""
    with pytest.raises(ZetaError, match="non-integral"):
        _newton_coefficients([1, 0], 2)


def test_missing_counts_raise():
    """Test that fewer than g counts cannot determine L."""
    with pytest.raises(ZetaError):
        lpoly_from_counts(3, 2, [4])


def test_genus_zero_class_number():
    """Test that the rational function field has L = 1 and h = 1."""
    lpoly = lpoly_from_counts(5, 0, [6])

    assert lpoly.coeffs == (1,)
    assert class_number(lpoly) == 1
    assert constant_extension_class_number(lpoly, 7) == 1


def test_genus_zero_needs_no_point_count():
    """Test that a rational function field above the point budget still has L = 1."""
    field = make_field(1000003)
    curve = make_curve(field, 1, parse_polynomial(field, "x"))

    lpoly = curve_lpolynomial(curve, point_budget=1_000_000)

    assert lpoly.coeffs == (1,)
    assert lpoly.counts == ()
    assert class_number(lpoly) == 1
    assert curve_lpolynomial(curve_of(F5, 1, "x"), point_budget=10).counts == (6,)


def test_class_number_equals_point_count_in_genus_one(elliptic):
    """Test h = N_1 for a genus-1 curve with a rational point."""
    lpoly = curve_lpolynomial(elliptic)

    assert class_number(lpoly) == count_points(elliptic, 1) == 9
    assert lpoly.counts == (9, 27)


def test_cyclotomic_degree_examples():
    """Test the multiplicative order of q modulo p."""
    assert cyclotomic_degree(5, 2) == 1
    assert cyclotomic_degree(5, 3) == 2
    assert cyclotomic_degree(5, 4) == 1
    assert cyclotomic_degree(3, 4) == 2
    assert cyclotomic_degree(2, 7) == 3


def test_cyclotomic_degree_rejects_characteristic():
    """Test that p sharing a factor with q is rejected."""
    with pytest.raises(ZetaError, match="p equals the characteristic"):
        cyclotomic_degree(25, 5)


def test_resultant():
    """Test Res(t^2 - 1, 5t^2 + 3t + 1) = L(1) L(-1) = 27."""
    assert resultant([1, 0, -1], [5, 3, 1]) == 27
    assert resultant([1, -2], [1, 0, -4]) == 0


def test_constant_extension_class_number():
    """Test h_2 = 27 and h_1 = h for L = 1 + 3t + 5t^2."""
    lpoly = lpoly_from_counts(5, 1, [9])

    assert constant_extension_class_number(lpoly, 1) == 9
    assert constant_extension_class_number(lpoly, 2) == 27
    assert class_number_table(lpoly, [2, 1, 2]) == {1: 9, 2: 27}


def test_base_change_of_l_polynomial():
    """Test the L-polynomial over F_25 computed from power sums."""
    lpoly = lpoly_from_counts(5, 1, [9])
    rebased = lpoly.base_change(2)

    assert rebased.q == 25
    assert rebased.coeffs == (1, 1, 25)
    assert class_number(rebased) == 27


def test_resultant_matches_rebased_pipeline(elliptic):
    """Test h_n by resultant against point counting on the re-based curve."""
    lpoly = curve_lpolynomial(elliptic)

    for n in (2, 3):
        rebased = curve_lpolynomial(elliptic.base_change(n))
        assert rebased == lpoly.base_change(n)
        assert class_number(rebased) == constant_extension_class_number(lpoly, n)


def test_genus_two_pipeline(genus_two):
    """Test the genus-2 L-polynomial against its self-check counts and a base change."""
    lpoly = curve_lpolynomial(genus_two)

    assert lpoly.genus == 2
    assert len(lpoly.counts) == 4
    for k, n_k in enumerate(lpoly.counts, start=1):
        assert lpoly.predicted_count(k) == n_k
        assert lpoly.weil_bound_holds(k, n_k)
    assert lpoly.satisfies_riemann_hypothesis()
    rebased = curve_lpolynomial(genus_two.base_change(2))
    assert class_number(rebased) == constant_extension_class_number(lpoly, 2)


def test_reciprocal_roots_have_absolute_value_sqrt_q():
    """Test the Riemann hypothesis check on L = 1 + 3t + 5t^2."""
    lpoly = lpoly_from_counts(5, 1, [9])
    roots = lpoly.reciprocal_roots()

    assert len(roots) == 2
    assert np.allclose(np.abs(roots), np.sqrt(5))
    assert lpoly.satisfies_riemann_hypothesis()


def test_point_budget_limits_counting(genus_two):
    """Test that the budget stops self-check counts and rejects too large N_g."""
    lpoly = curve_lpolynomial(genus_two, point_budget=27)
    assert len(lpoly.counts) == 3

    with pytest.raises(BudgetExceededError):
        curve_lpolynomial(genus_two, point_budget=5)


def test_to_dict():
    """Test the dictionary form used by the lpoly command."""
    lpoly = lpoly_from_counts(5, 1, [9])

    assert lpoly.to_dict() == {"q": 5, "genus": 1, "coeffs": [1, 3, 5], "h": 9}
