"""
Tests for the partitioned search engine.
"""

import itertools

import numpy as np
import pytest

from catalanff.exceptions import BudgetExceededError, SearchError
from catalanff.ffield import make_curve, ring_mth_roots
from catalanff.gf import FieldElement, make_field
from catalanff.polyarith import Polynomial, parse_polynomial
from catalanff.search import (
    LocalSieve,
    SearchContext,
    SearchPlan,
    WorkUnit,
    constant_pairs,
    evaluate_rhs,
    run_search,
    run_unit,
)

F3 = make_field(3)
F5 = make_field(5)


def curve_of(field, e, f_text):
    return make_curve(field, e, parse_polynomial(field, f_text))


def rhs_of(field, text):
    return parse_polynomial(field, text, variables=("Y",))


@pytest.fixture
def elliptic():
    return curve_of(F5, 2, "x^3 + x + 1")


def test_evaluate_rhs(elliptic):
    """Test rhs(Y) by Horner's rule against direct powering."""
    y = elliptic.x() + elliptic.y()
    rhs = rhs_of(F5, "Y^3 + 2*Y + 1")

    assert evaluate_rhs(rhs, y) == y ** 3 + y * 2 + 1


def test_search_plan_shells(elliptic):
    """Test that only pole orders with 3 s = 2 d(X) are planned."""
    plan = SearchPlan(elliptic, 2, rhs_of(F5, "Y^3 + 1"), 10)

    assert plan.shells == [2, 4, 6, 8, 10]
    assert plan.candidate_count == 25 + sum(elliptic.shell(s).size for s in plan.shells)
    assert [unit.index for unit in plan.units] == list(range(len(plan.units)))


def test_search_plan_skips_unattainable_targets(elliptic):
    """Test that a target pole order outside the semigroup excludes the shell."""
    plan = SearchPlan(elliptic, 2, rhs_of(F5, "Y + 1"), 6)

    assert plan.shells == [4, 6]


def test_search_plan_rejects_negative_bound(elliptic):
    """Test that a negative pole-order bound is rejected."""
    with pytest.raises(SearchError):
        SearchPlan(elliptic, 2, rhs_of(F5, "Y^3 + 1"), -1)


def test_budget_check_reports_count(elliptic):
    """Test the budget error carries the planned candidate count."""
    plan = SearchPlan(elliptic, 2, rhs_of(F5, "Y^3 + 1"), 6)

    with pytest.raises(BudgetExceededError) as excinfo:
        plan.check_budget(1000)
    assert excinfo.value.count == plan.candidate_count
    plan.check_budget(None)


def test_sieve_layer_values_match_evaluation(elliptic):
    """Test the linear evaluation of candidates against RingElement.evaluate."""
    sieve = LocalSieve(elliptic, rhs_of(F5, "Y^3 + 1"), 2)
    shell = elliptic.shell(4)
    digits = shell.digit_block()[::37]
    ell = F5.characteristic
    codes = digits.copy()
    codes[:, shell.leading_slot] += 1
    expanded = codes.reshape(len(codes), -1) % ell

    assert sieve.active
    for layer in sieve.layers:
        values = layer.evaluate(shell, expanded)
        for row, value_row in zip(digits, values):
            y = shell.element(row.tolist())
            for (x0, y0), code in zip(layer.points, value_row):
                point = (FieldElement(layer.field, x0), FieldElement(layer.field, y0))
                assert y.evaluate(*point).code == code


def test_sieve_never_rejects_a_square(elliptic):
    """Test that every candidate rejected by the sieve has no square root."""
    rhs = rhs_of(F5, "Y^3 + 1")
    sieve = LocalSieve(elliptic, rhs, 2)

    for s in (2, 3, 4):
        shell = elliptic.shell(s)
        digits = shell.digit_block()
        mask = sieve.survivors(shell, digits)
        for row in digits[~mask]:
            y = shell.element(row.tolist())
            assert ring_mth_roots(evaluate_rhs(rhs, y), 2) == []


def test_sieve_keeps_known_squares(elliptic):
    """Test that Y with rhs(Y) a perfect square survives."""
    rhs = Polynomial.monomial(F5, 2)
    sieve = LocalSieve(elliptic, rhs, 2)
    shell = elliptic.shell(3)

    assert sieve.survivors(shell, shell.digit_block()).all()


def test_sieve_inactive_when_every_element_is_a_power():
    """Test that no layer is built when m is prime to |L*| for every layer field."""
    curve = curve_of(F3, 1, "x")

    assert not LocalSieve(curve, rhs_of(F3, "Y^2 + 1"), 3).active


def test_run_unit_matches_manual_scan(elliptic):
    """Test one work unit against a manual loop over its shell."""
    rhs = rhs_of(F5, "Y^3 + 1")
    context = SearchContext(elliptic, 2, rhs, "roots", use_sieve=True)
    result = run_unit(context, WorkUnit(0, 2, ()))

    assert result.index == 0
    assert result.examined == elliptic.shell(2).size
    expected = [(x, y) for y in elliptic.shell(2).elements()
                for x in ring_mth_roots(evaluate_rhs(rhs, y), 2)]
    assert result.pairs == expected


def test_unknown_strategy_raises(elliptic):
    """Test that only the two strategies are accepted."""
    with pytest.raises(SearchError):
        SearchContext(elliptic, 2, rhs_of(F5, "Y^3 + 1"), "guess")


def test_constant_pairs_match_naive_loop(elliptic):
    """Test the constant scan against a naive double loop."""
    rhs = rhs_of(F5, "Y^3 + 1")
    pairs = constant_pairs(elliptic, 2, rhs)
    expected = {(x.code, y.code) for x, y in itertools.product(F5.elements(), repeat=2)
                if x ** 2 == rhs(y)}

    assert {(x.constant_value().code, y.constant_value().code) for x, y in pairs} == expected


def test_run_search_is_independent_of_threads(elliptic):
    """Test that two workers give the same merged result as one."""
    rhs = rhs_of(F5, "Y^3 + 1")
    serial = run_search(elliptic, 2, rhs, 4, threads=1, chunk_size=50)
    parallel = run_search(elliptic, 2, rhs, 4, threads=2, chunk_size=50)

    assert serial[0] == parallel[0]
    assert serial[1] == parallel[1]
    assert [(str(x), str(y)) for x, y in serial[2]] == [(str(x), str(y)) for x, y in parallel[2]]


def test_run_search_sieve_does_not_change_solutions():
    """Test that sieving only skips candidates."""
    curve = curve_of(F3, 1, "x")
    rhs = rhs_of(F3, "Y^2 + 1")
    with_sieve = run_search(curve, 2, rhs, 4, use_sieve=True)
    without_sieve = run_search(curve, 2, rhs, 4, use_sieve=False)

    assert [(str(x), str(y)) for x, y in with_sieve[2]] == \
        [(str(x), str(y)) for x, y in without_sieve[2]]
    assert without_sieve[1] == 0


def test_run_search_finds_squares_of_generalized_rhs():
    """Test X^2 = Y^2 * 4 where every Y gives the solutions X = +-2Y."""
    curve = curve_of(F5, 1, "x")
    rhs = rhs_of(F5, "4*Y^2")
    _, _, pairs = run_search(curve, 2, rhs, 1)

    nonconstant = [(x, y) for x, y in pairs if not y.is_constant()]
    assert len(nonconstant) == 2 * 20
    for x, y in nonconstant:
        assert x == y * 2 or x == y * 3


def test_run_search_rejects_bad_arguments(elliptic):
    """Test the rhs degree and thread count checks."""
    with pytest.raises(SearchError):
        run_search(elliptic, 2, rhs_of(F5, "3"), 4)
    with pytest.raises(SearchError):
        run_search(elliptic, 2, rhs_of(F5, "Y^3 + 1"), 4, threads=0)


def test_digit_expansion_handles_extension_fields():
    """Test sieve evaluation over an extension constant field."""
    f9 = make_field(3, 2)
    curve = curve_of(f9, 2, "x^3 + [0,1]*x + 1")
    rhs = rhs_of(f9, "Y^3 + 1")
    sieve = LocalSieve(curve, rhs, 2)
    shell = curve.shell(3)
    digits = shell.digit_block()
    mask = sieve.survivors(shell, digits)

    assert mask.shape == (shell.size,)
    for row in digits[~mask][:50]:
        y = shell.element(row.tolist())
        assert ring_mth_roots(evaluate_rhs(rhs, y), 2) == []
    assert isinstance(mask, np.ndarray)
