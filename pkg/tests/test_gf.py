"""
Tests for the finite field module.
"""

import pickle

import numpy as np
import pytest

from catalanff.exceptions import CurveSpecError, FieldError
from catalanff.gf import (
    embed,
    extension_field,
    field_arith,
    format_element,
    make_field,
    multiplicative_order,
    parse_element,
    primitive_root_of_unity,
)


def test_prime_field_construction():
    """Test that a = 1 gives the prime field with the identity modulus."""
    field = make_field(5, 1)

    assert field.cardinality == 5
    assert field.modulus == (0, 1)
    assert field.is_prime_field
    assert repr(field) == "GF(5)"


def test_canonical_modulus_of_f9():
    """Test that F_9 uses the least monic irreducible quadratic T^2 + 1."""
    field = make_field(3, 2)

    assert field.modulus == (1, 0, 1)
    assert field.cardinality == 9
    assert repr(field) == "GF(3^2)"


def test_make_field_is_deterministic():
    """Test that repeated construction returns the identical field."""
    assert make_field(3, 2) is make_field(3, 2)
    assert make_field(2, 4).modulus == make_field(2, 4).modulus


def test_make_field_rejects_composite_characteristic():
    """Test that a non-prime characteristic is rejected."""
    with pytest.raises(FieldError, match="characteristic not prime"):
        make_field(4, 1)


def test_field_arith_examples():
    """Test inversion and powering in F_5."""
    field = make_field(5)

    assert field_arith("inv", field.element(2)) == 3
    assert field_arith("pow", field.element(2), 4) == 1
    assert field_arith("add", field.element(3), field.element(4)) == 2
    assert field_arith("mul", field.element(3), field.element(4)) == 2
    assert field_arith("neg", field.element(1)) == 4


def test_fermat_in_f9():
    """Test that every nonzero element of F_9 satisfies x^8 = 1."""
    field = make_field(3, 2)

    for x in field.nonzero_elements():
        assert field_arith("pow", x, 8) == field.one


def test_inverse_of_zero_raises():
    """Test that inverting zero raises a field error."""
    field = make_field(5)

    with pytest.raises(FieldError, match="division by zero"):
        field_arith("inv", field.zero)


def test_mixed_parents_raise():
    """Test that elements of different fields cannot be combined."""
    f5 = make_field(5)
    f9 = make_field(3, 2)

    with pytest.raises(FieldError, match="field mismatch"):
        f9.one + f5.one


def test_unknown_operation_raises():
    """Test that an unknown operation name is rejected."""
    with pytest.raises(FieldError):
        field_arith("sqrt", make_field(5).one)


def test_field_axioms_in_f27():
    """Test distributivity and inverses on every pair of a small extension."""
    field = make_field(3, 3)
    rng = np.random.RandomState(42)

    for _ in range(200):
        a = field.random_element(rng)
        b = field.random_element(rng)
        c = field.random_element(rng)
        assert a * (b + c) == a * b + a * c
        assert (a - b) + b == a
        if not a.is_zero():
            assert a * a.inverse() == field.one


def test_multiplicative_order_examples():
    """Test multiplicative orders in F_5."""
    field = make_field(5)

    assert multiplicative_order(field.one) == 1
    assert multiplicative_order(field.element(2)) == 4
    assert multiplicative_order(field.element(4)) == 2


def test_multiplicative_order_divides_group_order():
    """Test that every element order divides q - 1."""
    field = make_field(2, 4)

    for x in field.nonzero_elements():
        assert 15 % multiplicative_order(x) == 0
    assert multiplicative_order(field.generator) == 15


def test_multiplicative_order_of_zero_raises():
    """Test that zero has no multiplicative order."""
    with pytest.raises(FieldError):
        multiplicative_order(make_field(5).zero)


def test_primitive_root_of_unity():
    """Test the least root of unity of a given order."""
    field = make_field(5)

    zeta4 = primitive_root_of_unity(field, 4)
    assert zeta4.code in (2, 3)
    assert multiplicative_order(zeta4) == 4
    assert primitive_root_of_unity(field, 2) == 4


def test_primitive_root_of_unity_errors():
    """Test the two failure modes of primitive_root_of_unity."""
    field = make_field(5)

    with pytest.raises(FieldError, match="mu_p not in field"):
        primitive_root_of_unity(field, 3)
    with pytest.raises(FieldError, match="p equals characteristic"):
        primitive_root_of_unity(make_field(5, 2), 5)


def test_primitive_root_has_exact_order():
    """Test zeta^p = 1 and zeta^j != 1 for 0 < j < p in an extension."""
    field = make_field(5, 2)

    for p in (2, 3, 4, 6, 8, 12):
        zeta = primitive_root_of_unity(field, p)
        assert zeta ** p == field.one
        assert all(zeta ** j != field.one for j in range(1, p))


def test_embed_fixes_zero_and_one():
    """Test that the embedding maps 0 and 1 to 0 and 1."""
    small = make_field(3, 2)
    large = make_field(3, 4)

    assert embed(small.zero, large) == large.zero
    assert embed(small.one, large) == large.one


def test_embed_is_a_ring_homomorphism():
    """Test that the embedding respects addition and multiplication."""
    small = make_field(3, 2)
    large = extension_field(small, 2)
    rng = np.random.RandomState(7)

    for _ in range(100):
        a = small.random_element(rng)
        b = small.random_element(rng)
        assert embed(a * b, large) == embed(a, large) * embed(b, large)
        assert embed(a + b, large) == embed(a, large) + embed(b, large)


def test_embed_into_incompatible_field_raises():
    """Test that F_9 does not embed into F_27."""
    with pytest.raises(FieldError):
        embed(make_field(3, 2).generator, make_field(3, 3))


def test_nth_roots():
    """Test square roots in F_5 and cube roots of unity in F_25."""
    f5 = make_field(5)
    f25 = make_field(5, 2)

    assert [r.code for r in f5.element(4).nth_roots(2)] == [2, 3]
    assert f5.element(2).nth_roots(2) == []
    cube_roots = f25.one.nth_roots(3)
    assert len(cube_roots) == 3
    assert all(r ** 3 == f25.one for r in cube_roots)


def test_vectorized_ops_match_scalar_ops():
    """Test vec_add, vec_mul and vec_pow against the scalar code operations."""
    field = make_field(3, 2)
    a, b = np.meshgrid(np.arange(9), np.arange(9))

    added = field.vec_add(a, b)
    multiplied = field.vec_mul(a, b)
    cubed = field.vec_pow(a, 3)
    for x, y in zip(a.ravel(), b.ravel()):
        assert added[y, x] == field.add(int(x), int(y))
        assert multiplied[y, x] == field.mul(int(x), int(y))
    for x in range(9):
        assert cubed[0, x] == field.pow(x, 3)


def test_vec_is_nth_power():
    """Test the quadratic residue mask of F_5."""
    field = make_field(5)

    mask = field.vec_is_nth_power(np.arange(5), 2)
    assert mask.tolist() == [True, True, False, False, True]
    assert field.vec_is_nth_power(np.arange(5), 3).all()


def test_parse_and_format_elements():
    """Test the integer and bracketed element syntax."""
    f5 = make_field(5)
    f9 = make_field(3, 2)

    assert parse_element(f5, "7") == 2
    x = parse_element(f9, "[1,2]")
    assert x.code == 7
    assert x.coeffs == (1, 2)
    assert format_element(x) == "[1,2]"
    assert format_element(parse_element(f9, "[2]")) == "[2,0]"


def test_element_equality_with_ints_agrees_with_hash():
    """Test that an element equal to an int also hashes like it."""
    f5 = make_field(5)
    f9 = make_field(3, 2)

    assert f5.element(3) == 3
    assert hash(f5.element(3)) == hash(3)
    assert {f5.element(3)} & {3} == {3}
    assert f5.element(3) != 8
    assert f5.element(4) != -1
    assert f9.element(2) == 2
    assert hash(f9.element(2)) == hash(2)
    assert parse_element(f9, "[1,2]") != 7


def test_large_prime_fields_work_without_tables(monkeypatch):
    """Test that prime fields above the table limit give the tabulated answers."""
    field = make_field(13)
    codes = np.arange(13)
    monkeypatch.setattr("catalanff.gf.MAX_TABLE_SIZE", 10)

    untabled = (
        primitive_root_of_unity(field, 3),
        primitive_root_of_unity(field, 4),
        [field.nth_root_codes(a, 2) for a in range(1, 13)],
        [field.nth_root_codes(a, 3) for a in range(1, 13)],
        field.vec_is_nth_power(codes, 4).tolist(),
        field.vec_pow(codes, 5).tolist(),
    )
    monkeypatch.undo()
    tabled = (
        primitive_root_of_unity(field, 3),
        primitive_root_of_unity(field, 4),
        [field.nth_root_codes(a, 2) for a in range(1, 13)],
        [field.nth_root_codes(a, 3) for a in range(1, 13)],
        field.vec_is_nth_power(codes, 4).tolist(),
        field.vec_pow(codes, 5).tolist(),
    )

    assert untabled == tabled
    assert tabled[0].code == 3


def test_large_extension_fields_raise(monkeypatch):
    """Test that an extension field above the table limit raises FieldError."""
    monkeypatch.setattr("catalanff.gf.MAX_TABLE_SIZE", 100)
    field = make_field(11, 2)

    with pytest.raises(FieldError, match="exceeds table limit"):
        primitive_root_of_unity(field, 3)


def test_parse_element_errors():
    """Test that malformed elements raise with a position."""
    f9 = make_field(3, 2)

    with pytest.raises(CurveSpecError):
        parse_element(f9, "[1,2,0]")
    with pytest.raises(CurveSpecError):
        parse_element(f9, "[1,x]")
    with pytest.raises(CurveSpecError) as excinfo:
        parse_element(f9, "abc")
    assert excinfo.value.position == 0


def test_field_pickles_to_canonical_instance():
    """Test that pickling a field yields the cached instance."""
    field = make_field(3, 2)
    element = field.generator

    assert pickle.loads(pickle.dumps(field)) is field
    assert pickle.loads(pickle.dumps(element)) == element
