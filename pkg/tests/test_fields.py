"""Tests for fields module."""
import itertools

import numpy as np
import pytest

from metacyclic_units import fields
from metacyclic_units.errors import (
    DegreeOutOfRange,
    DivisionByZero,
    FieldMismatch,
    NoSuchRoot,
    NotASubfield,
)


def _all_elements(f):
    return [fields.FieldElement(f, value) for value in range(f.order)]


def _has_root(coeffs):
    return any(
        sum(c * z ** i for i, c in enumerate(coeffs)) % 3 == 0 for z in range(3)
    )


# fields.to_coefficients / fields.from_coefficients
def test_to_coefficients():
    assert fields.to_coefficients(5, 3) == (2, 1, 0)


def test_from_coefficients_reduces_mod_three():
    assert fields.from_coefficients([4, 2]) == 7


# fields.format_polynomial
@pytest.mark.parametrize(
    "coeffs, expected",
    [
        ((1, 1, 2), "2z^2 + z + 1"),
        ((0, 2), "2z"),
        ((0, 0), "0"),
        ((2,), "2"),
        ((1, 0, 0, 1), "z^3 + 1"),
    ],
)
def test_format_polynomial(coeffs, expected):
    assert fields.format_polynomial(coeffs) == expected


# fields.is_irreducible
@pytest.mark.parametrize(
    "coeffs, expected",
    [((1, 0, 1), True), ((2, 0, 1), False), ((0, 1), True), ((1, 1, 1), False)],
)
def test_is_irreducible(coeffs, expected):
    assert fields.is_irreducible(coeffs) is expected


# fields.build_field
def test_build_field_prime(f3):
    assert f3.modulus == (0, 1)
    assert f3.order == 3
    assert f3.name == "F3"


def test_build_field_quadratic(f9):
    assert f9.modulus == (1, 0, 1)
    assert f9.order == 9


@pytest.mark.parametrize("degree", [3, 4, 5, 6])
def test_build_field_modulus(degree):
    f = fields.build_field(degree)
    assert len(f.modulus) == degree + 1
    assert f.modulus[-1] == 1
    assert not _has_root(f.modulus)
    assert fields.is_irreducible(f.modulus)


def test_build_field_modulus_is_least():
    f = fields.build_field(3)
    smaller = itertools.takewhile(
        lambda c: c != f.modulus, fields._monic_candidates(3)
    )
    assert not any(fields.is_irreducible(c) for c in smaller)


def test_build_field_is_cached():
    assert fields.build_field(4) is fields.build_field(4)


@pytest.mark.parametrize("degree", [0, -1, fields.MAX_DEGREE + 1])
def test_build_field_out_of_range(degree):
    with pytest.raises(DegreeOutOfRange):
        fields.build_field(degree)


# fields.FieldDescriptor
def test_element_too_many_coefficients(f9):
    with pytest.raises(ValueError):
        f9.element((1, 1, 1))


def test_scalar(f9):
    assert f9.scalar(5) == f9.element((2,))
    assert f9.scalar(-1) == f9.element((2,))


def test_basis(f9):
    assert [b.coeffs for b in f9.basis()] == [(1, 0), (0, 1)]


def test_random_array_is_reproducible(f9):
    first = f9.random_array((4, 5), np.random.default_rng(7))
    second = f9.random_array((4, 5), np.random.default_rng(7))
    assert first.shape == (4, 5)
    assert np.array_equal(first.view(np.ndarray), second.view(np.ndarray))
    assert first.view(np.ndarray).max() < 9


# fields.FieldElement arithmetic
def test_z_squared_in_f9(f9):
    z = f9.element((0, 1))
    assert z * z == f9.scalar(2)


def test_inverse_of_z_in_f9(f9):
    z = f9.element((0, 1))
    assert z.inverse() == f9.element((0, 2))
    assert z * z.inverse() == f9.one
    assert z ** -1 == z.inverse()


def test_division(f9):
    z = f9.element((0, 1))
    assert f9.one / z == f9.element((0, 2))


def test_field_axioms_f9(f9):
    elements = _all_elements(f9)
    for a, b in itertools.product(elements, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
        assert a - b == a + (-b)
    for a in elements:
        assert a + (-a) == f9.zero
        if a:
            assert a * a.inverse() == f9.one
            assert a ** (f9.order - 1) == f9.one


@pytest.mark.parametrize("degree", range(1, 9))
def test_field_axioms_random_triples(degree, rng):
    f = fields.build_field(degree)
    for _ in range(20):
        a, b, c = (f.random(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c


def test_digit_weights():
    assert fields.digit_weights(3).tolist() == [1, 3, 9]
    assert fields.digit_weights(3).dtype == np.int64
    assert fields.digit_weights(42).dtype == object
    assert fields.digit_weights(42)[-1] == 3 ** 41


def test_largest_field():
    f = fields.build_field(fields.MAX_DEGREE)
    z = f.element((0, 1))
    assert (z * z) / z == z
    assert z * z.inverse() == f.one
    values = f.gf([f.order - 1, 3 ** 40 + 2])
    digits = fields.coordinates(values, f)
    assert digits.shape == (2, fields.MAX_DEGREE)
    assert digits[0].tolist() == [2] * fields.MAX_DEGREE
    assert digits[1].tolist() == [2] + [0] * 39 + [1, 0]


def test_integers_act_mod_three(f9):
    z = f9.element((0, 1))
    assert 4 * z == z
    assert z + 3 == z
    assert 1 - z == f9.element((1, 2))


def test_pow_zero(f9):
    assert f9.element((0, 1)) ** 0 == f9.one
    assert f9.zero ** 5 == f9.zero


def test_field_mismatch(f3, f9):
    with pytest.raises(FieldMismatch):
        f3.one + f9.one


def test_combine_with_other_type(f9):
    with pytest.raises(TypeError):
        f9.one * 1.5


def test_inverse_of_zero(f9):
    with pytest.raises(DivisionByZero):
        f9.zero.inverse()


def test_divide_by_zero(f9):
    with pytest.raises(ZeroDivisionError):
        f9.one / f9.zero


def test_str(f9):
    assert str(f9.element((1, 2))) == "2z + 1"
    assert str(f9.zero) == "0"


# fields.frobenius
def test_frobenius_of_z(f9):
    assert fields.frobenius(f9.element((0, 1))) == f9.element((0, 2))


def test_frobenius_fixes_one():
    f = fields.build_field(4)
    assert fields.frobenius(f.one, 3) == f.one


@pytest.mark.parametrize("degree", [2, 3, 4])
def test_frobenius_full_orbit(degree, rng):
    f = fields.build_field(degree)
    for _ in range(10):
        a = f.random(rng)
        assert fields.frobenius(a, degree) == a


def test_frobenius_is_additive(rng):
    f = fields.build_field(3)
    for _ in range(10):
        a, b = f.random(rng), f.random(rng)
        assert fields.frobenius(a + b) == fields.frobenius(a) + fields.frobenius(b)


# fields.multiplicative_order
def test_multiplicative_order(f9):
    assert fields.multiplicative_order(f9.scalar(2)) == 2
    assert fields.multiplicative_order(f9.element((0, 1))) == 4


def test_multiplicative_order_of_zero(f9):
    with pytest.raises(DivisionByZero):
        fields.multiplicative_order(f9.zero)


# fields.find_root_of_unity
def test_find_root_of_unity_prime_field(f3):
    assert fields.find_root_of_unity(f3, 2) == f3.scalar(2)


@pytest.mark.parametrize("degree, m", [(2, 8), (3, 13), (4, 5), (6, 7)])
def test_find_root_of_unity_order(degree, m):
    f = fields.build_field(degree)
    zeta = fields.find_root_of_unity(f, m)
    assert fields.multiplicative_order(zeta) == m


def test_find_root_of_unity_is_least(f9):
    zeta = fields.find_root_of_unity(f9, 4)
    others = [a for a in _all_elements(f9) if a and fields.multiplicative_order(a) == 4]
    assert zeta.coeffs == min(a.coeffs for a in others)


@pytest.mark.parametrize("m", [5, 7, 0])
def test_find_root_of_unity_missing(f9, m):
    with pytest.raises(NoSuchRoot):
        fields.find_root_of_unity(f9, m)


# fields.coordinates
def test_coordinates(f9):
    values = f9.gf([0, 5, 8])
    assert fields.coordinates(values, f9).tolist() == [[0, 0], [2, 1], [2, 2]]


# fields.embed / fields.embed_array
def test_embed_prime_field(f3):
    target = fields.build_field(4)
    assert fields.embed(f3.scalar(2), target) == target.scalar(2)


def test_embed_same_field(f9):
    a = f9.element((1, 2))
    assert fields.embed(a, f9) == a


def test_embed_is_homomorphism(f9):
    target = fields.build_field(4)
    elements = _all_elements(f9)
    for a, b in itertools.product(elements, repeat=2):
        assert fields.embed(a * b, target) == fields.embed(a, target) * fields.embed(
            b, target
        )
        assert fields.embed(a + b, target) == fields.embed(a, target) + fields.embed(
            b, target
        )


def test_embed_is_injective(f9):
    target = fields.build_field(6)
    images = {fields.embed(a, target).value for a in _all_elements(f9)}
    assert len(images) == f9.order


def test_embed_array_matches_embed(f9):
    target = fields.build_field(4)
    values = f9.gf(np.arange(9))
    embedded = fields.embed_array(values, f9, target)
    expected = [fields.embed(a, target).value for a in _all_elements(f9)]
    assert embedded.view(np.ndarray).tolist() == expected


def test_embed_not_a_subfield(f9):
    with pytest.raises(NotASubfield):
        fields.embed(f9.one, fields.build_field(3))
