"""Tests for group module."""
import itertools

import numpy as np
import pytest

from metacyclic_units import group
from metacyclic_units.errors import (
    GcdViolation,
    InvalidParameters,
    NotThreeKPlusOne,
    TNotOrderThree,
)
from metacyclic_units.group import GroupElement, GroupParams

from conftest import PARAMETER_SETS


# group.validate_params
@pytest.mark.parametrize("m, t", PARAMETER_SETS)
def test_validate_params(m, t):
    p = group.validate_params(m, t)
    assert p == GroupParams(m, t)
    assert p.order == 3 * m
    assert 3 * p.k + 1 == m


@pytest.mark.parametrize(
    "m, t, error",
    [
        (12, 5, NotThreeKPlusOne),
        (0, 2, NotThreeKPlusOne),
        (13, 4, TNotOrderThree),
        (13, 1, TNotOrderThree),
        (13, 13, TNotOrderThree),
        (91, 29, GcdViolation),
    ],
)
def test_validate_params_rejects(m, t, error):
    with pytest.raises(error):
        group.validate_params(m, t)


def test_validate_params_message():
    with pytest.raises(InvalidParameters, match=r"m must be 3k\+1 \(got m=12\)"):
        group.validate_params(12, 5)


def test_validate_params_is_value_error():
    with pytest.raises(ValueError):
        group.validate_params(91, 29)


# group.params_from_k
def test_params_from_k():
    assert group.params_from_k(4, 3) == GroupParams(13, 3)


# group.admissible_twists / group.valid_parameters
@pytest.mark.parametrize(
    "m, twists",
    [(7, [2, 4]), (13, [3, 9]), (19, [7, 11]), (31, [5, 25]), (10, []), (12, [])],
)
def test_admissible_twists(m, twists):
    assert group.admissible_twists(m) == twists


def test_valid_parameters():
    assert group.valid_parameters(13) == [
        GroupParams(7, 2),
        GroupParams(7, 4),
        GroupParams(13, 3),
        GroupParams(13, 9),
    ]


# group.multiplicative_order
@pytest.mark.parametrize("a, m, order", [(3, 13, 3), (3, 7, 6), (3, 31, 30), (2, 7, 3)])
def test_multiplicative_order(a, m, order):
    assert group.multiplicative_order(a, m) == order


def test_multiplicative_order_not_a_unit():
    with pytest.raises(ValueError):
        group.multiplicative_order(2, 4)


# group.element_at / GroupElement.index
def test_index_is_bijective(t39):
    indices = [g.index(t39) for g in group.elements(t39)]
    assert indices == list(range(t39.order))
    assert all(group.element_at(i, t39).index(t39) == i for i in indices)


# group.multiply
def test_multiply_generators(t39):
    assert group.multiply(group.X, group.Y, t39) == GroupElement(1, 1)
    assert group.multiply(group.Y, group.X, t39) == GroupElement(9, 1)


@pytest.mark.parametrize("m, t", [(7, 2), (13, 3)])
def test_presentation(m, t):
    p = GroupParams(m, t)
    assert group.power(group.X, m, p) == group.IDENTITY
    assert group.power(group.Y, 3, p) == group.IDENTITY
    assert group.conjugate(group.X, group.Y, p) == GroupElement(t, 0)


@pytest.mark.parametrize("m, t", [(7, 2), (13, 3), (13, 9), (19, 7)])
def test_conjugating_coset_elements_by_x(m, t):
    p = GroupParams(m, t)
    for i in range(m):
        y_term = group.conjugate(GroupElement(i, 1), group.X, p)
        assert y_term == GroupElement((i + t * t - 1) % m, 1)
        y_inverse_term = group.conjugate(GroupElement(i, 2), group.X, p)
        assert y_inverse_term == GroupElement((i + t - 1) % m, 2)


def test_multiply_is_associative(t21):
    elements = group.elements(t21)
    for a, b, c in itertools.product(elements[::4], elements[::3], elements[::5]):
        left = group.multiply(group.multiply(a, b, t21), c, t21)
        right = group.multiply(a, group.multiply(b, c, t21), t21)
        assert left == right


def test_inverse(t39):
    for g in group.elements(t39):
        assert group.multiply(g, group.inverse(g, t39), t39) == group.IDENTITY
        assert group.multiply(group.inverse(g, t39), g, t39) == group.IDENTITY


# group.element_order
def test_element_order(t39):
    assert group.element_order(group.IDENTITY, t39) == 1
    assert group.element_order(group.X, t39) == 13
    assert group.element_order(group.Y, t39) == 3
    assert group.element_order(GroupElement(5, 2), t39) == 3


# group.describe
@pytest.mark.parametrize(
    "g, text",
    [
        (GroupElement(0, 0), "1"),
        (GroupElement(1, 0), "x"),
        (GroupElement(5, 0), "x^5"),
        (GroupElement(0, 1), "y"),
        (GroupElement(2, 2), "x^2 y^2"),
    ],
)
def test_describe(g, text):
    assert group.describe(g) == text


# group.conjugacy_classes
@pytest.mark.parametrize("m, t", PARAMETER_SETS)
def test_conjugacy_class_sizes(m, t):
    p = GroupParams(m, t)
    sizes = sorted(cls.size for cls in group.conjugacy_classes(p))
    assert sizes == [1] + [3] * p.k + [m, m]


def test_conjugacy_classes_t39(t39):
    classes = group.conjugacy_classes(t39)
    assert len(classes) == 7
    assert classes[0].members == (group.IDENTITY,)
    assert classes[1].members == (
        GroupElement(1, 0),
        GroupElement(3, 0),
        GroupElement(9, 0),
    )


def test_conjugacy_classes_are_closed(t21):
    for cls in group.conjugacy_classes(t21):
        for g in cls.members:
            for h in (group.X, group.Y):
                assert group.conjugate(g, h, t21) in cls.members


# group.three_element_set
@pytest.mark.parametrize("m, t", PARAMETER_SETS)
def test_three_element_set(m, t):
    p = GroupParams(m, t)
    members = group.three_element_set(p)
    assert len(members) == 2 * m + 1
    assert group.IDENTITY in members
    assert all(g.j for g in members if g != group.IDENTITY)


# group.multiplication_table
def test_multiplication_table(t21):
    table = group.multiplication_table(t21)
    for g, h in itertools.product(group.elements(t21), repeat=2):
        assert table[g.index(t21), h.index(t21)] == group.multiply(g, h, t21).index(
            t21
        )


def test_tables_are_read_only(t21):
    with pytest.raises(ValueError):
        group.multiplication_table(t21)[0, 0] = 1


def test_division_tables(t39):
    left = group.left_division_table(t39)
    right = group.right_division_table(t39)
    inv = group.inverse_indices(t39)
    table = group.multiplication_table(t39)
    u, g = np.meshgrid(np.arange(t39.order), np.arange(t39.order), indexing="ij")
    assert np.array_equal(left, table[inv[u], g])
    assert np.array_equal(right, table[g, inv[u]])
