"""Pytest Config and shared fixtures."""
import numpy as np
import pytest

from metacyclic_units import utils
from metacyclic_units.fields import build_field
from metacyclic_units.group import GroupParams

# The parameter sets every structural check is run against.
PARAMETER_SETS = [(7, 2), (13, 3), (13, 9), (19, 7), (31, 5)]


@pytest.fixture()
def constants():
    verbose = utils.VERBOSE
    yield
    utils.set_verbose(verbose)


@pytest.fixture()
def t39():
    return GroupParams(13, 3)


@pytest.fixture()
def t21():
    return GroupParams(7, 2)


@pytest.fixture()
def f3():
    return build_field(1)


@pytest.fixture()
def f9():
    return build_field(2)


@pytest.fixture()
def rng():
    return np.random.default_rng(2024)
