"""The metacyclic group T_3m = <x, y | x^m = y^3 = 1, x^y = x^t>."""
import functools
import math
from typing import FrozenSet, List, NamedTuple, Tuple

import numpy as np

from .errors import GcdViolation, NotThreeKPlusOne, TNotOrderThree


class GroupParams(NamedTuple):
    """Validated parameters (m, t) of T_3m."""

    m: int
    t: int

    @property
    def k(self) -> int:
        """Number of conjugacy classes of size three, (m - 1) / 3."""
        return (self.m - 1) // 3

    @property
    def order(self) -> int:
        """Order of the group, 3m."""
        return 3 * self.m


class GroupElement(NamedTuple):
    """The normal form x^i y^j."""

    i: int
    j: int

    def index(self, p: GroupParams) -> int:
        """Position in the shared basis ordering, i + m*j."""
        return self.i + p.m * self.j


class ConjugacyClass(NamedTuple):
    """A conjugacy class, members sorted by index."""

    representative: GroupElement
    members: Tuple[GroupElement, ...]

    @property
    def size(self) -> int:
        return len(self.members)


IDENTITY = GroupElement(0, 0)
X = GroupElement(1, 0)
Y = GroupElement(0, 1)


def validate_params(m: int, t: int) -> GroupParams:
    """
    Check the hypotheses on (m, t) and return the parameters.

    Args:
        m: Order of x, which must be 3k + 1
        t: Twist with x^y = x^t; of order three modulo m and gcd(m, t - 1) = 1

    Returns:
        The validated parameters

    """
    if m < 1 or m % 3 != 1:
        raise NotThreeKPlusOne(f"m must be 3k+1 (got m={m})")
    if not 1 < t < m:
        raise TNotOrderThree(f"t must lie strictly between 1 and m={m} (got t={t})")
    if pow(t, 3, m) != 1:
        raise TNotOrderThree(
            f"t must satisfy t^3 = 1 mod m (got {t}^3 = {pow(t, 3, m)} mod {m})"
        )
    divisor = math.gcd(m, t - 1)
    if divisor != 1:
        raise GcdViolation(
            f"gcd(m, t-1) must be 1 (got gcd({m}, {t - 1}) = {divisor})"
        )
    return GroupParams(m, t)


def params_from_k(k: int, t: int) -> GroupParams:
    """Validate parameters given as (k, t), with m = 3k + 1."""
    return validate_params(3 * k + 1, t)


def admissible_twists(m: int) -> List[int]:
    """All t accepted by :func:`validate_params` for this m."""
    if m < 1 or m % 3 != 1:
        return []
    return [
        t
        for t in range(2, m)
        if pow(t, 3, m) == 1 and math.gcd(m, t - 1) == 1
    ]


def valid_parameters(max_m: int) -> List[GroupParams]:
    """Every admissible (m, t) with m up to max_m, in increasing order."""
    return [
        GroupParams(m, t)
        for m in range(4, max_m + 1, 3)
        for t in admissible_twists(m)
    ]


def multiplicative_order(a: int, m: int) -> int:
    """Order of a in the unit group of Z_m."""
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    order, value = 1, a % m
    while value != 1 % m:
        value = (value * a) % m
        order += 1
    return order


def element_at(index: int, p: GroupParams) -> GroupElement:
    """Inverse of :meth:`GroupElement.index`."""
    return GroupElement(index % p.m, index // p.m)


def elements(p: GroupParams) -> List[GroupElement]:
    """All elements in index order."""
    return [element_at(index, p) for index in range(p.order)]


def multiply(g: GroupElement, h: GroupElement, p: GroupParams) -> GroupElement:
    """(x^a y^b)(x^c y^d) = x^(a + c t^(2b)) y^(b + d), using y x = x^(t^2) y."""
    a, b = g
    c, d = h
    return GroupElement((a + c * pow(p.t, 2 * b, p.m)) % p.m, (b + d) % 3)


def inverse(g: GroupElement, p: GroupParams) -> GroupElement:
    """The inverse of g in normal form."""
    j = (-g.j) % 3
    return GroupElement((-g.i * pow(p.t, 2 * j, p.m)) % p.m, j)


def power(g: GroupElement, exponent: int, p: GroupParams) -> GroupElement:
    """g raised to a non-negative power."""
    result = IDENTITY
    for _ in range(exponent):
        result = multiply(result, g, p)
    return result


def conjugate(g: GroupElement, h: GroupElement, p: GroupParams) -> GroupElement:
    """g^h = h^-1 g h."""
    return multiply(multiply(inverse(h, p), g, p), h, p)


def element_order(g: GroupElement, p: GroupParams) -> int:
    """Smallest d >= 1 with g^d = 1."""
    order, current = 1, g
    while current != IDENTITY:
        current = multiply(current, g, p)
        order += 1
    return order


def describe(g: GroupElement) -> str:
    """Render g as ``1``, ``x^5``, ``y`` or ``x^2 y^2``."""
    parts = []
    if g.i:
        parts.append("x" if g.i == 1 else f"x^{g.i}")
    if g.j:
        parts.append("y" if g.j == 1 else f"y^{g.j}")
    return " ".join(parts) or "1"


def conjugacy_classes(p: GroupParams) -> List[ConjugacyClass]:
    """
    Partition the group into conjugacy classes.

    Classes are closed under conjugation by x and y and sorted by their least
    member index: the identity, k classes {x^j, x^jt, x^jt^2}, <x>y and <x>y^-1.
    """
    seen: set = set()
    classes = []
    for g in elements(p):
        if g in seen:
            continue
        members = {g}
        frontier = [g]
        while frontier:
            current = frontier.pop()
            for h in (X, Y):
                image = conjugate(current, h, p)
                if image not in members:
                    members.add(image)
                    frontier.append(image)
        seen |= members
        ordered = tuple(sorted(members, key=lambda e: e.index(p)))
        classes.append(ConjugacyClass(ordered[0], ordered))
    return classes


def three_element_set(p: GroupParams) -> FrozenSet[GroupElement]:
    """The identity together with every element of order three."""
    return frozenset(g for g in elements(p) if element_order(g, p) in (1, 3))


def _read_only(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@functools.lru_cache(maxsize=None)
def multiplication_table(p: GroupParams) -> np.ndarray:
    """Index table with table[u, v] = index(u * v)."""
    indices = np.arange(p.order)
    i, j = indices % p.m, indices // p.m
    twists = np.array([pow(p.t, 2 * b, p.m) for b in range(3)])
    exponent_x = (i[:, np.newaxis] + i[np.newaxis, :] * twists[j][:, np.newaxis]) % p.m
    exponent_y = (j[:, np.newaxis] + j[np.newaxis, :]) % 3
    return _read_only(exponent_x + p.m * exponent_y)


@functools.lru_cache(maxsize=None)
def inverse_indices(p: GroupParams) -> np.ndarray:
    """inv[u] = index(u^-1)."""
    return _read_only(np.array([inverse(g, p).index(p) for g in elements(p)]))


@functools.lru_cache(maxsize=None)
def left_division_table(p: GroupParams) -> np.ndarray:
    """table[u, g] = index(u^-1 g)."""
    return _read_only(multiplication_table(p)[inverse_indices(p), :])


@functools.lru_cache(maxsize=None)
def right_division_table(p: GroupParams) -> np.ndarray:
    """table[u, g] = index(g u^-1)."""
    return _read_only(multiplication_table(p)[:, inverse_indices(p)].T.copy())
