"""
The Jacobson radical J(FG) of F T_3m, computed as the annihilator of s_hat.

``s_hat`` is the sum of the identity and all elements of order three. It is
central, so its left and right annihilators agree; we take the kernel of
beta -> beta s_hat and check it against the closed form
``a- x_hat y^-1 + a x_hat + a+ x_hat y`` with ``a- + a + a+ = 0``.
"""
from typing import List, NamedTuple, Optional, Sequence, Tuple

import galois
import numpy as np

from . import group
from .errors import NotAUnit, SampleSizeTooSmall, VerificationFailure
from .fields import FieldDescriptor, FieldElement
from .group import GroupElement, GroupParams
from .group_ring import (
    GroupRingElement,
    basis_element,
    gr_mul,
    gr_pow,
    hat,
    invert_element,
    krn_T_matrix,
    krn_T_member,
    one,
    regular_representation,
    s_hat,
)
from .linalg import kernel_basis, rank, row_echelon, same_span, stack
from .utils import verbose

DEFAULT_SEED = 0
EXPECTED_DIMENSION = 2


class RadicalBasis(NamedTuple):
    """A spanning set for J(FG)."""

    basis: List[GroupRingElement]

    @property
    def dim(self) -> int:
        return len(self.basis)


class RadicalReport(NamedTuple):
    """Outcome of :func:`verify_radical_equality`."""

    dim: int
    krn_t_dim: int
    nilpotency_index: int
    square_vanishes: bool
    nil_witnesses: int


def as_rows(
    elements: Sequence[GroupRingElement], p: GroupParams, f: FieldDescriptor
) -> galois.FieldArray:
    """Coefficient vectors of some elements, one per row."""
    return stack(f.gf, [e.coeffs for e in elements], p.order)


def from_rows(
    rows: galois.FieldArray, p: GroupParams, f: FieldDescriptor
) -> List[GroupRingElement]:
    return [GroupRingElement(p, f, row.copy()) for row in rows]


def coset_hat(j: int, p: GroupParams, f: FieldDescriptor) -> GroupRingElement:
    """x_hat y^j, the sum of the coset <x> y^j."""
    return hat((GroupElement(i, j % 3) for i in range(p.m)), p, f)


def coset_coefficients(
    a: GroupRingElement,
) -> Optional[Tuple[FieldElement, FieldElement, FieldElement]]:
    """
    Coefficients (a-, a, a+) on <x>y^-1, <x> and <x>y, if a is constant on cosets.

    Returns:
        The three coefficients, or None when a is not of that shape

    """
    m = a.params.m
    values = a.coeffs.view(np.ndarray).reshape(3, m)
    if np.any(values != values[:, :1]):
        return None
    minus, plain, plus = (FieldElement(a.field, int(values[j, 0])) for j in (2, 0, 1))
    return minus, plain, plus


def annihilator_basis(p: GroupParams, f: FieldDescriptor) -> RadicalBasis:
    """Basis of Anh(s_hat) from the kernel of beta -> beta s_hat."""
    kernel = kernel_basis(regular_representation(s_hat(p, f)))
    verbose(f"Anh(s_hat) over {f.name}T_{p.order} has dimension {len(kernel)}")
    return RadicalBasis(from_rows(kernel, p, f))


def closed_form_basis(p: GroupParams, f: FieldDescriptor) -> RadicalBasis:
    """The two elements x_hat y^-1 - x_hat and x_hat y - x_hat."""
    x_hat = coset_hat(0, p, f)
    return RadicalBasis([coset_hat(-1, p, f) - x_hat, coset_hat(1, p, f) - x_hat])


def _spans(
    elements: Sequence[GroupRingElement], p: GroupParams, f: FieldDescriptor
) -> galois.FieldArray:
    return row_echelon(as_rows(elements, p, f))


def nilpotency_index(b: RadicalBasis) -> int:
    """
    Smallest e with every product of e spanning vectors equal to zero.

    The empty basis spans the zero ideal, whose index is 1.
    """
    if not b.basis:
        return 1
    p, f = b.basis[0].params, b.basis[0].field
    level = _spans(b.basis, p, f)
    # A nilpotent ideal of dimension d has index at most d + 1.
    for exponent in range(1, b.dim + 2):
        if not len(level):
            return exponent
        products = [
            gr_mul(left, right)
            for left in from_rows(level, p, f)
            for right in b.basis
        ]
        level = _spans(products, p, f)
    raise VerificationFailure("nilpotency", f"Anh(s_hat)^{b.dim + 1} is not zero")


def _in_span(echelon: galois.FieldArray, element: GroupRingElement) -> bool:
    combined = stack(type(echelon), [echelon, element.coeffs], echelon.shape[-1])
    return rank(combined) == len(echelon)


def check_two_sided_ideal(b: RadicalBasis) -> None:
    """g v and v g stay in the span for the generators g = x, y."""
    if not b.basis:
        return
    p, f = b.basis[0].params, b.basis[0].field
    echelon = _spans(b.basis, p, f)
    for g in (group.X, group.Y):
        generator = basis_element(g, p, f)
        for v in b.basis:
            products = (("left", gr_mul(generator, v)), ("right", gr_mul(v, generator)))
            for side, product in products:
                if not _in_span(echelon, product):
                    raise VerificationFailure(
                        "two-sided ideal",
                        f"{side} product with {group.describe(g)} leaves the span",
                    )


def _random_members(
    b: RadicalBasis, count: int, rng: np.random.Generator
) -> List[GroupRingElement]:
    p, f = b.basis[0].params, b.basis[0].field
    rows = as_rows(b.basis, p, f)
    weights = f.random_array((count, b.dim), rng)
    return from_rows(weights @ rows, p, f)


def check_nil(b: RadicalBasis, samples: int, seed: int = DEFAULT_SEED) -> int:
    """
    Confirm 1 + v is a unit for sampled members v of the span.

    Returns:
        The number of witnesses checked

    """
    if samples < 1:
        raise SampleSizeTooSmall(f"need at least one sample (got {samples})")
    if not b.basis:
        return 0
    identity = one(b.basis[0].params, b.basis[0].field)
    rng = np.random.default_rng(seed)
    for v in _random_members(b, samples, rng):
        try:
            invert_element(identity + v)
        except NotAUnit:
            raise VerificationFailure("nil ideal", f"1 + ({v}) is not a unit")
    return samples


def krn_T_basis(p: GroupParams, f: FieldDescriptor) -> galois.FieldArray:
    """Krn(T) as the kernel of the system {T(alpha g) = 0 for all g}."""
    return kernel_basis(krn_T_matrix(p, f))


def verify_radical_equality(
    p: GroupParams, f: FieldDescriptor, samples: int, seed: int = DEFAULT_SEED
) -> RadicalReport:
    """
    Check that Anh(s_hat) is the radical and equals Krn(T).

    Args:
        p: Group parameters
        f: Coefficient field
        samples: Number of random 1 + v to invert
        seed: Seed for drawing v

    Returns:
        A report of the measured quantities

    """
    anh = annihilator_basis(p, f)
    if anh.dim != EXPECTED_DIMENSION:
        raise VerificationFailure(
            "dimension", f"Anh(s_hat) has dimension {anh.dim}, expected 2"
        )
    closed_form = closed_form_basis(p, f)
    if not same_span(as_rows(anh.basis, p, f), as_rows(closed_form.basis, p, f)):
        raise VerificationFailure("closed form", "spans differ")
    check_two_sided_ideal(anh)
    witnesses = check_nil(anh, samples, seed)
    krn = krn_T_basis(p, f)
    if not same_span(krn, as_rows(anh.basis, p, f)):
        raise VerificationFailure(
            "Krn(T) = Anh(s_hat)", f"Krn(T) has dimension {len(krn)}"
        )
    for v in anh.basis:
        if not krn_T_member(v):
            raise VerificationFailure("J in Krn(T)", f"{v} fails T(v g) = 0")
    index = nilpotency_index(anh)
    if index > 3:
        raise VerificationFailure("nilpotency", f"index {index} exceeds 3")
    return RadicalReport(anh.dim, len(krn), index, index <= 2, witnesses)


def one_plus_radical_check(
    p: GroupParams, f: FieldDescriptor, samples: int, seed: int = DEFAULT_SEED
) -> int:
    """
    Check the subgroup 1 + J has exponent three and return its order q^dim(J).

    Every sampled 1 + j must satisfy (1 + j)^3 = 1.
    """
    if samples < 1:
        raise SampleSizeTooSmall(f"need at least one sample (got {samples})")
    anh = annihilator_basis(p, f)
    identity = one(p, f)
    rng = np.random.default_rng(seed)
    for j in _random_members(anh, samples, rng):
        if gr_pow(identity + j, 3) != identity:
            raise VerificationFailure("exponent of 1 + J", f"(1 + ({j}))^3 != 1")
    return int(f.order ** anh.dim)
