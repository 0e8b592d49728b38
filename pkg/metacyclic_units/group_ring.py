"""
Dense arithmetic in the group algebra F T_3m.

A :class:`GroupRingElement` is a coefficient vector of length 3m over a
``galois`` field, indexed by ``i + m*j`` for the basis element x^i y^j.
Products are computed through the index tables of :mod:`.group`, which
turns the convolution into one gather and one matrix product.
"""
from dataclasses import dataclass
from typing import Iterable, List, Union

import galois
import numpy as np

from . import group
from .errors import EmptySubset, Mismatch, NotAUnit, VerificationFailure
from .fields import FieldDescriptor, FieldElement
from .group import GroupElement, GroupParams
from .linalg import rank, solve

# Number of samples put through one batched elimination in units_mask.
UNIT_BATCH = 512

Scalar = Union[FieldElement, int]


@dataclass(frozen=True, eq=False)
class GroupRingElement:
    """An element of F G with G = T_3m."""

    params: GroupParams
    field: FieldDescriptor
    coeffs: galois.FieldArray

    def __post_init__(self) -> None:
        if self.coeffs.shape != (self.params.order,):
            raise ValueError(
                f"expected {self.params.order} coefficients, got {self.coeffs.shape}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return (
            self.params == other.params
            and self.field == other.field
            and bool(
                np.array_equal(
                    self.coeffs.view(np.ndarray), other.coeffs.view(np.ndarray)
                )
            )
        )

    __hash__ = None  # type: ignore[assignment]

    def coefficient(self, g: GroupElement) -> FieldElement:
        """The coefficient of g."""
        return FieldElement(self.field, int(self.coeffs[g.index(self.params)]))

    def support(self) -> List[GroupElement]:
        """Group elements with a nonzero coefficient, in index order."""
        return [
            group.element_at(int(index), self.params)
            for index in np.flatnonzero(self.coeffs.view(np.ndarray))
        ]

    def is_zero(self) -> bool:
        return not np.any(self.coeffs.view(np.ndarray))

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        return gr_add(self, other)

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return gr_add(self, gr_scale(other, -1))

    def __neg__(self) -> "GroupRingElement":
        return gr_scale(self, -1)

    def __mul__(
        self, other: Union["GroupRingElement", FieldElement, int]
    ) -> "GroupRingElement":
        if isinstance(other, GroupRingElement):
            return gr_mul(self, other)
        return gr_scale(self, other)

    def __rmul__(self, other: Scalar) -> "GroupRingElement":
        return gr_scale(self, other)

    def __str__(self) -> str:
        terms = []
        for g in self.support():
            coeff = self.coefficient(g)
            name = group.describe(g)
            if coeff.value == 1:
                terms.append(name)
            elif name == "1":
                terms.append(str(coeff))
            elif " + " in str(coeff):
                terms.append(f"({coeff}) {name}")
            else:
                terms.append(f"{coeff} {name}")
        return " + ".join(terms) or "0"


def _check(a: GroupRingElement, b: GroupRingElement) -> None:
    if a.params != b.params or a.field != b.field:
        raise Mismatch(
            f"cannot combine elements of {a.field.name}T_{a.params.order} "
            f"and {b.field.name}T_{b.params.order}"
        )


def from_coefficients(
    p: GroupParams, f: FieldDescriptor, values: Iterable[int]
) -> GroupRingElement:
    """Build an element from integer representations of its coefficients."""
    return GroupRingElement(p, f, f.gf(np.asarray(list(values), dtype=np.int64)))


def zero(p: GroupParams, f: FieldDescriptor) -> GroupRingElement:
    return GroupRingElement(p, f, f.gf.Zeros(p.order))


def one(p: GroupParams, f: FieldDescriptor) -> GroupRingElement:
    return basis_element(group.IDENTITY, p, f)


def basis_element(
    g: GroupElement, p: GroupParams, f: FieldDescriptor
) -> GroupRingElement:
    """The group element g seen inside F G."""
    coeffs = f.gf.Zeros(p.order)
    coeffs[g.index(p)] = 1
    return GroupRingElement(p, f, coeffs)


def random_element(
    p: GroupParams, f: FieldDescriptor, rng: np.random.Generator
) -> GroupRingElement:
    """A uniformly random element."""
    return GroupRingElement(p, f, f.random_array(p.order, rng))


def gr_add(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    """Coefficient-wise sum."""
    _check(a, b)
    return GroupRingElement(a.params, a.field, a.coeffs + b.coeffs)


def gr_scale(a: GroupRingElement, scalar: Scalar) -> GroupRingElement:
    """Multiply every coefficient by a field scalar (integers act mod 3)."""
    if isinstance(scalar, FieldElement):
        if scalar.field != a.field:
            raise Mismatch(
                f"scalar in {scalar.field.name}, element over {a.field.name}"
            )
        value = a.field.gf(scalar.value)
    else:
        value = a.field.gf(scalar % 3)
    return GroupRingElement(a.params, a.field, a.coeffs * value)


def gr_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    """
    The convolution product.

    (ab)_g = sum over u of a_u b_(u^-1 g), evaluated as a @ B with
    B[u, g] = b[u^-1 g].
    """
    _check(a, b)
    gathered = b.coeffs[group.left_division_table(a.params)]
    return GroupRingElement(a.params, a.field, a.coeffs @ gathered)


def gr_pow(a: GroupRingElement, exponent: int) -> GroupRingElement:
    """a^exponent by square-and-multiply; negative powers need a unit."""
    if exponent < 0:
        return gr_pow(invert_element(a), -exponent)
    result = one(a.params, a.field)
    base = a
    while exponent:
        if exponent & 1:
            result = gr_mul(result, base)
        base = gr_mul(base, base)
        exponent >>= 1
    return result


def hat(
    subset: Iterable[GroupElement], p: GroupParams, f: FieldDescriptor
) -> GroupRingElement:
    """The sum of the elements of a nonempty subset."""
    indices = sorted({g.index(p) for g in subset})
    if not indices:
        raise EmptySubset("the hat of the empty set is not defined")
    coeffs = f.gf.Zeros(p.order)
    coeffs[indices] = 1
    return GroupRingElement(p, f, coeffs)


def s_hat(p: GroupParams, f: FieldDescriptor) -> GroupRingElement:
    """The sum of the identity and every element of order three."""
    return hat(group.three_element_set(p), p, f)


def augmentation(a: GroupRingElement) -> FieldElement:
    """Sum of all coefficients."""
    return FieldElement(a.field, int(a.coeffs.sum()))


def _three_element_indices(p: GroupParams) -> np.ndarray:
    return np.array(sorted(g.index(p) for g in group.three_element_set(p)))


def t_functional(a: GroupRingElement) -> FieldElement:
    """Sum of the coefficients on the identity and the elements of order three."""
    return FieldElement(
        a.field, int(a.coeffs[_three_element_indices(a.params)].sum())
    )


def krn_T_member(a: GroupRingElement) -> bool:
    """Determine if T(a g) = 0 for every group element g."""
    return all(
        not t_functional(gr_mul(a, basis_element(g, a.params, a.field)))
        for g in group.elements(a.params)
    )


def krn_T_matrix(p: GroupParams, f: FieldDescriptor) -> galois.FieldArray:
    """
    The linear system {T(alpha g) = 0 for all g}.

    Row g has a one in column u exactly when u g is the identity or of order
    three, so its kernel is Krn(T).
    """
    in_set = np.zeros(p.order, dtype=np.int64)
    in_set[_three_element_indices(p)] = 1
    return f.gf(in_set[group.multiplication_table(p)].T.copy())


def regular_representation(a: GroupRingElement) -> galois.FieldArray:
    """
    Matrix of beta -> beta a in the index basis, acting on column vectors.

    With this convention R(ab) = R(b) R(a).
    """
    return a.coeffs[group.left_division_table(a.params)].T


def left_representation(a: GroupRingElement) -> galois.FieldArray:
    """Matrix of beta -> a beta; L(ab) = L(a) L(b)."""
    return a.coeffs[group.right_division_table(a.params)].T


def is_unit(a: GroupRingElement) -> bool:
    """Determine if a is invertible."""
    return rank(regular_representation(a)) == a.params.order


def invert_element(a: GroupRingElement) -> GroupRingElement:
    """
    Invert a by solving R(a) v = e_1.

    Raises:
        NotAUnit: R(a) is singular
        VerificationFailure: The solution is not a two-sided inverse

    """
    matrix = regular_representation(a)
    if rank(matrix) < a.params.order:
        raise NotAUnit(f"{a} is not a unit")
    identity = one(a.params, a.field)
    candidate = GroupRingElement(a.params, a.field, solve(matrix, identity.coeffs))
    if gr_mul(a, candidate) != identity or gr_mul(candidate, a) != identity:
        raise VerificationFailure("two-sided inverse", f"for {a}")
    return candidate


def _full_rank(matrices: galois.FieldArray) -> np.ndarray:
    """Forward elimination on a stack of square matrices; True where invertible."""
    gf = type(matrices)
    matrices = matrices.copy()
    batch, size, _ = matrices.shape
    rows = np.arange(batch)
    alive = np.ones(batch, dtype=bool)
    for col in range(size):
        nonzero = matrices[:, col:, col].view(np.ndarray) != 0
        alive &= nonzero.any(axis=1)
        pivot = col + np.argmax(nonzero, axis=1)
        current = matrices[:, col, :].copy()
        chosen = matrices[rows, pivot, :].copy()
        matrices[rows, pivot, :] = current
        matrices[:, col, :] = chosen
        if col + 1 == size:
            break
        pivots = matrices[:, col, col].view(np.ndarray).copy()
        # Singular samples are already decided; keep their arithmetic defined.
        pivots[pivots == 0] = 1
        factors = matrices[:, col + 1 :, col] * (gf(pivots) ** -1)[:, np.newaxis]
        matrices[:, col + 1 :, col:] = (
            matrices[:, col + 1 :, col:]
            - factors[:, :, np.newaxis] * matrices[:, np.newaxis, col, col:]
        )
    return alive


def units_mask(
    samples: galois.FieldArray, p: GroupParams, batch: int = UNIT_BATCH
) -> np.ndarray:
    """
    Decide invertibility for many elements at once.

    Args:
        samples: Coefficient vectors, one per row
        p: Group parameters
        batch: Samples eliminated together

    Returns:
        Boolean array, True where the row is a unit

    """
    left_division = group.left_division_table(p)
    result = np.zeros(len(samples), dtype=bool)
    for start in range(0, len(samples), batch):
        chunk = samples[start : start + batch]
        result[start : start + batch] = _full_rank(chunk[:, left_division])
    return result
