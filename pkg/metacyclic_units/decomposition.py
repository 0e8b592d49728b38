"""
Augmentation ideals, the centre and the Wedderburn census of F T_3m.

With H = <x>, FG splits as F(G/H) + Delta(G,H) and the augmentation ideal
Delta(G) as J(FG) + Delta(G,H). Delta(G,H) is semisimple; its simple
components correspond to the orbits of <q, t> on the nonzero residues
mod m, q = 3^n, one M_3(F_(q^d)) per orbit of size 3d.
"""
from typing import List, NamedTuple, Tuple

import galois
import numpy as np

from . import group
from .errors import NoSolution, VerificationFailure
from .fields import FieldDescriptor, build_field
from .group import GroupParams
from .group_ring import (
    GroupRingElement,
    augmentation,
    basis_element,
    gr_mul,
    gr_pow,
    hat,
    left_representation,
    one,
    regular_representation,
)
from .linalg import kernel_basis, rank, row_echelon, same_span, solve, stack
from .radical import annihilator_basis, as_rows, from_rows
from .utils import verbose


class CosetOrbit(NamedTuple):
    """Sorted residues in 1..m-1 forming one orbit."""

    exponents: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.exponents)

    @property
    def representative(self) -> int:
        return self.exponents[0]


class WedderburnComponent(NamedTuple):
    """One simple summand M_3(F_(q^d)) of Delta(G,H)."""

    matrix_size: int
    field_degree: int
    orbit: CosetOrbit

    def field_order(self, q: int) -> int:
        """Order of the centre of this component, q^d."""
        return q ** self.field_degree


class DirectSumLedger(NamedTuple):
    """Dimensions behind Delta(G) = J(FG) + Delta(G,H)."""

    dim_delta_G: int
    dim_J: int
    dim_delta_GH: int
    combined_rank: int

    @property
    def intersection_dim(self) -> int:
        return self.dim_J + self.dim_delta_GH - self.combined_rank


class DecompositionReport(NamedTuple):
    """Everything :func:`decompose` measured."""

    dim_delta_G: int
    dim_delta_GH: int
    dim_J: int
    intersection_dim: int
    center_dim: int
    components: List[WedderburnComponent]
    component_count: int
    semisimple: bool


def _orbits(m: int, multipliers: Tuple[int, ...]) -> List[CosetOrbit]:
    """Orbits of the group generated by some units acting on 1..m-1."""
    seen: set = set()
    orbits = []
    for start in range(1, m):
        if start in seen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            current = frontier.pop()
            for multiplier in multipliers:
                image = (current * multiplier) % m
                if image not in orbit:
                    orbit.add(image)
                    frontier.append(image)
        seen |= orbit
        orbits.append(CosetOrbit(tuple(sorted(orbit))))
    return orbits


def t_orbits(p: GroupParams) -> List[CosetOrbit]:
    """Orbits of j -> jt on 1..m-1; k orbits of size three."""
    return _orbits(p.m, (p.t,))


def merged_orbits(p: GroupParams, n: int) -> List[CosetOrbit]:
    """Orbits of <q, t> on 1..m-1 with q = 3^n mod m."""
    return _orbits(p.m, (p.t, pow(3, n, p.m)))


def components(p: GroupParams, n: int) -> List[WedderburnComponent]:
    """One M_3(F_(q^d)) per merged orbit O, with d = |O| / 3."""
    return [
        WedderburnComponent(3, orbit.size // 3, orbit)
        for orbit in merged_orbits(p, n)
    ]


def _x_minus_one(p: GroupParams, f: FieldDescriptor) -> GroupRingElement:
    return basis_element(group.X, p, f) - one(p, f)


def _in_span(echelon: galois.FieldArray, element: GroupRingElement) -> bool:
    combined = stack(type(echelon), [echelon, element.coeffs], echelon.shape[-1])
    return rank(combined) == len(echelon)


def delta_GH_basis(p: GroupParams, f: FieldDescriptor) -> List[GroupRingElement]:
    """
    Basis of the ideal generated by x - 1, in reduced echelon form.

    H = <x> is normal, so the left multiples g (x - 1) already span the
    two-sided ideal; closure under right multiplication is checked anyway.
    """
    x_minus_one = _x_minus_one(p, f)
    spanning = [
        gr_mul(basis_element(g, p, f), x_minus_one) for g in group.elements(p)
    ]
    echelon = row_echelon(as_rows(spanning, p, f))
    basis = from_rows(echelon, p, f)
    for g in (group.X, group.Y):
        generator = basis_element(g, p, f)
        for v in basis:
            if not _in_span(echelon, gr_mul(v, generator)):
                raise VerificationFailure(
                    "Delta(G,H) ideal", f"right product with {group.describe(g)}"
                )
    expected = 3 * p.m - 3
    if len(basis) != expected:
        raise VerificationFailure(
            "dim Delta(G,H)", f"got {len(basis)}, expected {expected}"
        )
    verbose(f"Delta(G,H) has dimension {len(basis)}")
    return basis


def delta_G_basis(p: GroupParams, f: FieldDescriptor) -> List[GroupRingElement]:
    """Basis of the augmentation ideal, spanned by g - 1."""
    identity = one(p, f)
    spanning = [basis_element(g, p, f) - identity for g in group.elements(p)]
    return from_rows(row_echelon(as_rows(spanning, p, f)), p, f)


def check_direct_sum(p: GroupParams, f: FieldDescriptor) -> DirectSumLedger:
    """
    Verify Delta(G) = J(FG) + Delta(G,H) with zero intersection.

    Raises:
        VerificationFailure: A rank or containment check failed

    """
    radical = annihilator_basis(p, f).basis
    for v in radical:
        if augmentation(v):
            raise VerificationFailure(
                "J in Delta(G)", f"augmentation of {v} is nonzero"
            )
    delta_gh = delta_GH_basis(p, f)
    delta_g = as_rows(delta_G_basis(p, f), p, f)
    combined = as_rows([*radical, *delta_gh], p, f)
    ledger = DirectSumLedger(len(delta_g), len(radical), len(delta_gh), rank(combined))
    if ledger.combined_rank != 3 * p.m - 1 or ledger.dim_delta_G != 3 * p.m - 1:
        raise VerificationFailure(
            "direct sum",
            f"rank(J + Delta(G,H)) = {ledger.combined_rank}, "
            f"dim Delta(G) = {ledger.dim_delta_G}, expected {3 * p.m - 1}",
        )
    if ledger.intersection_dim:
        raise VerificationFailure(
            "J meets Delta(G,H)",
            f"intersection has dimension {ledger.intersection_dim}",
        )
    if not same_span(combined, delta_g):
        raise VerificationFailure("direct sum", "J + Delta(G,H) is not Delta(G)")
    return ledger


def class_sums(p: GroupParams, f: FieldDescriptor) -> List[GroupRingElement]:
    """Class sums of the k conjugacy classes of size three."""
    return [
        hat(cls.members, p, f)
        for cls in group.conjugacy_classes(p)
        if cls.size == 3
    ]


def center_basis(p: GroupParams, f: FieldDescriptor) -> List[GroupRingElement]:
    """
    The class sums C_1, ..., C_k spanning the centre of Delta(G,H).

    Each sum is checked to commute with x and y and to lie in Delta(G,H) by
    solving beta (x - 1) = C_i.
    """
    sums = class_sums(p, f)
    x_minus_one = regular_representation(_x_minus_one(p, f))
    generators = [basis_element(g, p, f) for g in (group.X, group.Y)]
    for class_sum in sums:
        for generator in generators:
            if gr_mul(class_sum, generator) != gr_mul(generator, class_sum):
                raise VerificationFailure("central class sum", f"{class_sum}")
        try:
            solve(x_minus_one, class_sum.coeffs)
        except NoSolution:
            raise VerificationFailure(
                "class sum in Delta(G,H)", f"no beta with beta (x - 1) = {class_sum}"
            )
    dimension = rank(as_rows(sums, p, f))
    if dimension != p.k:
        raise VerificationFailure(
            "dim Z(Delta(G,H))", f"got {dimension}, expected {p.k}"
        )
    return sums


def center_of_delta(p: GroupParams, f: FieldDescriptor) -> List[GroupRingElement]:
    """The centre of Delta(G,H) solved for directly: v with v x = x v and v y = y v."""
    delta = as_rows(delta_GH_basis(p, f), p, f)
    blocks = []
    for g in (group.X, group.Y):
        generator = basis_element(g, p, f)
        commutator = left_representation(generator) - regular_representation(generator)
        blocks.append(commutator @ delta.T)
    coordinates = kernel_basis(stack(f.gf, blocks, len(delta)))
    return from_rows(row_echelon(coordinates @ delta), p, f)


def component_count_from_center(p: GroupParams, n: int) -> int:
    """
    Number of simple components, read off the centre.

    The centre of each M_3(F_(q^d)) is F_(q^d), where alpha -> alpha^q fixes
    exactly F_q; so the fixed space of that map on the whole centre has one
    dimension per component.
    """
    f = build_field(n)
    sums = class_sums(p, f)
    basis = as_rows(sums, p, f)
    images = [solve(basis.T, gr_pow(c, f.order).coeffs) for c in sums]
    frobenius = f.gf(np.stack([image.view(np.ndarray) for image in images], axis=1))
    return len(kernel_basis(frobenius - f.gf.Identity(len(sums))))


def semisimple_check(p: GroupParams, f: FieldDescriptor) -> bool:
    """
    Determine if no nonzero v in Delta(G,H) has v Delta(G,H) = 0.

    For v = c D with D the basis matrix, v b_j = c (D B_j) where B_j gathers
    b_j; the pairing has a trivial left kernel exactly when it has full rank.
    """
    delta = as_rows(delta_GH_basis(p, f), p, f)
    left_division = group.left_division_table(p)
    pairing = np.hstack(
        [(delta @ row[left_division]).view(np.ndarray) for row in delta]
    )
    return rank(f.gf(pairing)) == len(delta)


def decompose(p: GroupParams, n: int) -> DecompositionReport:
    """
    Run the full decomposition ledger over F_(3^n).

    Args:
        p: Group parameters
        n: Exponent of q = 3^n

    Returns:
        The measured dimensions and the component census

    """
    f = build_field(n)
    ledger = check_direct_sum(p, f)
    centre = center_basis(p, f)
    direct = center_of_delta(p, f)
    if not same_span(as_rows(centre, p, f), as_rows(direct, p, f)):
        raise VerificationFailure(
            "Z(Delta(G,H)) = class sums", f"centre has dimension {len(direct)}"
        )
    census = components(p, n)
    if sum(c.field_degree for c in census) != p.k:
        raise VerificationFailure("component degrees", "sum of d_i is not k")
    if sum(9 * c.field_degree for c in census) != ledger.dim_delta_GH:
        raise VerificationFailure("component dimensions", "sum of 9 d_i is not 3m - 3")
    count = component_count_from_center(p, n)
    if count != len(census):
        raise VerificationFailure(
            "component count", f"centre says {count}, orbits say {len(census)}"
        )
    semisimple = semisimple_check(p, f)
    if not semisimple:
        raise VerificationFailure("Delta(G,H) semisimple", "degenerate pairing")
    return DecompositionReport(
        ledger.dim_delta_G,
        ledger.dim_delta_GH,
        ledger.dim_J,
        ledger.intersection_dim,
        len(centre),
        census,
        count,
        semisimple,
    )
