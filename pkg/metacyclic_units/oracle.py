"""
Independent checks of the computed structure.

Three witnesses, none of which reuses the orbit census they test:

* explicit representations induced from characters of <x>, one per t-orbit,
  over a splitting field K = F_(3^lcm(n, ord_m(3)));
* the joint kernel of those representations and the augmentation, which
  must be J(FG);
* the proportion of units among uniformly random elements.
"""
import functools
import math
from fractions import Fraction
from multiprocessing import Pool
from typing import List, NamedTuple

import galois
import numpy as np

from . import group
from .decomposition import CosetOrbit, WedderburnComponent, components, t_orbits
from .errors import (
    ConstructionFailure,
    DegreeOutOfRange,
    SampleSizeTooSmall,
    VerificationFailure,
)
from .fields import (
    MAX_DEGREE,
    PRIME_FIELD,
    FieldDescriptor,
    FieldElement,
    build_field,
    coordinates,
    embed_array,
    find_root_of_unity,
)
from .group import GroupElement, GroupParams
from .group_ring import GroupRingElement, units_mask
from .linalg import kernel_basis, rank, same_span
from .radical import annihilator_basis, as_rows
from .structure import density, structure
from .utils import verbose

DEFAULT_SAMPLES = 20000
DEFAULT_SEED = 0
DEFAULT_TRIALS = 100
MIN_DENSITY_SAMPLES = 1000

# Samples drawn per seed; chunk c uses seed + c whatever the worker count.
CHUNK_SIZE = 1000


class InducedRepresentation(NamedTuple):
    """rho(x) = diag(zeta^j, zeta^jt, zeta^jt^2), rho(y) a 3-cycle."""

    params: GroupParams
    n: int
    orbit: CosetOrbit
    splitting_field: FieldDescriptor
    zeta: FieldElement
    image_of_x: galois.FieldArray
    image_of_y: galois.FieldArray
    # rho(g) for every group element, in index order.
    images: galois.FieldArray


class DensityReport(NamedTuple):
    """Observed against predicted proportion of units."""

    samples: int
    invertible_count: int
    empirical: Fraction
    predicted: Fraction
    z_score: float


class ComponentCheck(NamedTuple):
    """A predicted component next to its measured field degree."""

    component: WedderburnComponent
    measured_degree: int


def splitting_degree(p: GroupParams, n: int) -> int:
    """Degree over F_3 of the field holding F_q and the m-th roots of unity."""
    return math.lcm(n, group.multiplicative_order(3, p.m))


def check_splitting_degree(p: GroupParams, n: int) -> int:
    """
    Return the splitting degree, rejecting it past the field limit.

    Raises:
        DegreeOutOfRange: lcm(n, ord_m(3)) exceeds MAX_DEGREE

    """
    degree = splitting_degree(p, n)
    if degree > MAX_DEGREE:
        raise DegreeOutOfRange(
            f"checking m={p.m} over F_3^{n} needs a splitting field of degree "
            f"{degree}; the limit is {MAX_DEGREE}"
        )
    return degree


def _batched_matmul(
    left: galois.FieldArray, right: galois.FieldArray
) -> galois.FieldArray:
    """Matrix products of two equally long stacks of square matrices."""
    return (left[..., :, :, np.newaxis] * right[..., np.newaxis, :, :]).sum(axis=-2)


def _images(
    p: GroupParams, image_of_x: galois.FieldArray, image_of_y: galois.FieldArray
) -> galois.FieldArray:
    """rho(x^i y^j) = rho(x)^i rho(y)^j for every element, in index order."""
    gf = type(image_of_x)
    diagonal = gf([int(image_of_x[r, r]) for r in range(3)])
    powers = diagonal ** np.arange(p.m)[:, np.newaxis]
    cycles = gf(
        np.stack(
            [
                c.view(np.ndarray)
                for c in (gf.Identity(3), image_of_y, image_of_y @ image_of_y)
            ]
        )
    )
    indices = np.arange(p.order)
    return powers[indices % p.m][:, :, np.newaxis] * cycles[indices // p.m]


@functools.lru_cache(maxsize=None)
def build_representation(
    p: GroupParams, n: int, orbit: CosetOrbit
) -> InducedRepresentation:
    """
    Induce the character x -> zeta^j of <x> up to T_3m.

    Args:
        p: Group parameters
        n: Exponent of q = 3^n; the splitting field contains F_q
        orbit: A t-orbit {j, jt, jt^2}

    Returns:
        The (cached) representation, after checking its defining relations

    Raises:
        DegreeOutOfRange: The splitting field is past the field limit

    """
    j = orbit.representative
    exponents = [(j * pow(p.t, i, p.m)) % p.m for i in range(3)]
    if sorted(exponents) != list(orbit.exponents):
        raise ValueError(f"{orbit.exponents} is not a t-orbit of size three")
    field = build_field(check_splitting_degree(p, n))
    zeta = find_root_of_unity(field, p.m)
    gf = field.gf
    image_of_x = gf.Zeros((3, 3))
    for i, exponent in enumerate(exponents):
        image_of_x[i, i] = (zeta ** exponent).value
    image_of_y = gf.Zeros((3, 3))
    for i in range(3):
        image_of_y[(i + 1) % 3, i] = 1
    identity = gf.Identity(3)
    relations = {
        "rho(y)^-1 rho(x) rho(y) = rho(x)^t": (
            np.linalg.inv(image_of_y) @ image_of_x @ image_of_y,
            np.linalg.matrix_power(image_of_x, p.t),
        ),
        "rho(x)^m = 1": (np.linalg.matrix_power(image_of_x, p.m), identity),
        "rho(y)^3 = 1": (np.linalg.matrix_power(image_of_y, 3), identity),
    }
    for name, (left, right) in relations.items():
        if not np.array_equal(left.view(np.ndarray), right.view(np.ndarray)):
            raise ConstructionFailure(name, f"orbit {orbit.exponents}")
    verbose(f"orbit {orbit.exponents}: representation over {field.name}")
    return InducedRepresentation(
        p,
        n,
        orbit,
        field,
        zeta,
        image_of_x,
        image_of_y,
        _images(p, image_of_x, image_of_y),
    )


def representation_images(rep: InducedRepresentation) -> galois.FieldArray:
    """The matrices rho(g), indexed like the group elements."""
    return rep.images


def rho(rep: InducedRepresentation, g: GroupElement) -> galois.FieldArray:
    """The matrix of one group element."""
    return rep.images[g.index(rep.params)]


def rho_of_element(
    rep: InducedRepresentation, a: GroupRingElement
) -> galois.FieldArray:
    """rho extended linearly, with coefficients embedded in the splitting field."""
    coeffs = embed_array(a.coeffs, a.field, rep.splitting_field)
    return (coeffs[:, np.newaxis, np.newaxis] * rep.images).sum(axis=0)


def check_homomorphism(
    rep: InducedRepresentation, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED
) -> bool:
    """
    Check rho(gh) = rho(g) rho(h) on generator pairs and random pairs.

    Raises:
        VerificationFailure: Naming the first offending pair

    """
    if trials < 1:
        raise SampleSizeTooSmall(f"need at least one trial (got {trials})")
    p = rep.params
    special = np.array([g.index(p) for g in (group.IDENTITY, group.X, group.Y)])
    rng = np.random.default_rng(seed)
    pairs = np.concatenate(
        (
            np.stack(np.meshgrid(special, special), axis=-1).reshape(-1, 2),
            rng.integers(0, p.order, size=(trials, 2)),
        )
    )
    left, right = pairs[:, 0], pairs[:, 1]
    expected = rep.images[group.multiplication_table(p)[left, right]]
    products = _batched_matmul(rep.images[left], rep.images[right])
    mismatched = np.any(
        products.view(np.ndarray) != expected.view(np.ndarray), axis=(1, 2)
    )
    if np.any(mismatched):
        g, h = pairs[int(np.argmax(mismatched))]
        raise VerificationFailure(
            "homomorphism",
            f"rho({group.describe(group.element_at(int(g), p))} * "
            f"{group.describe(group.element_at(int(h), p))})",
        )
    return True


def _scaled_coordinates(
    rep: InducedRepresentation, base: FieldDescriptor
) -> np.ndarray:
    """
    F_3-coordinates of w^l rho(g), with w^l the power basis of F_q.

    Returns:
        An array indexed by (group element, l, coordinate)

    """
    field = rep.splitting_field
    scalars = embed_array(base.gf(3 ** np.arange(base.degree)), base, field)
    images = rep.images[:, np.newaxis]
    products = scalars[np.newaxis, :, np.newaxis, np.newaxis] * images
    return coordinates(products, field).reshape(
        rep.params.order, base.degree, 9 * field.degree
    )


def component_field_degree(rep: InducedRepresentation, n: int) -> int:
    """
    Measure d for the component rep belongs to.

    The F_q-span of the images is M_3(F_(q^d)), of F_q-dimension 9d. Its
    F_3-dimension is found from the coordinates of w^l rho(g), w a
    generator of F_q inside the splitting field.
    """
    vectors = _scaled_coordinates(rep, build_field(n))
    dimension = rank(PRIME_FIELD(vectors.reshape(-1, vectors.shape[-1])))
    if dimension % (9 * n):
        raise VerificationFailure(
            "component degree", f"span has F_3-dimension {dimension}"
        )
    return dimension // (9 * n)


def verify_component_degrees(p: GroupParams, n: int) -> List[ComponentCheck]:
    """Measure d_i for every merged orbit and compare with the census."""
    check_splitting_degree(p, n)
    orbits = t_orbits(p)
    checks = []
    for component in components(p, n):
        orbit = next(o for o in orbits if o.representative in component.orbit.exponents)
        measured = component_field_degree(build_representation(p, n, orbit), n)
        if measured != component.field_degree:
            raise VerificationFailure(
                "component degree",
                f"orbit {component.orbit.exponents}: measured {measured}, "
                f"predicted {component.field_degree}",
            )
        checks.append(ComponentCheck(component, measured))
    return checks


def kernel_is_radical(p: GroupParams, n: int) -> bool:
    """
    The joint kernel of the augmentation and every rho is J(FG).

    Over the splitting field the representations of all t-orbits together
    with the augmentation separate FG / J. An element sum a_g g is written
    through the F_3-coordinates of its coefficients, so the kernel is found
    over F_3, where it has dimension 2n and must be spanned by Anh(s_hat).
    """
    base = build_field(n)
    reps = [build_representation(p, n, orbit) for orbit in t_orbits(p)]
    # One row per (g, l): the coordinates of w^l under augmentation and each rho.
    blocks = [np.tile(np.eye(n, dtype=np.int64), (p.order, 1))]
    for rep in reps:
        blocks.append(_scaled_coordinates(rep, base).reshape(p.order * n, -1))
    system = PRIME_FIELD(np.hstack(blocks))
    kernel = kernel_basis(system.T)
    if len(kernel) != 2 * n:
        raise VerificationFailure(
            "representation kernel",
            f"F_3-dimension {len(kernel)}, expected {2 * n}",
        )
    radical_rows = as_rows(annihilator_basis(p, base).basis, p, base)
    scaled = base.gf(3 ** np.arange(n))[:, np.newaxis, np.newaxis] * radical_rows
    radical = PRIME_FIELD(coordinates(scaled, base).reshape(-1, p.order * n))
    if np.any((radical @ system).view(np.ndarray)):
        raise VerificationFailure("representation kernel", "rho(J) is not zero")
    if not same_span(kernel, radical):
        raise VerificationFailure("representation kernel", "kernel is not J(FG)")
    return True


def _count_units(m: int, t: int, n: int, size: int, seed: int) -> int:
    """Units among one chunk of random elements."""
    p = GroupParams(m, t)
    field = build_field(n)
    rng = np.random.default_rng(seed)
    samples = field.random_array((size, p.order), rng)
    return int(units_mask(samples, p).sum())


def monte_carlo_density(
    p: GroupParams,
    n: int,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
) -> DensityReport:
    """
    Compare the observed proportion of units with total_order / q^(3m).

    Args:
        p: Group parameters
        n: Exponent of q = 3^n
        samples: Number of uniform elements drawn
        seed: Base seed; chunk c is drawn with seed + c
        workers: Processes sharing the chunks

    Returns:
        Exact counts and the z-score of the observed count

    """
    if samples < MIN_DENSITY_SAMPLES:
        raise SampleSizeTooSmall(
            f"density needs at least {MIN_DENSITY_SAMPLES} samples (got {samples})"
        )
    predicted = density(structure(p.m, p.t, n))
    jobs = [
        (p.m, p.t, n, min(CHUNK_SIZE, samples - start), seed + chunk)
        for chunk, start in enumerate(range(0, samples, CHUNK_SIZE))
    ]
    if workers > 1:
        with Pool(workers) as pool:
            counts = pool.starmap(_count_units, jobs)
    else:
        counts = []
        for number, job in enumerate(jobs, start=1):
            verbose(f"sampling chunk {number}/{len(jobs)}")
            counts.append(_count_units(*job))
    count = sum(counts)
    expected = samples * predicted
    spread = math.sqrt(samples * predicted * (1 - predicted))
    z_score = float(count - expected) / spread if spread else 0.0
    return DensityReport(samples, count, Fraction(count, samples), predicted, z_score)
