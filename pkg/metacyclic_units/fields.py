"""
Finite fields of characteristic three.

Every field is described by a :class:`FieldDescriptor` holding the degree
``e`` and the modulus of ``F_3[z]/(modulus)``; the arithmetic itself is done
by a ``galois`` field class built from that modulus. Elements are stored by
their integer representation ``sum(c_i * 3**i)``, so the coefficient vector
(constant term first) is just the base-3 expansion of that integer.
"""
import functools
import itertools
import math
import operator
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple, Type, Union

import galois
import numpy as np

from .errors import (
    DegreeOutOfRange,
    DivisionByZero,
    FieldMismatch,
    NoSuchRoot,
    NotASubfield,
)
from .utils import verbose

CHARACTERISTIC = 3

# Large enough for lcm(n, ord_m(3)) with m <= 50 and n <= 2; ord_43(3) = 42.
MAX_DEGREE = 42

PRIME_FIELD = galois.GF(CHARACTERISTIC)

Coefficients = Tuple[int, ...]


def to_coefficients(value: int, degree: int) -> Coefficients:
    """Split an integer representation into coefficients, constant term first."""
    digits = []
    for _ in range(degree):
        value, digit = divmod(value, CHARACTERISTIC)
        digits.append(digit)
    return tuple(digits)


def from_coefficients(coeffs: Sequence[int]) -> int:
    """Inverse of :func:`to_coefficients`."""
    return sum(
        (c % CHARACTERISTIC) * CHARACTERISTIC ** i for i, c in enumerate(coeffs)
    )


def digit_weights(degree: int) -> np.ndarray:
    """The powers 3^i for i < degree, as Python ints once they outgrow int64."""
    powers = [CHARACTERISTIC ** i for i in range(degree)]
    # galois stores fields past 2^63 elements with object dtype.
    if CHARACTERISTIC ** degree > np.iinfo(np.int64).max:
        return np.array(powers, dtype=object)
    return np.array(powers, dtype=np.int64)


def format_polynomial(coeffs: Sequence[int], variable: str = "z") -> str:
    """Render coefficients (constant term first) as ``2z^2 + z + 1``."""
    terms = []
    for power in reversed(range(len(coeffs))):
        coeff = coeffs[power] % CHARACTERISTIC
        if not coeff:
            continue
        if power == 0:
            terms.append(str(coeff))
            continue
        monomial = variable if power == 1 else f"{variable}^{power}"
        terms.append(monomial if coeff == 1 else f"{coeff}{monomial}")
    return " + ".join(terms) or "0"


def _poly(coeffs: Sequence[int], gf: Type[galois.FieldArray]) -> galois.Poly:
    return galois.Poly(list(coeffs), field=gf, order="asc")


def is_irreducible(coeffs: Sequence[int]) -> bool:
    """Determine if a polynomial over F_3 (constant term first) is irreducible."""
    if len(coeffs) == 2:
        return bool(coeffs[1] % CHARACTERISTIC)
    return bool(_poly(coeffs, PRIME_FIELD).is_irreducible())


def _monic_candidates(degree: int) -> Iterator[Coefficients]:
    """Monic polynomials of a degree, ascending in the constant-term-first order."""
    # Above degree one a zero constant term means z divides the polynomial.
    constants = range(CHARACTERISTIC) if degree == 1 else range(1, CHARACTERISTIC)
    for constant in constants:
        for middle in itertools.product(range(CHARACTERISTIC), repeat=degree - 1):
            yield (constant, *middle, 1)


@dataclass(frozen=True)
class FieldDescriptor:
    """The field F_{3^degree} = F_3[z]/(modulus)."""

    degree: int
    modulus: Coefficients
    gf: Type[galois.FieldArray] = dataclass_field(compare=False, repr=False)

    @property
    def order(self) -> int:
        """Number of elements, 3^degree."""
        return CHARACTERISTIC ** self.degree

    @property
    def name(self) -> str:
        """Short display name, e.g. ``F9``."""
        return f"F{self.order}"

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def element(self, coeffs: Sequence[int]) -> "FieldElement":
        """Build an element from its coefficients, constant term first."""
        if len(coeffs) > self.degree:
            raise ValueError(
                f"{self.name} elements have {self.degree} coefficients, "
                f"got {len(coeffs)}"
            )
        return FieldElement(self, from_coefficients(coeffs))

    def scalar(self, value: int) -> "FieldElement":
        """Image of an integer under Z -> F_3 -> this field."""
        return FieldElement(self, value % CHARACTERISTIC)

    def basis(self) -> List["FieldElement"]:
        """The power basis 1, z, ..., z^(degree-1) over F_3."""
        return [FieldElement(self, CHARACTERISTIC ** i) for i in range(self.degree)]

    def random_array(
        self, shape: Union[int, Tuple[int, ...]], rng: np.random.Generator
    ) -> galois.FieldArray:
        """Draw uniform elements, coefficient by coefficient."""
        shape = (shape,) if isinstance(shape, int) else tuple(shape)
        digits = rng.integers(0, CHARACTERISTIC, size=(*shape, self.degree))
        return self.gf(digits @ digit_weights(self.degree))

    def random(self, rng: np.random.Generator) -> "FieldElement":
        """Draw one uniform element."""
        return FieldElement(self, int(self.random_array(1, rng)[0]))


@dataclass(frozen=True)
class FieldElement:
    """An element of a field described by a :class:`FieldDescriptor`."""

    field: FieldDescriptor
    value: int

    @property
    def coeffs(self) -> Coefficients:
        """Coefficients over F_3, constant term first."""
        return to_coefficients(self.value, self.field.degree)

    def array(self) -> galois.FieldArray:
        """This element as a 0-d ``galois`` array."""
        return self.field.gf(self.value)

    def _operand(self, other: object) -> Optional[galois.FieldArray]:
        if isinstance(other, int):
            return self.field.gf(other % CHARACTERISTIC)
        if not isinstance(other, FieldElement):
            return None
        if other.field != self.field:
            raise FieldMismatch(
                f"operands live in {self.field.name} and {other.field.name}"
            )
        return other.array()

    def _wrap(self, array: galois.FieldArray) -> "FieldElement":
        return FieldElement(self.field, int(array))

    def _combine(
        self, other: object, op: Callable[[Any, Any], Any], reflected: bool = False
    ) -> "FieldElement":
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        if reflected:
            return self._wrap(op(operand, self.array()))
        return self._wrap(op(self.array(), operand))

    def __add__(self, other: object) -> "FieldElement":
        return self._combine(other, operator.add)

    __radd__ = __add__

    def __sub__(self, other: object) -> "FieldElement":
        return self._combine(other, operator.sub)

    def __rsub__(self, other: object) -> "FieldElement":
        return self._combine(other, operator.sub, reflected=True)

    def __neg__(self) -> "FieldElement":
        return self._wrap(-self.array())

    def __mul__(self, other: object) -> "FieldElement":
        return self._combine(other, operator.mul)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "FieldElement":
        divisor = self._operand(other)
        if divisor is None:
            return NotImplemented
        if int(divisor) == 0:
            raise DivisionByZero(f"division by zero in {self.field.name}")
        return self._wrap(self.array() / divisor)

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** -exponent
        # galois evaluates by square-and-multiply; reduce first to keep it small.
        if self.value and exponent:
            exponent = (exponent - 1) % (self.field.order - 1) + 1
        return self._wrap(self.array() ** exponent)

    def __bool__(self) -> bool:
        return self.value != 0

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse."""
        if not self.value:
            raise DivisionByZero(f"0 has no inverse in {self.field.name}")
        return self._wrap(self.array() ** -1)

    def sort_key(self) -> Coefficients:
        """Key for the deterministic coefficient-tuple order."""
        return self.coeffs

    def __str__(self) -> str:
        return format_polynomial(self.coeffs)


@functools.lru_cache(maxsize=None)
def build_field(degree: int) -> FieldDescriptor:
    """
    Build F_{3^degree} with a reproducible modulus.

    The modulus is the first irreducible monic polynomial when candidates are
    ordered by their coefficient tuple, constant term first.

    Args:
        degree: Extension degree over F_3

    Returns:
        The (cached) descriptor for that field

    """
    if not 1 <= degree <= MAX_DEGREE:
        raise DegreeOutOfRange(
            f"field degree must lie in 1..{MAX_DEGREE} (got {degree})"
        )
    modulus = next(c for c in _monic_candidates(degree) if is_irreducible(c))
    verbose(f"building F_3^{degree} with modulus {format_polynomial(modulus)}")
    if degree == 1:
        gf = PRIME_FIELD
    else:
        gf = galois.GF(
            CHARACTERISTIC ** degree, irreducible_poly=_poly(modulus, PRIME_FIELD)
        )
    return FieldDescriptor(degree, modulus, gf)


def frobenius(a: FieldElement, i: int = 1) -> FieldElement:
    """Return a^(3^i)."""
    return a ** (CHARACTERISTIC ** (i % a.field.degree))


def multiplicative_order(a: FieldElement) -> int:
    """Order of a nonzero element in the multiplicative group."""
    if not a:
        raise DivisionByZero("0 has no multiplicative order")
    return int(a.array().multiplicative_order())


def find_root_of_unity(field: FieldDescriptor, m: int) -> FieldElement:
    """
    Find the least element of multiplicative order exactly m.

    Args:
        field: Field to search
        m: Required order, a divisor of |field| - 1

    Returns:
        The element of order m whose coefficient tuple is smallest

    """
    if m < 1 or (field.order - 1) % m:
        raise NoSuchRoot(f"{m} does not divide {field.order - 1}")
    base = FieldElement(
        field, int(field.gf.primitive_element ** ((field.order - 1) // m))
    )
    candidates = (base ** e for e in range(1, m + 1) if math.gcd(e, m) == 1)
    return min(candidates, key=FieldElement.sort_key)


def coordinates(values: galois.FieldArray, field: FieldDescriptor) -> np.ndarray:
    """Coefficient vectors over F_3 of an array of elements, constant term first."""
    weights = digit_weights(field.degree)
    ints = np.asarray(values.view(np.ndarray), dtype=weights.dtype)
    digits = (ints[..., np.newaxis] // weights) % CHARACTERISTIC
    return digits.astype(np.int64)


@functools.lru_cache(maxsize=None)
def _embedding_root(source: FieldDescriptor, target: FieldDescriptor) -> int:
    """Least root, in the coefficient-tuple order, of the source modulus in target."""
    # The roots all lie in the unique subfield of the target with the source's
    # order, generated by a suitable power of the target's primitive element.
    step = (target.order - 1) // (source.order - 1)
    generator = target.gf.primitive_element ** step
    nonzero = generator ** np.arange(source.order - 1)
    candidates = target.gf([0, *(int(v) for v in nonzero)])
    values = _poly(source.modulus, target.gf)(candidates)
    roots = [int(r) for r in candidates[values.view(np.ndarray) == 0]]
    return min(roots, key=lambda v: to_coefficients(v, target.degree))


def embed_array(
    values: galois.FieldArray, source: FieldDescriptor, target: FieldDescriptor
) -> galois.FieldArray:
    """Map an array of source-field elements into target, entry by entry."""
    if target.degree % source.degree:
        raise NotASubfield(f"{source.name} is not a subfield of {target.name}")
    if source == target:
        return values
    root = target.gf(_embedding_root(source, target))
    powers = root ** np.arange(source.degree)
    digits = target.gf(coordinates(values, source))
    return (digits * powers).sum(axis=-1)


def embed(a: FieldElement, target: FieldDescriptor) -> FieldElement:
    """
    Embed an element into a larger field.

    The generator z of the source goes to the least root of the source modulus
    in the target, so the map is a ring homomorphism fixed once per field pair.
    """
    return FieldElement(target, int(embed_array(a.array(), a.field, target)))
