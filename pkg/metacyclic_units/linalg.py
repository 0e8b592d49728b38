"""Exact linear algebra over ``galois`` field arrays."""
from typing import List, Sequence, Type

import galois
import numpy as np

from .errors import NoSolution


def stack(
    gf: Type[galois.FieldArray], blocks: Sequence[np.ndarray], ncols: int
) -> galois.FieldArray:
    """Stack row blocks of one field into a single matrix, allowing no blocks."""
    rows = [np.asarray(b.view(np.ndarray)).reshape(-1, ncols) for b in blocks]
    if not rows:
        return gf.Zeros((0, ncols))
    return gf(np.vstack(rows))


def row_echelon(matrix: galois.FieldArray) -> galois.FieldArray:
    """Nonzero rows of the reduced row echelon form."""
    if matrix.shape[0] == 0:
        return matrix
    reduced = matrix.row_reduce()
    return reduced[np.any(reduced.view(np.ndarray) != 0, axis=1)]


def pivot_columns(echelon: galois.FieldArray) -> List[int]:
    """Column of the leading one in each row of an echelon matrix."""
    return [int(np.flatnonzero(row.view(np.ndarray))[0]) for row in echelon]


def rank(matrix: galois.FieldArray) -> int:
    """Rank over the field of the matrix entries."""
    if matrix.size == 0:
        return 0
    return int(np.linalg.matrix_rank(matrix))


def kernel_basis(matrix: galois.FieldArray) -> galois.FieldArray:
    """
    Basis of {v : matrix @ v = 0}, one vector per row.

    The basis comes back in reduced row echelon form, so it only depends on
    the kernel itself.
    """
    if matrix.shape[0] == 0:
        return type(matrix).Identity(matrix.shape[1])
    return row_echelon(matrix.null_space())


def solve(matrix: galois.FieldArray, vector: galois.FieldArray) -> galois.FieldArray:
    """
    Find one solution of matrix @ v = vector.

    Free variables are set to zero.

    Raises:
        NoSolution: The system is inconsistent

    """
    gf = type(matrix)
    rows, cols = matrix.shape
    augmented = gf(
        np.hstack(
            (
                matrix.view(np.ndarray),
                np.asarray(vector.view(np.ndarray)).reshape(rows, 1),
            )
        )
    )
    echelon = row_echelon(augmented)
    pivots = pivot_columns(echelon)
    if pivots and pivots[-1] == cols:
        raise NoSolution("the linear system is inconsistent")
    solution = gf.Zeros(cols)
    for row, column in zip(echelon, pivots):
        solution[column] = row[-1]
    return solution


def same_span(first: galois.FieldArray, second: galois.FieldArray) -> bool:
    """Determine if two sets of row vectors span the same subspace."""
    gf = type(first)
    combined = stack(gf, [first, second], first.shape[-1])
    return rank(first) == rank(second) == rank(combined)
