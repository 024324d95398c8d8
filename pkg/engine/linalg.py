"""Exact dense linear algebra over Q and F_p.

Row reduction is delegated to sympy's DomainMatrix; this module adds the
zero-size guards and the handful of derived operations the rest of the
engine needs (null spaces, particular solutions, complements).
"""
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config import Config
from models.field import FieldSpec, Matrix
from utils.errors import DimensionMismatchError, FieldMismatchError

logger = logging.getLogger(__name__)


def rref(m: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    if m.rows == 0 or m.cols == 0:
        return Matrix.zeros(m.rows, m.cols, m.field), []
    reduced, pivots = m.to_domain_matrix().rref()
    return Matrix.from_domain_matrix(reduced, m.field), list(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> Matrix:
    """Columns spanning the right null space of ``m``.

    One column per free column of the echelon form, in increasing order, with
    a 1 in the free position.
    """
    field = m.field
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    columns = []
    for f in free:
        vec = [field.zero] * m.cols
        vec[f] = field.one
        for i, p in enumerate(pivots):
            vec[p] = -reduced[i, f]
        columns.append(vec)
    return Matrix.from_columns(columns, field, m.cols)


def solve(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """One solution ``x`` of ``a @ x == b``, or None when the system is inconsistent."""
    if a.field != b.field:
        raise FieldMismatchError(f'operands over {a.field.label} and {b.field.label}')
    if a.rows != b.rows:
        raise DimensionMismatchError(f'solve needs equal row counts, got {a.shape} and {b.shape}')
    field = a.field
    reduced, pivots = rref(a.hstack(b))
    if any(p >= a.cols for p in pivots):
        return None
    x = [[field.zero] * b.cols for _ in range(a.cols)]
    for i, p in enumerate(pivots):
        for j in range(b.cols):
            x[p][j] = reduced[i, a.cols + j]
    return Matrix(x, (a.cols, b.cols), field)


def inverse(m: Matrix) -> Optional[Matrix]:
    """Inverse of a square matrix, or None if it is singular."""
    if not m.is_square():
        raise DimensionMismatchError(f'inverse of non-square {m.shape}')
    if rank(m) != m.rows:
        return None
    return solve(m, Matrix.identity(m.rows, m.field))


def is_invertible(m: Matrix) -> bool:
    return m.is_square() and rank(m) == m.rows


def matrix_power(n: Matrix, s: int) -> Matrix:
    if not n.is_square():
        raise DimensionMismatchError(f'power of non-square {n.shape}')
    result = Matrix.identity(n.rows, n.field)
    for _ in range(s):
        result = result @ n
    return result


def rank_of_power(n: Matrix, s: int) -> int:
    """rank(n^s), with n^0 the identity."""
    if not n.is_square():
        raise DimensionMismatchError(f'rank_of_power needs a square matrix, got {n.shape}')
    if s < 0:
        raise DimensionMismatchError('exponent must be nonnegative')
    return rank(matrix_power(n, s))


def column_space(m: Matrix) -> Matrix:
    """Pivot columns of ``m``: a basis of its column space."""
    _, pivots = rref(m)
    return m.select_columns(pivots)


def complement_indices(sub: Matrix) -> List[int]:
    """Standard basis indices completing the columns of ``sub`` to a basis."""
    n = sub.rows
    _, pivots = rref(sub.hstack(Matrix.identity(n, sub.field)))
    return [p - sub.cols for p in pivots if p >= sub.cols]


def standard_columns(n: int, indices: Sequence[int], field: FieldSpec) -> Matrix:
    columns = []
    for idx in indices:
        vec = [field.zero] * n
        vec[idx] = field.one
        columns.append(vec)
    return Matrix.from_columns(columns, field, n)


def in_span(basis: Matrix, vectors: Matrix) -> bool:
    """True if every column of ``vectors`` lies in the column span of ``basis``."""
    return solve(basis, vectors) is not None


def random_matrix(rows: int, cols: int, field: FieldSpec, seed=0, rng: np.random.Generator = None,
                  bound: int = None) -> Matrix:
    """Seeded random matrix.

    Over Q entries are integers in [-bound, bound] (bound defaults to
    ``Config.RANDOM_BOUND``); over F_p entries are uniform residues.
    """
    if rng is None:
        rng = np.random.default_rng(seed)
    if bound is None:
        bound = Config.RANDOM_BOUND
    data = [[field.random_element(rng, bound) for _ in range(cols)] for _ in range(rows)]
    return Matrix(data, (rows, cols), field)


def random_vector(n: int, field: FieldSpec, rng: np.random.Generator, bound: int = None) -> List:
    if bound is None:
        bound = Config.RANDOM_BOUND
    return [field.random_element(rng, bound) for _ in range(n)]


def combine_columns(basis: Matrix, coeffs: Sequence) -> List:
    """Linear combination of the columns of ``basis``."""
    field = basis.field
    out = [field.zero] * basis.rows
    for j, c in enumerate(coeffs):
        if field.is_zero(c):
            continue
        for i in range(basis.rows):
            out[i] = out[i] + c * basis[i, j]
    return out
