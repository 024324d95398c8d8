"""Finite-dimensional algebras given by structure constants.

Used for endomorphism rings and their quotients (top, stable End). The
radical is the kernel of the regular trace form, which is exact in
characteristic 0 and in characteristic p > dim.
"""
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
from sympy import Poly, Rational, Symbol

from config import Config
from engine import linalg
from models.field import FieldSpec, Matrix
from utils.errors import UnsupportedCharacteristicError

logger = logging.getLogger(__name__)

_t = Symbol('t')


@dataclass(frozen=True)
class StructureTable:
    """``constants[i][j]`` holds the coordinates of e_i·e_j; ``unit`` those of 1."""

    field: FieldSpec
    dim: int
    constants: Tuple[Tuple[Tuple, ...], ...]
    unit: Tuple

    def multiply(self, x: Sequence, y: Sequence) -> List:
        zero = self.field.zero
        out = [zero] * self.dim
        for i, a in enumerate(x):
            if self.field.is_zero(a):
                continue
            for j, b in enumerate(y):
                if self.field.is_zero(b):
                    continue
                ab = a * b
                for k, c in enumerate(self.constants[i][j]):
                    out[k] = out[k] + ab * c
        return out

    def to_dict(self) -> dict:
        return {'dim': self.dim, 'unit': [self.field.to_str(x) for x in self.unit]}


def check_characteristic(field_spec: FieldSpec, dim: int):
    p = field_spec.characteristic
    if p and p <= dim:
        raise UnsupportedCharacteristicError(
            f'radical computation needs characteristic 0 or p > {dim}; field is {field_spec.label}')


def trace_gram(table: StructureTable) -> Matrix:
    """Gram matrix of the regular trace form (x, y) -> Tr(L_{xy})."""
    K = table.field
    n = table.dim
    traces = []
    for k in range(n):
        total = K.zero
        for m in range(n):
            total = total + table.constants[k][m][m]
        traces.append(total)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            total = K.zero
            for k, c in enumerate(table.constants[i][j]):
                total = total + c * traces[k]
            row.append(total)
        rows.append(row)
    return Matrix(rows, (n, n), K)


def radical_basis(table: StructureTable) -> Matrix:
    """Columns spanning the Jacobson radical."""
    check_characteristic(table.field, table.dim)
    if table.dim == 0:
        return Matrix.zeros(0, 0, table.field)
    return linalg.kernel_basis(trace_gram(table))


def quotient_table(table: StructureTable, ideal: Matrix) -> StructureTable:
    """Structure constants of A/I for a two-sided ideal spanned by the columns of ``ideal``."""
    K = table.field
    n = table.dim
    ideal = linalg.column_space(ideal) if ideal.cols else ideal
    keep = linalg.complement_indices(ideal)
    change = ideal.hstack(linalg.standard_columns(n, keep, K))
    inverse = linalg.inverse(change)
    r = ideal.cols

    def project(vec: Sequence) -> Tuple:
        coords = inverse @ Matrix.from_columns([vec], K, n)
        return tuple(coords[r + i, 0] for i in range(len(keep)))

    constants = tuple(tuple(project(table.constants[i][j]) for j in keep) for i in keep)
    return StructureTable(K, len(keep), constants, project(table.unit))


def minimal_polynomial(table: StructureTable, x: Sequence) -> List:
    """Monic minimal polynomial of x, coefficients in ascending degree."""
    K = table.field
    powers = [list(table.unit)]
    while True:
        nxt = table.multiply(powers[-1], x)
        basis = Matrix.from_columns(powers, K, table.dim)
        coeffs = linalg.solve(basis, Matrix.from_columns([nxt], K, table.dim))
        if coeffs is not None:
            return [-coeffs[i, 0] for i in range(len(powers))] + [K.one]
        powers.append(nxt)


def _factor(field_spec: FieldSpec, coeffs: Sequence) -> List[Tuple[int, int]]:
    """(degree, multiplicity) of the irreducible factors of a polynomial over the field."""
    K = field_spec.domain
    if field_spec.characteristic == 0:
        sym = [Rational(int(K.numer(c)), int(K.denom(c))) for c in reversed(coeffs)]
        poly = Poly(sym, _t, domain='QQ')
    else:
        sym = [field_spec.to_int(c) for c in reversed(coeffs)]
        poly = Poly(sym, _t, modulus=field_spec.characteristic)
    _, factors = poly.factor_list()
    return [(f.degree(), mult) for f, mult in factors]


def _poly_text(field_spec: FieldSpec, coeffs: Sequence) -> str:
    terms = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if field_spec.is_zero(c):
            continue
        terms.append(f'({field_spec.to_str(c)})t^{d}')
    return ' + '.join(terms) or '0'


def _candidates(table: StructureTable, rng, samples: int):
    K = table.field
    n = table.dim
    for i in range(n):
        yield [K.one if k == i else K.zero for k in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            yield [K.one if k in (i, j) else K.zero for k in range(n)]
    for _ in range(samples):
        yield linalg.random_vector(n, K, rng)


def division_evidence(table: StructureTable, seed: int = 0, samples: int = None) -> dict:
    """Decide whether the algebra is a division ring, with evidence.

    dim 1 with zero radical is k; a nonzero radical or an element whose
    minimal polynomial is reducible rules out a division ring; an element
    whose minimal polynomial is irreducible of degree dim generates a field
    equal to the whole algebra. Anything else is inconclusive.
    """
    if samples is None:
        samples = Config.DIVISION_SAMPLES
    K = table.field
    if table.dim == 0:
        return {'verdict': 'no', 'reason': 'zero algebra'}
    rad = radical_basis(table)
    if rad.cols:
        return {'verdict': 'no', 'reason': f'radical of dimension {rad.cols}'}
    if table.dim == 1:
        return {'verdict': 'yes', 'reason': 'one-dimensional semisimple algebra is the ground field'}
    if table.dim > Config.DIVISION_MAX_DIM:
        return {'verdict': 'inconclusive', 'reason': f'dimension {table.dim} exceeds {Config.DIVISION_MAX_DIM}'}
    rng = np.random.default_rng(seed)
    for x in _candidates(table, rng, samples):
        coeffs = minimal_polynomial(table, x)
        factors = _factor(K, coeffs)
        element = [K.to_str(c) for c in x]
        if len(factors) > 1 or any(mult > 1 for _, mult in factors):
            logger.debug('reducible minimal polynomial %s', _poly_text(K, coeffs))
            return {'verdict': 'no', 'reason': 'element with reducible minimal polynomial (idempotent or nilpotent)',
                    'element': element, 'minimal_polynomial': _poly_text(K, coeffs)}
        if factors and factors[0][0] == table.dim:
            return {'verdict': 'yes', 'reason': 'element generates a field of full dimension',
                    'element': element, 'minimal_polynomial': _poly_text(K, coeffs)}
    return {'verdict': 'inconclusive', 'reason': 'no decisive element found'}
