"""Exact ground fields and dense matrices over them."""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from utils.errors import DimensionMismatchError, FieldMismatchError, FormatError, OutOfRangeError

RATIONALS = 'rationals'
PRIME_FIELD = 'prime-field'
MAX_CHARACTERISTIC = 2 ** 61


@lru_cache(maxsize=None)
def _domain_for(characteristic: int):
    if characteristic == 0:
        return QQ
    return GF(characteristic, symmetric=False)


@dataclass(frozen=True)
class FieldSpec:
    """The ground field k: the rationals or a prime field F_p."""

    kind: str
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.characteristic != 0:
                raise OutOfRangeError('the rationals have characteristic 0')
        elif self.kind == PRIME_FIELD:
            p = self.characteristic
            if not (1 < p < MAX_CHARACTERISTIC and isprime(p)):
                raise OutOfRangeError(f'characteristic must be a prime below 2^61, got {p}')
        else:
            raise OutOfRangeError(f'unknown field kind {self.kind!r}')

    @classmethod
    def rationals(cls) -> 'FieldSpec':
        return cls(RATIONALS, 0)

    @classmethod
    def prime(cls, p: int) -> 'FieldSpec':
        return cls(PRIME_FIELD, int(p))

    @property
    def domain(self):
        """The sympy domain doing the arithmetic."""
        return _domain_for(self.characteristic)

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    @property
    def label(self) -> str:
        return 'Q' if self.characteristic == 0 else f'F_{self.characteristic}'

    def convert(self, value):
        """Convert an int, Fraction, scalar string or domain element."""
        K = self.domain
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return K.convert(value)
        if isinstance(value, Fraction):
            return self._from_ratio(value.numerator, value.denominator)
        return K.convert(value)

    def _from_ratio(self, num: int, den: int):
        K = self.domain
        if den == 0:
            raise FormatError('zero denominator')
        if self.characteristic == 0:
            return K(num, den)
        if den % self.characteristic == 0:
            raise FormatError(f'denominator {den} is not invertible in {self.label}')
        return K.convert(num) / K.convert(den)

    def parse(self, text: str):
        """Parse "p/q" or "r" into a field element."""
        text = text.strip()
        try:
            if '/' in text:
                num, den = text.split('/', 1)
                return self._from_ratio(int(num), int(den))
            return self.domain.convert(int(text))
        except ValueError:
            raise FormatError(f'malformed scalar {text!r}')

    def to_str(self, x) -> str:
        """Serialize a scalar: "p/q" (or "p" when q = 1) over Q, residue "r" over F_p."""
        K = self.domain
        if self.characteristic == 0:
            num, den = int(K.numer(x)), int(K.denom(x))
            return str(num) if den == 1 else f'{num}/{den}'
        return str(int(K.to_int(x)) % self.characteristic)

    def to_int(self, x) -> int:
        """Integer value of an integral rational or of a residue in [0, p)."""
        K = self.domain
        if self.characteristic == 0:
            if int(K.denom(x)) != 1:
                raise FormatError(f'{self.to_str(x)} is not an integer')
            return int(K.numer(x))
        return int(K.to_int(x)) % self.characteristic

    def is_zero(self, x) -> bool:
        return self.domain.is_zero(x)

    def is_unit(self, x) -> bool:
        return not self.is_zero(x)

    def inverse(self, x):
        return self.one / x

    def random_element(self, rng, bound: int = 64):
        """Uniform integer in [-bound, bound] over Q, uniform residue over F_p."""
        if self.characteristic == 0:
            return self.domain.convert(int(rng.integers(-bound, bound + 1)))
        return self.domain.convert(int(rng.integers(0, self.characteristic)))

    def to_dict(self) -> dict:
        if self.characteristic == 0:
            return {'kind': 'Q'}
        return {'kind': 'Fp', 'p': self.characteristic}


def _check_same_field(a: 'Matrix', b: 'Matrix'):
    if a.field != b.field:
        raise FieldMismatchError(f'operands over {a.field.label} and {b.field.label}')


class Matrix:
    """Immutable dense matrix over a FieldSpec.

    Entries are held row-major as sympy domain elements; rationals are kept
    in lowest terms with positive denominator by the domain itself.
    """

    __slots__ = ('_rows', '_shape', 'field')

    def __init__(self, rows: Sequence[Sequence], shape: Tuple[int, int], field: FieldSpec):
        self._rows = tuple(tuple(row) for row in rows)
        self._shape = (int(shape[0]), int(shape[1]))
        self.field = field
        if len(self._rows) != self._shape[0] or any(len(r) != self._shape[1] for r in self._rows):
            raise DimensionMismatchError(f'entries do not match shape {self._shape}')

    # -- construction -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], field: FieldSpec, cols: int = None) -> 'Matrix':
        converted = [[field.convert(x) for x in row] for row in rows]
        if cols is None:
            cols = len(converted[0]) if converted else 0
        return cls(converted, (len(converted), cols), field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: FieldSpec, rows: int) -> 'Matrix':
        converted = [[field.convert(x) for x in col] for col in columns]
        data = [[col[i] for col in converted] for i in range(rows)]
        return cls(data, (rows, len(converted)), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec) -> 'Matrix':
        z = field.zero
        return cls([[z] * cols for _ in range(rows)], (rows, cols), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> 'Matrix':
        z, o = field.zero, field.one
        return cls([[o if i == j else z for j in range(n)] for i in range(n)], (n, n), field)

    @classmethod
    def block_diagonal(cls, blocks: Sequence['Matrix'], field: FieldSpec) -> 'Matrix':
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        data = [[field.zero] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    data[r0 + i][c0 + j] = b._rows[i][j]
            r0 += b.rows
            c0 += b.cols
        return cls(data, (rows, cols), field)

    @classmethod
    def from_domain_matrix(cls, dm: DomainMatrix, field: FieldSpec) -> 'Matrix':
        rows, cols = dm.shape
        if rows == 0 or cols == 0:
            return cls.zeros(rows, cols, field)
        return cls(dm.to_list(), (rows, cols), field)

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([list(r) for r in self._rows], self._shape, self.field.domain)

    # -- access -------------------------------------------------------

    @property
    def rows(self) -> int:
        return self._shape[0]

    @property
    def cols(self) -> int:
        return self._shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._shape

    def __getitem__(self, index):
        i, j = index
        return self._rows[i][j]

    def row(self, i: int) -> List:
        return list(self._rows[i])

    def column(self, j: int) -> List:
        return [r[j] for r in self._rows]

    def to_rows(self) -> List[List]:
        return [list(r) for r in self._rows]

    def select_columns(self, indices: Sequence[int]) -> 'Matrix':
        return Matrix([[r[j] for j in indices] for r in self._rows], (self.rows, len(indices)), self.field)

    def select_rows(self, indices: Sequence[int]) -> 'Matrix':
        return Matrix([self._rows[i] for i in indices], (len(indices), self.cols), self.field)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        K = self.field.domain
        return all(K.is_zero(x) for r in self._rows for x in r)

    def trace(self):
        total = self.field.zero
        for i in range(min(self.shape)):
            total = total + self._rows[i][i]
        return total

    # -- arithmetic ---------------------------------------------------

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        _check_same_field(self, other)
        if self.cols != other.rows:
            raise DimensionMismatchError(f'cannot multiply {self.shape} by {other.shape}')
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return Matrix.zeros(self.rows, other.cols, self.field)
        product = self.to_domain_matrix().matmul(other.to_domain_matrix())
        return Matrix.from_domain_matrix(product, self.field)

    def _elementwise(self, other: 'Matrix', op) -> 'Matrix':
        _check_same_field(self, other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f'shape {self.shape} differs from {other.shape}')
        data = [[op(x, y) for x, y in zip(r, s)] for r, s in zip(self._rows, other._rows)]
        return Matrix(data, self.shape, self.field)

    def __add__(self, other: 'Matrix') -> 'Matrix':
        return self._elementwise(other, lambda x, y: x + y)

    def __sub__(self, other: 'Matrix') -> 'Matrix':
        return self._elementwise(other, lambda x, y: x - y)

    def __neg__(self) -> 'Matrix':
        return Matrix([[-x for x in r] for r in self._rows], self.shape, self.field)

    def scale(self, c) -> 'Matrix':
        c = self.field.convert(c)
        return Matrix([[c * x for x in r] for r in self._rows], self.shape, self.field)

    def transpose(self) -> 'Matrix':
        data = [[self._rows[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return Matrix(data, (self.cols, self.rows), self.field)

    @property
    def T(self) -> 'Matrix':
        return self.transpose()

    def hstack(self, *others: 'Matrix') -> 'Matrix':
        mats = (self,) + others
        for m in others:
            _check_same_field(self, m)
            if m.rows != self.rows:
                raise DimensionMismatchError('hstack needs equal row counts')
        data = [sum((m._rows[i] for m in mats), ()) for i in range(self.rows)]
        return Matrix(data, (self.rows, sum(m.cols for m in mats)), self.field)

    def vstack(self, *others: 'Matrix') -> 'Matrix':
        mats = (self,) + others
        for m in others:
            _check_same_field(self, m)
            if m.cols != self.cols:
                raise DimensionMismatchError('vstack needs equal column counts')
        data = [r for m in mats for r in m._rows]
        return Matrix(data, (len(data), self.cols), self.field)

    # -- comparison and serialization ---------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self._shape == other._shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.field, self._shape, self._rows))

    def __repr__(self) -> str:
        return f'Matrix({self.to_strings()}, field={self.field.label})'

    def to_strings(self) -> List[List[str]]:
        return [[self.field.to_str(x) for x in r] for r in self._rows]

    def to_ints(self) -> List[List[int]]:
        return [[self.field.to_int(x) for x in r] for r in self._rows]
