"""Names and parameters of the canonical Euclidean quivers."""
import re
from dataclasses import dataclass

from utils.errors import OutOfRangeError, UnknownFixtureError

A_TILDE = 'atilde'
D_TILDE = 'dtilde'
E_TILDE = 'etilde'

_A_NAME = re.compile(r'^atilde\((\d+),(\d+)\)$')
_D_NAME = re.compile(r'^dtilde(\d+)$')
_E_NAME = re.compile(r'^etilde(\d+)$')


@dataclass(frozen=True)
class EuclideanSpec:
    """Ã(p,q) with p, q >= 1, D̃(m) with m >= 4, or Ẽ(n) with n in {6, 7, 8}."""

    family: str
    p: int = 0
    q: int = 0
    m: int = 0

    def __post_init__(self):
        if self.family == A_TILDE:
            if self.p < 1 or self.q < 1:
                raise OutOfRangeError(f'Ã(p,q) needs p, q >= 1, got ({self.p},{self.q})')
        elif self.family == D_TILDE:
            if self.m < 4:
                raise OutOfRangeError(f'D̃(m) needs m >= 4, got {self.m}')
        elif self.family == E_TILDE:
            if self.m not in (6, 7, 8):
                raise OutOfRangeError(f'Ẽ(n) needs n in 6, 7, 8, got {self.m}')
        else:
            raise OutOfRangeError(f'unknown Euclidean family {self.family!r}')

    @classmethod
    def a_tilde(cls, p: int, q: int) -> 'EuclideanSpec':
        return cls(A_TILDE, p=p, q=q)

    @classmethod
    def d_tilde(cls, m: int) -> 'EuclideanSpec':
        return cls(D_TILDE, m=m)

    @classmethod
    def e_tilde(cls, n: int) -> 'EuclideanSpec':
        return cls(E_TILDE, m=n)

    @classmethod
    def from_name(cls, name: str) -> 'EuclideanSpec':
        """Parse ``atilde(p,q)``, ``dtilde<m>`` or ``etilde<n>``; ``kronecker`` is Ã(1,1)."""
        text = name.strip().lower().replace(' ', '')
        if text == 'kronecker':
            return cls.a_tilde(1, 1)
        match = _A_NAME.match(text)
        if match:
            return cls.a_tilde(int(match.group(1)), int(match.group(2)))
        match = _D_NAME.match(text)
        if match:
            return cls.d_tilde(int(match.group(1)))
        match = _E_NAME.match(text)
        if match:
            return cls.e_tilde(int(match.group(1)))
        raise UnknownFixtureError(f'unknown Euclidean quiver {name!r}')

    @property
    def name(self) -> str:
        if self.family == A_TILDE:
            return f'atilde({self.p},{self.q})'
        return f'{self.family}{self.m}'

    def to_dict(self) -> dict:
        doc = {'family': self.family, 'name': self.name}
        if self.family == A_TILDE:
            doc.update({'p': self.p, 'q': self.q})
        else:
            doc['m'] = self.m
        return doc
