"""Band words and band module specifications."""
from dataclasses import dataclass
from typing import Tuple

from models.field import FieldSpec
from models.quiver import Quiver

INVERSE_SUFFIX = '^-'


@dataclass(frozen=True)
class Letter:
    """An arrow read forwards (direct) or backwards (formal inverse)."""

    arrow: str
    inverse: bool = False

    def __str__(self) -> str:
        return self.arrow + (INVERSE_SUFFIX if self.inverse else '')

    def flipped(self) -> 'Letter':
        return Letter(self.arrow, not self.inverse)

    def start(self, quiver: Quiver) -> str:
        a = quiver.arrow(self.arrow)
        return a.target if self.inverse else a.source

    def end(self, quiver: Quiver) -> str:
        a = quiver.arrow(self.arrow)
        return a.source if self.inverse else a.target

    def key(self, quiver: Quiver) -> Tuple[int, int]:
        return (quiver.arrow_index(self.arrow), 1 if self.inverse else 0)


@dataclass(frozen=True)
class BandWord:
    """A cyclic walk; letter k runs from position k to position k+1 (mod r)."""

    letters: Tuple[Letter, ...]

    def __str__(self) -> str:
        return ' '.join(str(x) for x in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    def inverted(self) -> 'BandWord':
        return BandWord(tuple(x.flipped() for x in reversed(self.letters)))

    def rotated(self, k: int) -> 'BandWord':
        return BandWord(self.letters[k:] + self.letters[:k])

    def key(self, quiver: Quiver) -> Tuple:
        return tuple(x.key(quiver) for x in self.letters)

    def canonical(self, quiver: Quiver) -> 'BandWord':
        """Least rotation of the word or of its inverse."""
        candidates = [w.rotated(k) for w in (self, self.inverted()) for k in range(self.length)]
        return min(candidates, key=lambda w: w.key(quiver))

    def is_proper_power(self) -> bool:
        r = self.length
        return any(r % d == 0 and self.letters == self.rotated(d).letters for d in range(1, r))

    def to_dict(self) -> str:
        return str(self)


@dataclass(frozen=True)
class BandModuleSpec:
    """V(b, λ, m): band b, nonzero eigenvalue λ, Jordan size m >= 1."""

    band: BandWord
    lam: object
    m: int = 1

    def with_size(self, m: int) -> 'BandModuleSpec':
        return BandModuleSpec(self.band, self.lam, m)

    def to_dict(self, field_spec: FieldSpec) -> dict:
        return {'word': str(self.band), 'lambda': field_spec.to_str(self.lam), 'm': self.m}
