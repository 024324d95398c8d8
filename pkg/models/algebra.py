"""Bound quiver algebras Λ = kQ/I with a computed normal-form basis."""
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

from models.field import FieldSpec
from models.quiver import PathWord, Quiver, Relation

# An algebra element: basis index -> nonzero coefficient.
Element = Dict[int, object]


@dataclass(frozen=True, eq=False)
class BoundAlgebra:
    """A finite-dimensional bound quiver algebra.

    ``reductions`` maps every non-basis path of length < N to its normal
    form; paths of length >= N are zero. Instances are shared read-only,
    the private caches are filled at most once per key.
    """

    quiver: Quiver
    relations: Tuple[Relation, ...]
    field: FieldSpec
    basis: Tuple[PathWord, ...]
    nilpotency_degree: int
    reductions: Dict[PathWord, Element]
    max_degree: int = 50
    basis_index: Dict[PathWord, int] = dc_field(init=False, repr=False)
    _cache: dict = dc_field(init=False, repr=False, default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'basis_index', {p: i for i, p in enumerate(self.basis)})

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def is_hereditary(self) -> bool:
        """True for path algebras: no relations at all."""
        return not self.relations

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.quiver.vertices

    def paths_between(self, v: str, w: str) -> List[int]:
        """Basis indices of the basis paths from v to w, in basis order."""
        key = ('between', v, w)
        if key not in self._cache:
            self._cache[key] = [i for i, p in enumerate(self.basis) if p.source == v and p.target == w]
        return self._cache[key]

    def opposite_cache(self) -> Optional['BoundAlgebra']:
        return self._cache.get('opposite')

    def set_opposite(self, other: 'BoundAlgebra'):
        self._cache['opposite'] = other

    def same_presentation(self, other: 'BoundAlgebra') -> bool:
        if self is other:
            return True
        return (self.field == other.field and self.quiver == other.quiver
                and self.basis == other.basis and self.reductions == other.reductions)

    def to_dict(self) -> dict:
        """The AlgebraFile document of this algebra."""
        doc = {'field': self.field.to_dict()}
        doc.update(self.quiver.to_dict())
        doc['relations'] = [r.to_dict(self.field) for r in self.relations]
        return doc

    def summary(self) -> dict:
        return {
            'dimension': self.dimension,
            'nilpotency_degree': self.nilpotency_degree,
            'basis': [str(p) for p in self.basis],
        }
