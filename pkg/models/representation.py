"""Representations of bound quivers (right Λ-modules) and their morphisms."""
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

from models.algebra import BoundAlgebra
from models.field import FieldSpec, Matrix
from utils.errors import DimensionMismatchError


@dataclass(frozen=True)
class Representation:
    """Vector spaces at vertices and matrices at arrows.

    ``action[a]`` has shape (dims[target(a)], dims[source(a)]); a path acts by
    the product of its arrow matrices with the first arrow rightmost.
    ``band`` records band provenance when the module was built from a band.
    """

    algebra: BoundAlgebra
    dims: Dict[str, int]
    action: Dict[str, Matrix]
    band: Optional[object] = dc_field(default=None, compare=False)
    _cache: dict = dc_field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        quiver = self.algebra.quiver
        dims = {v: int(self.dims.get(v, 0)) for v in quiver.vertices}
        if set(self.dims) - set(dims):
            raise DimensionMismatchError(f'unknown vertices {sorted(set(self.dims) - set(dims))}')
        object.__setattr__(self, 'dims', dims)
        action = {}
        for a in quiver.arrows:
            shape = (dims[a.target], dims[a.source])
            mat = self.action.get(a.id)
            if mat is None:
                mat = Matrix.zeros(shape[0], shape[1], self.algebra.field)
            if mat.shape != shape:
                raise DimensionMismatchError(f'arrow {a.id} needs a {shape[0]}x{shape[1]} matrix, got {mat.shape}')
            if mat.field != self.algebra.field:
                raise DimensionMismatchError(f'arrow {a.id} matrix is over {mat.field.label}')
            action[a.id] = mat
        if set(self.action) - set(action):
            raise DimensionMismatchError(f'unknown arrows {sorted(set(self.action) - set(action))}')
        object.__setattr__(self, 'action', action)

    def __hash__(self):
        return hash(self.content_key())

    def content_key(self) -> Tuple:
        quiver = self.algebra.quiver
        return (id(self.algebra), tuple(self.dims[v] for v in quiver.vertices),
                tuple(self.action[a.id] for a in quiver.arrows))

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    @property
    def dim_vector(self) -> List[int]:
        return [self.dims[v] for v in self.algebra.vertices]

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def same_data(self, other: 'Representation') -> bool:
        return (self.algebra.same_presentation(other.algebra) and self.dims == other.dims
                and self.action == other.action)

    def to_dict(self) -> dict:
        """The ModuleFile document of this module."""
        doc = {
            'dims': dict(self.dims),
            'action': {a: m.to_strings() for a, m in self.action.items()},
        }
        if self.band is not None:
            doc['band'] = self.band.to_dict(self.field)
        return doc


@dataclass(frozen=True)
class Morphism:
    """A family of vertex matrices ``blocks[v]`` of shape (target.dims[v], source.dims[v])."""

    source: Representation
    target: Representation
    blocks: Dict[str, Matrix]

    def __post_init__(self):
        blocks = {}
        for v in self.source.algebra.vertices:
            shape = (self.target.dims[v], self.source.dims[v])
            mat = self.blocks.get(v)
            if mat is None:
                mat = Matrix.zeros(shape[0], shape[1], self.source.field)
            if mat.shape != shape:
                raise DimensionMismatchError(f'block at {v} needs shape {shape}, got {mat.shape}')
            blocks[v] = mat
        object.__setattr__(self, 'blocks', blocks)

    __hash__ = None

    def to_dict(self) -> dict:
        return {v: m.to_strings() for v, m in self.blocks.items()}

    def flatten(self) -> List:
        """Row-major entries of all blocks, vertex by vertex."""
        out = []
        for v in self.source.algebra.vertices:
            for row in self.blocks[v].to_rows():
                out.extend(row)
        return out


@dataclass(frozen=True)
class IsoResult:
    """Verdict of an isomorphism test: yes (with witness), no, or probably-no."""

    verdict: str
    witness: Optional[Morphism] = None
    reason: str = ''

    def to_dict(self) -> dict:
        return {
            'verdict': self.verdict,
            'reason': self.reason,
            'witness': self.witness.to_dict() if self.witness is not None else None,
        }
