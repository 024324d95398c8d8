"""Projective modules, minimal presentations and Ext¹ classes."""
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Tuple

from models.algebra import BoundAlgebra
from models.quiver import PathWord
from models.representation import Morphism, Representation


@dataclass(frozen=True, eq=False)
class ProjectiveModule:
    """⊕_i P(tops[i]) with its path basis.

    At vertex w the coordinates are grouped by summand; summand i contributes
    the basis paths tops[i] -> w in basis order, starting at ``offsets[w][i]``.
    """

    algebra: BoundAlgebra
    tops: Tuple[str, ...]
    representation: Representation
    offsets: Dict[str, Tuple[int, ...]] = dc_field(repr=False)

    def labels(self, w: str) -> List[Tuple[int, PathWord]]:
        """(summand, basis path) for each coordinate at vertex w."""
        out = []
        for i, v in enumerate(self.tops):
            out.extend((i, self.algebra.basis[k]) for k in self.algebra.paths_between(v, w))
        return out

    def generator_index(self, i: int) -> int:
        """Coordinate of the trivial path of summand i at its top vertex."""
        return self.offsets[self.tops[i]][i]

    def to_dict(self) -> dict:
        return {
            'tops': list(self.tops),
            'dims': dict(self.representation.dims),
            'labels': {w: [[i, str(p)] for i, p in self.labels(w)] for w in self.algebra.vertices},
        }


@dataclass(frozen=True, eq=False)
class ProjectivePresentation:
    """0 -> ΩV -> P0 -> V -> 0 with P0 -> V a projective cover."""

    module: Representation
    projective: ProjectiveModule
    cover: Morphism
    syzygy: Representation
    inclusion: Morphism
    minimal: bool = True

    def to_dict(self) -> dict:
        return {
            'p0': self.projective.to_dict(),
            'cover': self.cover.to_dict(),
            'syzygy': self.syzygy.to_dict(),
            'inclusion': self.inclusion.to_dict(),
            'minimal': self.minimal,
        }


@dataclass(frozen=True, eq=False)
class ExtClass:
    """An element of Ext¹(A, B) represented by a cocycle ΩA -> B."""

    source: Representation
    target: Representation
    cocycle: Morphism
    presentation: ProjectivePresentation

    def to_dict(self) -> dict:
        return {'cocycle': self.cocycle.to_dict()}
