"""Quivers, paths and relations."""
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from models.field import FieldSpec
from utils.errors import FormatError


@dataclass(frozen=True)
class Arrow:
    """An arrow ``id: source -> target``."""

    id: str
    source: str
    target: str

    def to_dict(self) -> dict:
        return {'id': self.id, 'from': self.source, 'to': self.target}


@dataclass(frozen=True)
class PathWord:
    """A path of the quiver.

    ``arrows`` is traversed left to right: the first arrow is walked first,
    so ``source`` is the source of ``arrows[0]``. A trivial path e_v has no
    arrows and ``source == target == v``.
    """

    source: str
    target: str
    arrows: Tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __str__(self) -> str:
        return f'e_{self.source}' if self.is_trivial else ' '.join(self.arrows)

    def to_dict(self) -> dict:
        if self.is_trivial:
            return {'vertex': self.source, 'path': []}
        return {'path': list(self.arrows)}


@dataclass(frozen=True)
class Quiver:
    """Finite quiver with string vertex and arrow identifiers."""

    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]
    _vertex_index: Dict[str, int] = field(init=False, repr=False, compare=False)
    _arrow_index: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'vertices', tuple(str(v) for v in self.vertices))
        object.__setattr__(self, 'arrows', tuple(self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise FormatError('vertex identifiers must be unique')
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise FormatError('arrow identifiers must be unique')
        vertex_index = {v: i for i, v in enumerate(self.vertices)}
        for a in self.arrows:
            if a.source not in vertex_index or a.target not in vertex_index:
                raise FormatError(f'arrow {a.id} has an unknown endpoint')
        object.__setattr__(self, '_vertex_index', vertex_index)
        object.__setattr__(self, '_arrow_index', {a.id: i for i, a in enumerate(self.arrows)})

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def vertex_index(self, v: str) -> int:
        try:
            return self._vertex_index[v]
        except KeyError:
            raise FormatError(f'unknown vertex {v!r}')

    def arrow_index(self, a: str) -> int:
        try:
            return self._arrow_index[a]
        except KeyError:
            raise FormatError(f'unknown arrow {a!r}')

    def has_arrow(self, a: str) -> bool:
        return a in self._arrow_index

    def arrow(self, a: str) -> Arrow:
        return self.arrows[self.arrow_index(a)]

    def arrows_from(self, v: str) -> List[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_to(self, v: str) -> List[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def trivial_path(self, v: str) -> PathWord:
        self.vertex_index(v)
        return PathWord(v, v, ())

    def path(self, arrow_ids: Sequence[str]) -> PathWord:
        """Validate composability and build a nontrivial path."""
        arrow_ids = tuple(arrow_ids)
        if not arrow_ids:
            raise FormatError('use trivial_path for paths of length 0')
        arrows = [self.arrow(a) for a in arrow_ids]
        for first, second in zip(arrows, arrows[1:]):
            if first.target != second.source:
                raise FormatError(f'arrows {first.id} and {second.id} are not composable')
        return PathWord(arrows[0].source, arrows[-1].target, arrow_ids)

    def concat(self, p: PathWord, q: PathWord):
        """The path p followed by q, or None if they do not meet."""
        if p.target != q.source:
            return None
        return PathWord(p.source, q.target, p.arrows + q.arrows)

    def paths_of_length(self, n: int) -> List[PathWord]:
        """All paths of length n, trivial paths when n == 0."""
        if n == 0:
            return [PathWord(v, v, ()) for v in self.vertices]
        current = [PathWord(a.source, a.target, (a.id,)) for a in self.arrows]
        for _ in range(n - 1):
            current = [PathWord(p.source, a.target, p.arrows + (a.id,))
                       for p in current for a in self.arrows_from(p.target)]
        return current

    def path_key(self, p: PathWord) -> Tuple:
        """Sort key: length, then arrow indices (vertex index for trivial paths)."""
        if p.is_trivial:
            return (0, (self.vertex_index(p.source),))
        return (p.length, tuple(self.arrow_index(a) for a in p.arrows))

    def opposite(self) -> 'Quiver':
        return Quiver(self.vertices, tuple(Arrow(a.id, a.target, a.source) for a in self.arrows))

    def reverse_path(self, p: PathWord) -> PathWord:
        """The same path read in the opposite quiver."""
        return PathWord(p.target, p.source, tuple(reversed(p.arrows)))

    def to_dict(self) -> dict:
        return {'vertices': list(self.vertices), 'arrows': [a.to_dict() for a in self.arrows]}


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths of length >= 2.

    Coefficients are elements of the algebra's field domain.
    """

    terms: Tuple[Tuple[object, PathWord], ...]

    def __post_init__(self):
        object.__setattr__(self, 'terms', tuple(self.terms))
        if not self.terms:
            raise FormatError('a relation needs at least one term')
        first = self.terms[0][1]
        for _, p in self.terms:
            if p.length < 2:
                raise FormatError(f'relation term {p} has length < 2')
            if (p.source, p.target) != (first.source, first.target):
                raise FormatError('relation terms must be parallel paths')

    @property
    def source(self) -> str:
        return self.terms[0][1].source

    @property
    def target(self) -> str:
        return self.terms[0][1].target

    @property
    def min_length(self) -> int:
        return min(p.length for _, p in self.terms)

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def reversed(self, opposite: Quiver) -> 'Relation':
        return Relation(tuple((c, opposite.reverse_path(p)) for c, p in self.terms))

    def to_dict(self, field_spec: FieldSpec) -> List[dict]:
        return [{'coeff': field_spec.to_str(c), 'path': list(p.arrows)} for c, p in self.terms]
