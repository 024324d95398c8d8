"""Projective covers, syzygies, stable Hom and Ext via minimal presentations."""
import logging
from typing import Dict, List, Sequence, Tuple

from engine import linalg
from engine.algebra_builder import reduce_path
from engine.finite_algebra import StructureTable, quotient_table
from engine.representations import (compose, direct_sum, end_table, hom_basis, hom_size, is_morphism,
                                     kernel_of, morphisms_to_columns, path_matrix, quotient_data,
                                     verify_short_exact, zero_module)
from models.algebra import BoundAlgebra, Element
from models.field import Matrix
from models.homological import ExtClass, ProjectiveModule, ProjectivePresentation
from models.representation import Morphism, Representation
from utils.errors import CertificateFailure, FormatError, OutOfRangeError

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# projective modules
# ---------------------------------------------------------------------------

def projective_module(alg: BoundAlgebra, tops: Sequence[str]) -> ProjectiveModule:
    """⊕ P(v) over v in ``tops``; arrows act by right concatenation then normal form."""
    tops = tuple(tops)
    for v in tops:
        alg.quiver.vertex_index(v)
    field_spec = alg.field
    offsets, dims = {}, {}
    for w in alg.vertices:
        pos, starts = 0, []
        for v in tops:
            starts.append(pos)
            pos += len(alg.paths_between(v, w))
        offsets[w] = tuple(starts)
        dims[w] = pos

    action = {}
    for a in alg.quiver.arrows:
        s, t = a.source, a.target
        rows = [[field_spec.zero] * dims[s] for _ in range(dims[t])]
        for i, v in enumerate(tops):
            targets = {k: n for n, k in enumerate(alg.paths_between(v, t))}
            for col, k in enumerate(alg.paths_between(v, s)):
                longer = alg.quiver.concat(alg.basis[k], alg.quiver.path([a.id]))
                for idx, c in reduce_path(alg, longer).items():
                    rows[offsets[t][i] + targets[idx]][offsets[s][i] + col] += c
        action[a.id] = Matrix(rows, (dims[t], dims[s]), field_spec)
    rep = Representation(alg, dims, action)
    return ProjectiveModule(alg, tops, rep, offsets)


def indecomposable_projective(alg: BoundAlgebra, v: str) -> Representation:
    return projective_module(alg, [v]).representation


def projective_morphism(proj: ProjectiveModule, target: Representation, vectors: Sequence[Sequence]) -> Morphism:
    """The morphism sending generator i to ``vectors[i]`` in target at tops[i].

    Hom(P(v), B) ≅ B_v, so this covers every morphism out of a projective.
    """
    alg = proj.algebra
    field_spec = alg.field
    blocks = {}
    for w in alg.vertices:
        columns = []
        for i, v in enumerate(proj.tops):
            x = Matrix.from_columns([vectors[i]], field_spec, target.dims[v])
            for k in alg.paths_between(v, w):
                image = path_matrix(target, alg.basis[k]) @ x
                columns.append(image.column(0))
        blocks[w] = Matrix.from_columns(columns, field_spec, target.dims[w])
    return Morphism(proj.representation, target, blocks)


def hom_from_projective(proj: ProjectiveModule, target: Representation) -> List[Morphism]:
    """Basis of Hom(P, B) ≅ ⊕ B_{tops[i]}, one morphism per coordinate."""
    field_spec = target.field
    basis = []
    for i, v in enumerate(proj.tops):
        for r in range(target.dims[v]):
            vectors = [[field_spec.zero] * target.dims[u] for u in proj.tops]
            vectors[i][r] = field_spec.one
            basis.append(projective_morphism(proj, target, vectors))
    return basis


def projective_map(source: ProjectiveModule, target: ProjectiveModule,
                   entries: Sequence[Sequence[Element]]) -> Morphism:
    """Morphism between sums of projectives given by algebra elements.

    ``entries[j][i]`` is a combination of basis paths target.tops[j] ->
    source.tops[i]; generator i is sent to Σ_j entries[j][i] placed in
    summand j.
    """
    alg = source.algebra
    field_spec = alg.field
    vectors = []
    for i, v in enumerate(source.tops):
        vec = [field_spec.zero] * target.representation.dims[v]
        for j, w in enumerate(target.tops):
            positions = {k: n for n, k in enumerate(alg.paths_between(w, v))}
            for k, c in entries[j][i].items():
                if k not in positions:
                    raise FormatError(f'path {alg.basis[k]} does not run from {w} to {v}')
                vec[target.offsets[v][j] + positions[k]] += c
        vectors.append(vec)
    return projective_morphism(source, target.representation, vectors)


# ---------------------------------------------------------------------------
# covers and syzygies
# ---------------------------------------------------------------------------

def radical_frames(v: Representation) -> Dict[str, Matrix]:
    """rad(v)_w: span of the images of the arrows ending at w."""
    frames = {}
    for w in v.algebra.vertices:
        images = [v.action[a.id] for a in v.algebra.quiver.arrows_to(w)]
        if images:
            frames[w] = linalg.column_space(images[0].hstack(*images[1:]))
        else:
            frames[w] = Matrix.zeros(v.dims[w], 0, v.field)
    return frames


def projective_cover(v: Representation) -> ProjectivePresentation:
    """Minimal projective presentation 0 -> ΩV -> P0 -> V -> 0.

    Top vectors are the standard vectors completing rad(v) at each vertex;
    P0 has one summand P(w) per top vector at w.
    """
    cached = v._cache.get('presentation')
    if cached is not None:
        return cached
    alg = v.algebra
    field_spec = v.field
    tops, lifts = [], []
    for w, frame in radical_frames(v).items():
        for idx in linalg.complement_indices(frame):
            vec = [field_spec.zero] * v.dims[w]
            vec[idx] = field_spec.one
            tops.append(w)
            lifts.append(vec)
    proj = projective_module(alg, tops)
    cover = projective_morphism(proj, v, lifts)
    syz, inclusion = kernel_of(cover)
    minimal = _inside_radical(proj, inclusion)
    if not minimal:
        logger.warning('projective cover is not minimal for dims %s', v.dim_vector)
    presentation = ProjectivePresentation(v, proj, cover, syz, inclusion, minimal)
    v._cache['presentation'] = presentation
    logger.debug('✓ Projective cover: tops %s, syzygy dims %s', tops, syz.dim_vector)
    return presentation


def _inside_radical(proj: ProjectiveModule, inclusion: Morphism) -> bool:
    """ΩV -> P0 -> top(P0) vanishes: no generator coordinate is hit."""
    for i, w in enumerate(proj.tops):
        row = inclusion.blocks[w].row(proj.generator_index(i))
        if any(not proj.algebra.field.is_zero(x) for x in row):
            return False
    return True


def is_projective(v: Representation) -> bool:
    return projective_cover(v).syzygy.is_zero()


def syzygy(v: Representation, n: int = 1) -> Representation:
    """Ω^n v through iterated minimal covers."""
    if n < 1:
        raise OutOfRangeError(f'syzygy degree must be positive, got {n}')
    current = v
    for _ in range(n):
        if current.is_zero():
            return zero_module(v.algebra)
        current = projective_cover(current).syzygy
    return current


def presentation_chain(v: Representation, n: int) -> List[ProjectivePresentation]:
    """Presentations of v, Ωv, ..., Ω^{n-1}v."""
    chain = []
    current = v
    for _ in range(n):
        pres = projective_cover(current)
        chain.append(pres)
        current = pres.syzygy
    return chain


# ---------------------------------------------------------------------------
# stable Hom
# ---------------------------------------------------------------------------

def projectively_trivial_coordinates(v: Representation, w: Representation) -> Matrix:
    """Columns spanning the maps v -> w factoring through a projective, in hom_basis coordinates.

    Such maps factor through the projective cover of w.
    """
    basis = hom_basis(v, w)
    size = hom_size(v, w)
    field_spec = v.field
    if not basis:
        return Matrix.zeros(0, 0, field_spec)
    pres = projective_cover(w)
    composites = [compose(pres.cover, g) for g in hom_basis(v, pres.projective.representation)]
    if not composites:
        return Matrix.zeros(len(basis), 0, field_spec)
    columns = morphisms_to_columns(basis, size, field_spec)
    coords = linalg.solve(columns, morphisms_to_columns(composites, size, field_spec))
    return linalg.column_space(coords)


def stable_hom_dim(v: Representation, w: Representation) -> dict:
    hom_dim = len(hom_basis(v, w))
    trivial = projectively_trivial_coordinates(v, w).cols
    return {'hom_dim': hom_dim, 'projectively_trivial_dim': trivial, 'stable_dim': hom_dim - trivial}


def stable_end_table(v: Representation) -> StructureTable:
    """End(v) modulo the ideal of maps factoring through projectives."""
    table, _ = end_table(v)
    return quotient_table(table, projectively_trivial_coordinates(v, v))


# ---------------------------------------------------------------------------
# Ext
# ---------------------------------------------------------------------------

def _restrictions(pres: ProjectivePresentation, b: Representation) -> List[Morphism]:
    return [compose(g, pres.inclusion) for g in hom_from_projective(pres.projective, b)]


def ext_group(a: Representation, b: Representation, n: int = 1) -> dict:
    """Ext^n(a, b) = Hom(Ω^n a, b) / restrictions of Hom(P_{n-1}, b).

    Returns the dimension, and for n = 1 a list of ExtClass values whose
    classes form a basis.
    """
    if n < 1:
        raise OutOfRangeError(f'Ext degree must be positive, got {n}')
    pres = presentation_chain(a, n)[-1]
    omega = pres.syzygy
    hom = hom_basis(omega, b)
    result = {'n': n, 'hom_dim': len(hom), 'dim': 0, 'classes': []}
    if not hom:
        result['restriction_dim'] = 0
        return result
    field_spec = a.field
    size = hom_size(omega, b)
    columns = morphisms_to_columns(hom, size, field_spec)
    restricted = _restrictions(pres, b)
    if restricted:
        coords = linalg.column_space(linalg.solve(columns, morphisms_to_columns(restricted, size, field_spec)))
    else:
        coords = Matrix.zeros(len(hom), 0, field_spec)
    result['restriction_dim'] = coords.cols
    result['dim'] = len(hom) - coords.cols
    if n == 1:
        result['classes'] = [ExtClass(a, b, hom[k], pres) for k in linalg.complement_indices(coords)]
    return result


def ext_dim(a: Representation, b: Representation, n: int = 1) -> int:
    return ext_group(a, b, n)['dim']


def is_zero_class(eta: ExtClass) -> bool:
    """η = 0 iff its cocycle extends over P0."""
    restricted = _restrictions(eta.presentation, eta.target)
    size = hom_size(eta.cocycle.source, eta.target)
    field_spec = eta.target.field
    target = morphisms_to_columns([eta.cocycle], size, field_spec)
    if not restricted:
        return target.is_zero()
    return linalg.in_span(morphisms_to_columns(restricted, size, field_spec), target)


def realize_extension(eta: ExtClass) -> Tuple[Representation, Morphism, Morphism]:
    """Pushout of 0 -> ΩA -> P0 -> A -> 0 along the cocycle.

    E is the cokernel of (inclusion, -cocycle): ΩA -> P0 ⊕ B; returns
    (E, B -> E, E -> A).
    """
    pres = eta.presentation
    a, b = eta.source, eta.target
    if eta.cocycle.source.dims != pres.syzygy.dims:
        raise FormatError('cocycle does not start at the syzygy of the presentation')
    if not is_morphism(eta.cocycle):
        raise FormatError('cocycle is not a module morphism')
    field_spec = a.field
    p0 = pres.projective.representation
    total = direct_sum(p0, b)
    glue = Morphism(pres.syzygy, total, {
        u: pres.inclusion.blocks[u].vstack(-eta.cocycle.blocks[u]) for u in a.algebra.vertices})
    extension, projection, sections = quotient_data(glue)

    incl_blocks, proj_blocks = {}, {}
    for u in a.algebra.vertices:
        embed_b = Matrix.zeros(p0.dims[u], b.dims[u], field_spec).vstack(Matrix.identity(b.dims[u], field_spec))
        incl_blocks[u] = projection.blocks[u] @ embed_b
        onto_a = pres.cover.blocks[u].hstack(Matrix.zeros(a.dims[u], b.dims[u], field_spec))
        proj_blocks[u] = onto_a @ sections[u]
    incl = Morphism(b, extension, incl_blocks)
    proj = Morphism(extension, a, proj_blocks)
    checks = verify_short_exact(incl, proj)
    if not checks['exact']:
        raise CertificateFailure(f'realized extension is not exact: {checks}')
    return extension, incl, proj

