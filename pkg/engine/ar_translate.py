"""The Auslander-Reiten translate τ = D Tr and the checks built on it."""
import logging
from dataclasses import dataclass
from typing import List

from engine import linalg
from engine.algebra_builder import cartan_matrix, opposite_algebra, reduce_path
from engine.homological import is_projective, projective_cover, projective_map, projective_module
from engine.representations import cokernel_of, compose, is_isomorphic, zero_module
from models.field import FieldSpec, Matrix
from models.representation import Representation
from utils.errors import UnsupportedError

logger = logging.getLogger(__name__)

LEFT = 'left'


@dataclass(frozen=True)
class LeftModuleView:
    """A left Λ-module stored as a right module over the opposite algebra."""

    representation: Representation
    origin: str = LEFT

    def to_dict(self) -> dict:
        doc = self.representation.to_dict()
        doc['side'] = self.origin
        return doc


def dual_representation(v: Representation) -> Representation:
    """D v = Hom_k(v, k): same dimensions, transposed matrices on reversed arrows."""
    op = opposite_algebra(v.algebra)
    action = {a: m.transpose() for a, m in v.action.items()}
    return Representation(op, dict(v.dims), action)


def dualize(v: Representation) -> LeftModuleView:
    return LeftModuleView(dual_representation(v))


def from_left_view(view: LeftModuleView) -> Representation:
    """Inverse of ``dualize``: a right module over the original algebra."""
    return dual_representation(view.representation)


def transpose(v: Representation) -> LeftModuleView:
    """Tr v from the minimal presentation P1 -> P0 -> v -> 0.

    The presentation map is read off as a matrix of paths x_ij from the
    tops of P0 to the tops of P1; applying Hom(-, Λ) turns it into left
    multiplication by the reversed paths between projectives over Λ^op, and
    Tr v is the cokernel.
    """
    alg = v.algebra
    first = projective_cover(v)
    second = projective_cover(first.syzygy)
    p0, p1 = first.projective, second.projective
    if not p0.tops or not p1.tops:
        return LeftModuleView(zero_module(opposite_algebra(alg)))
    d = compose(first.inclusion, second.cover)

    op = opposite_algebra(alg)
    q0 = projective_module(op, p0.tops)
    q1 = projective_module(op, p1.tops)
    entries = [[{} for _ in p0.tops] for _ in p1.tops]
    for j, w in enumerate(p1.tops):
        image = d.blocks[w].column(p1.generator_index(j))
        for i, u in enumerate(p0.tops):
            element = {}
            for n, k in enumerate(alg.paths_between(u, w)):
                c = image[p0.offsets[w][i] + n]
                if alg.field.is_zero(c):
                    continue
                reversed_path = alg.quiver.reverse_path(alg.basis[k])
                for idx, e in reduce_path(op, reversed_path).items():
                    element[idx] = element.get(idx, alg.field.zero) + c * e
            entries[j][i] = element
    dual_map = projective_map(q0, q1, entries)
    tr, _ = cokernel_of(dual_map)
    return LeftModuleView(tr)


def tau(v: Representation) -> Representation:
    """τ v = D Tr v, a right module over the algebra of v."""
    result = from_left_view(transpose(v))
    logger.debug('τ: dims %s -> %s', v.dim_vector, result.dim_vector)
    return result


def homogeneous_tube_membership(v: Representation, seed: int = 0) -> dict:
    """yes iff τ v ≅ v, with the isomorphism as evidence."""
    translated = tau(v)
    evidence = {'dims': v.dim_vector, 'tau_dims': translated.dim_vector}
    if translated.is_zero():
        return {'verdict': 'no', 'reason': 'τ v = 0 (v is projective)', 'evidence': evidence}
    iso = is_isomorphic(translated, v, seed=seed)
    evidence['isomorphism'] = iso.to_dict()
    return {'verdict': iso.verdict, 'reason': iso.reason, 'evidence': evidence}


def coxeter_matrix(alg) -> Matrix:
    """Φ = -C·C^{-T} for the Cartan matrix C[v][w] = #paths v -> w."""
    rationals = FieldSpec.rationals()
    cartan = Matrix.from_rows(cartan_matrix(alg), rationals, cols=len(alg.vertices))
    inverse_t = linalg.inverse(cartan.transpose())
    if inverse_t is None:
        raise UnsupportedError('the Cartan matrix is singular')
    return -(cartan @ inverse_t)


def coxeter_check(alg, v: Representation) -> dict:
    """Compare Φ·dimvec(v) with dimvec(τ v) on a path algebra."""
    if not alg.is_hereditary:
        raise UnsupportedError('the Coxeter check needs a path algebra without relations')
    if is_projective(v):
        raise UnsupportedError('the Coxeter check needs a non-projective module')
    phi = coxeter_matrix(alg)
    rationals = phi.field
    predicted_column = phi @ Matrix.from_columns([v.dim_vector], rationals, len(v.dim_vector))
    predicted: List[int] = [rationals.to_int(x) for x in predicted_column.column(0)]
    actual = tau(v).dim_vector
    return {'predicted': predicted, 'actual': actual, 'agrees': predicted == actual,
            'coxeter': phi.to_ints()}
