"""Reading and writing the JSON documents."""
import json
import os

from engine.algebra_builder import build_algebra
from engine.bands import band_module, parse_band
from models.algebra import BoundAlgebra
from models.band import BandModuleSpec
from models.field import Matrix
from models.quiver import Arrow, Quiver, Relation
from models.representation import Morphism, Representation
from utils.errors import FormatError, NotFoundError
from utils.validators import validate_algebra_document, validate_module_document, validate_scalar


def dump_json(payload) -> str:
    """Canonical JSON text: two-space indent, trailing newline."""
    return json.dumps(payload, indent=2, ensure_ascii=False) + '\n'


def write_json(path, payload):
    with open(path, 'w', encoding='utf-8') as fh:
        fh.write(dump_json(payload))


def load_json(path):
    """Load a JSON file, mapping I/O and syntax problems to our errors."""
    if not os.path.exists(path):
        raise NotFoundError(f'no such file: {path}')
    try:
        with open(path, encoding='utf-8') as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f'{path}: {exc}')


def scalar(text, field_spec):
    is_valid, value = validate_scalar(text, field_spec)
    if not is_valid:
        raise FormatError(value)
    return value


def matrix_from_doc(rows, field_spec, shape) -> Matrix:
    """Rows of scalar strings as a matrix of the expected shape."""
    if len(rows) != shape[0] or any(len(r) != shape[1] for r in rows):
        raise FormatError(f'expected a {shape[0]}x{shape[1]} matrix')
    return Matrix([[scalar(x, field_spec) for x in r] for r in rows], shape, field_spec)


def algebra_from_doc(doc, max_degree=None) -> BoundAlgebra:
    is_valid, field_spec = validate_algebra_document(doc)
    if not is_valid:
        raise FormatError(field_spec)
    quiver = Quiver(tuple(doc['vertices']),
                    tuple(Arrow(a['id'], a['from'], a['to']) for a in doc['arrows']))
    relations = []
    for terms in doc.get('relations', []):
        parsed = []
        for term in terms:
            path = quiver.path(term['path']) if term['path'] else None
            if path is None:
                raise FormatError('relation terms must be nontrivial paths')
            parsed.append((scalar(term['coeff'], field_spec), path))
        relations.append(Relation(tuple(parsed)))
    return build_algebra(quiver, relations, field_spec, max_degree=max_degree)


def load_algebra(path, max_degree=None) -> BoundAlgebra:
    return algebra_from_doc(load_json(path), max_degree=max_degree)


def module_from_doc(doc, alg: BoundAlgebra) -> Representation:
    """A ModuleFile; a ``band`` key must agree with the band construction."""
    is_valid, message = validate_module_document(doc)
    if not is_valid:
        raise FormatError(message)
    field_spec = alg.field
    unknown = set(doc['dims']) - set(alg.vertices)
    if unknown:
        raise FormatError(f'unknown vertices {sorted(unknown)}')
    dims = {v: doc['dims'].get(v, 0) for v in alg.vertices}
    action = {}
    for a, rows in doc.get('action', {}).items():
        if not alg.quiver.has_arrow(a):
            raise FormatError(f'unknown arrow {a!r}')
        arrow = alg.quiver.arrow(a)
        action[a] = matrix_from_doc(rows, field_spec, (dims[arrow.target], dims[arrow.source]))
    band = None
    if doc.get('band') is not None:
        spec = doc['band']
        band = BandModuleSpec(parse_band(spec['word'], alg), scalar(spec['lambda'], field_spec), spec['m'])
    rep = Representation(alg, dims, action, band=band)
    if band is not None and not rep.same_data(band_module(alg, band, verify=False)):
        raise FormatError(f'module data does not match V({spec["word"]}, {spec["lambda"]}, {spec["m"]})')
    return rep


def load_module(path, alg: BoundAlgebra) -> Representation:
    return module_from_doc(load_json(path), alg)


def morphism_from_doc(doc, source: Representation, target: Representation) -> Morphism:
    if not isinstance(doc, dict):
        raise FormatError('morphism must be an object of vertex blocks')
    blocks = {}
    for v in source.algebra.vertices:
        if v not in doc:
            raise FormatError(f'morphism has no block at vertex {v}')
        blocks[v] = matrix_from_doc(doc[v], source.field, (target.dims[v], source.dims[v]))
    return Morphism(source, target, blocks)
