"""Document validators.

Each validator returns ``(is_valid, value_or_error_message)``; the loaders
in ``utils.helpers`` turn failures into FormatError.
"""
import re

from models.field import FieldSpec
from utils.errors import TubedefError

ALGEBRA_KEYS = {'field', 'vertices', 'arrows', 'relations'}
MODULE_KEYS = {'dims', 'action', 'band'}
BAND_KEYS = {'word', 'lambda', 'm'}
SCALAR_PATTERN = re.compile(r'^-?\d+(/-?\d+)?$')


def validate_field(doc):
    """Validate a field document {"kind": "Q"} or {"kind": "Fp", "p": int}."""
    if not isinstance(doc, dict):
        return False, "Field must be an object"
    kind = doc.get('kind')
    if kind == 'Q':
        if set(doc) != {'kind'}:
            return False, "Field Q takes no other keys"
        return True, FieldSpec.rationals()
    if kind == 'Fp':
        if set(doc) != {'kind', 'p'}:
            return False, "Field Fp needs exactly the keys kind and p"
        p = doc['p']
        if not isinstance(p, int) or isinstance(p, bool):
            return False, "Field characteristic must be an integer"
        try:
            return True, FieldSpec.prime(p)
        except TubedefError as exc:
            return False, str(exc.detail)
    return False, f"Unknown field kind {kind!r}"


def validate_scalar(text, field_spec):
    """Validate a scalar string "p/q" or "r"."""
    if not isinstance(text, str) or not SCALAR_PATTERN.match(text.strip()):
        return False, f"Scalar must be a string like \"3\" or \"-3/4\", got {text!r}"
    try:
        return True, field_spec.parse(text)
    except TubedefError as exc:
        return False, str(exc.detail)


def validate_algebra_document(doc):
    """
    Validate the shape of an AlgebraFile.
    Returns (is_valid, field_spec_or_error_message).
    """
    if not isinstance(doc, dict):
        return False, "Algebra file must contain a JSON object"
    unknown = set(doc) - ALGEBRA_KEYS
    if unknown:
        return False, f"Unknown keys {sorted(unknown)}"
    missing = {'field', 'vertices', 'arrows'} - set(doc)
    if missing:
        return False, f"Missing keys {sorted(missing)}"
    if not isinstance(doc['vertices'], list) or not all(isinstance(v, str) for v in doc['vertices']):
        return False, "vertices must be a list of strings"
    if not isinstance(doc['arrows'], list):
        return False, "arrows must be a list"
    for arrow in doc['arrows']:
        if not isinstance(arrow, dict) or set(arrow) != {'id', 'from', 'to'}:
            return False, "each arrow needs exactly the keys id, from and to"
        if not all(isinstance(arrow[k], str) for k in ('id', 'from', 'to')):
            return False, "arrow id, from and to must be strings"
    relations = doc.get('relations', [])
    if not isinstance(relations, list):
        return False, "relations must be a list"
    for relation in relations:
        if not isinstance(relation, list) or not relation:
            return False, "each relation must be a non-empty list of terms"
        for term in relation:
            if not isinstance(term, dict) or set(term) != {'coeff', 'path'}:
                return False, "each relation term needs exactly the keys coeff and path"
            if not isinstance(term['path'], list):
                return False, "a relation path must be a list of arrow ids"
    return validate_field(doc['field'])


def validate_module_document(doc):
    """Validate the shape of a ModuleFile."""
    if not isinstance(doc, dict):
        return False, "Module file must contain a JSON object"
    unknown = set(doc) - MODULE_KEYS
    if unknown:
        return False, f"Unknown keys {sorted(unknown)}"
    if not isinstance(doc.get('dims'), dict) or not isinstance(doc.get('action', {}), dict):
        return False, "Module needs a dims object and an action object"
    for v, d in doc['dims'].items():
        if not isinstance(d, int) or isinstance(d, bool) or d < 0:
            return False, f"dimension at {v} must be a nonnegative integer"
    for a, rows in doc.get('action', {}).items():
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            return False, f"action of {a} must be a list of rows"
    band = doc.get('band')
    if band is not None:
        if not isinstance(band, dict) or set(band) != BAND_KEYS:
            return False, "band needs exactly the keys word, lambda and m"
        if not isinstance(band['m'], int) or band['m'] < 1:
            return False, "band m must be a positive integer"
    return True, doc


def validate_levels(levels):
    """Validate the truncation level L."""
    try:
        levels = int(levels)
    except (ValueError, TypeError):
        return False, "Invalid levels value"
    if levels < 2:
        return False, "levels must be at least 2"
    return True, levels
