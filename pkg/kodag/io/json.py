import json
from collections import namedtuple

from ..core.chains import ChainSet
from ..core.errors import DocumentError, DomainError
from ..core.matrix import CodingMatrix, IncidenceMatrix
from ..core.poset import GradedPoset

POSET_VERSION = 1
EXPECTATION_KINDS = ('zeta', 'mobius', 'max')

Fixture = namedtuple('Fixture', ['poset', 'expected'])


def dumps_canonical(data):
    """Byte-stable JSON text: sorted keys and no optional whitespace."""
    return json.dumps(data, sort_keys=True, separators=(',', ':'))


def _require(doc, key, expected_type, where):
    if not isinstance(doc, dict) or key not in doc:
        raise DocumentError('{} document is missing {!r}'.format(where, key))
    value = doc[key]
    if not isinstance(value, expected_type) or isinstance(value, bool):
        raise DocumentError('{} field {!r} must be {}, got {}'.format(where, key, expected_type.__name__,
                                                                      type(value).__name__))

    return value


def poset_from_dict(doc):
    """GradedPoset from ``{"version": 1, "sizes": [...], "blocks": [...]}``.

    Raises
    ------
    DocumentError
        On missing fields, an unknown version or blocks that do not fit the sizes.

    """
    version = _require(doc, 'version', int, 'Poset')
    if version != POSET_VERSION:
        raise DocumentError('Unsupported poset document version {}'.format(version))
    sizes = _require(doc, 'sizes', list, 'Poset')
    blocks = _require(doc, 'blocks', list, 'Poset')

    try:
        return GradedPoset(sizes, blocks)
    except (DomainError, TypeError, ValueError) as error:
        raise DocumentError('Invalid poset document: {}'.format(error))


def matrix_from_dict(doc):
    """IncidenceMatrix from ``{"sizes": [...], "entries": [[...], ...]}``."""
    sizes = _require(doc, 'sizes', list, 'Matrix')
    entries = _require(doc, 'entries', list, 'Matrix')
    if not all(isinstance(row, list) and all(isinstance(value, int) and not isinstance(value, bool) for value in row)
               for row in entries):
        raise DocumentError('Matrix entries must be lists of integers')

    try:
        return IncidenceMatrix(sizes, entries)
    except (DomainError, TypeError, ValueError) as error:
        raise DocumentError('Invalid matrix document: {}'.format(error))


def chain_count_dict(k, n, count):
    return {'k': k, 'n': n, 'count': str(count)}


def to_dict(obj):
    """Plain JSON-ready form of a poset, matrix, coding matrix or chain set."""
    if isinstance(obj, (GradedPoset, IncidenceMatrix, CodingMatrix, ChainSet)):
        return obj.to_dict()

    raise TypeError('Cannot serialize {}'.format(type(obj).__name__))


def _read(filepath):
    try:
        with open(filepath) as handle:
            return json.load(handle)
    except OSError as error:
        raise DocumentError('Cannot read {}: {}'.format(filepath, error.strerror))
    except ValueError as error:
        raise DocumentError('{} is not valid JSON: {}'.format(filepath, error))


def _write(data, filepath):
    with open(filepath, 'w') as handle:
        handle.write(dumps_canonical(data))
        handle.write('\n')


def read_poset(filepath):
    return poset_from_dict(_read(filepath))


def write_poset(p, filepath):
    _write(p.to_dict(), filepath)


def read_matrix(filepath):
    return matrix_from_dict(_read(filepath))


def write_matrix(m, filepath):
    _write(m.to_dict(), filepath)


def read_fixture(filepath):
    """Poset document plus its optional ``"expected"`` matrices.

    Returns
    -------
    Fixture
        `expected` maps 'zeta', 'mobius' or 'max' to an IncidenceMatrix over the poset's sizes.

    """
    doc = _read(filepath)
    poset = poset_from_dict(doc)

    expectations = doc.get('expected', {})
    if not isinstance(expectations, dict):
        raise DocumentError('Fixture field "expected" must be an object')

    expected = {}
    for kind, entries in sorted(expectations.items()):
        if kind not in EXPECTATION_KINDS:
            raise DocumentError('Unknown expectation {!r}; expected one of {}'.format(kind, EXPECTATION_KINDS))
        expected[kind] = matrix_from_dict({'sizes': list(poset.sizes), 'entries': entries})

    return Fixture(poset, expected)
