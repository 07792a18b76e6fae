import logging
from collections import namedtuple
from itertools import accumulate

import numpy as np
from tabulate import tabulate

from .errors import DomainError
from .generic import KodagCommon, MatrixOps
from .utils import check_int, check_type, to_object_array, shorten_rows

log = logging.getLogger(__name__)

_FLOAT64_EXACT = 2 ** 53
_INT64_MAX = 2 ** 63 - 1

KrotonValue = namedtuple('KrotonValue', ['r', 's', 'value'])


def _max_abs(arr):
    if arr.size == 0:
        return 0

    return int(np.abs(arr).max())


def exact_dot(a, b):
    """Exact integer matrix product.

    Picks float64 BLAS when every partial sum stays below 2**53, int64 below 2**63 and falls back
    to Python-int object arithmetic otherwise, so the result is always exact.

    Parameters
    ----------
    a : numpy.ndarray
    b : numpy.ndarray

    Returns
    -------
    numpy.ndarray
        Object array of Python ints.

    """
    rows, inner = a.shape
    columns = b.shape[1]
    if a.size == 0 or b.size == 0:
        return np.zeros((rows, columns), dtype=object)

    bound = inner * _max_abs(a) * _max_abs(b)
    if bound < _FLOAT64_EXACT:
        result = np.rint(a.astype(np.float64).dot(b.astype(np.float64))).astype(np.int64)
    elif bound <= _INT64_MAX:
        log.debug('int64 product of %dx%d by %dx%d, bound %d', rows, inner, inner, columns, bound)
        result = a.astype(np.int64).dot(b.astype(np.int64))
    else:
        log.debug('object product of %dx%d by %dx%d, bound %d', rows, inner, inner, columns, bound)
        return a.astype(object).dot(b.astype(object))

    return result.astype(object)


def boolean_dot(a, b):
    """Boolean matrix product; entry is True iff some k has a[i, k] and b[k, j]."""
    return np.asarray(a, dtype=np.float64).dot(np.asarray(b, dtype=np.float64)) > 0


def object_identity(n):
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1

    return out


def _is_identity(arr):
    return np.array_equal(arr, np.eye(arr.shape[0], dtype=np.int64))


def _unitriangular_inverse(arr):
    size = arr.shape[0]
    inverse = object_identity(size)
    for i in reversed(range(size)):
        for j in range(i + 1, size):
            if arr[i, j] != 0:
                inverse[i, :] -= arr[i, j] * inverse[j, :]

    return inverse


def _check_sizes(sizes):
    check_type(sizes, (list, tuple))
    if len(sizes) == 0:
        raise DomainError('A poset needs at least one level')

    return tuple(check_int(size, 'level size', minimum=1) for size in sizes)


def level_offsets(sizes):
    """0-based start of every level plus the total node count."""
    return (0,) + tuple(accumulate(sizes))


class IncidenceMatrix(MatrixOps, KodagCommon):
    """Exact integer N x N matrix over a level-block index map.

    Houses zeta, the Moebius matrix, the cover matrix, eta, [Max] and any other incidence-algebra
    element of a graded poset with the given level sizes.

    Attributes
    ----------
    sizes
    values
    levels

    Examples
    --------
    >>> from kodag import IncidenceMatrix
    >>> m = IncidenceMatrix((1, 2), [[1, 1, 1], [0, 1, 0], [0, 0, 1]])
    >>> m  # repr
    IncidenceMatrix(sizes=(1, 2), shape=(3, 3))
    >>> print(m)  # str
    1  1  1
    0  1  0
    0  0  1
    >>> m.block(1, 2).tolist()
    [[1, 1]]
    >>> m.inverse().values.tolist()
    [[1, -1, -1], [0, 1, 0], [0, 0, 1]]

    """
    def __init__(self, sizes, entries):
        """Initialize an IncidenceMatrix.

        Parameters
        ----------
        sizes : list or tuple of int
            Level sizes defining the block index map.
        entries : numpy.ndarray or list of list of int
            N x N entries, N = sum(sizes).

        """
        self._sizes = _check_sizes(sizes)
        self._offsets = level_offsets(self._sizes)

        if isinstance(entries, np.ndarray) and entries.dtype == object and entries.ndim == 2:
            entries = entries.copy()
        else:
            entries = to_object_array(entries)

        total = self._offsets[-1]
        if entries.shape != (total, total):
            raise DomainError('Level sizes {} need a {}x{} matrix, got shape {}'.format(self._sizes, total, total,
                                                                                      entries.shape))
        entries.setflags(write=False)
        self._entries = entries

    @classmethod
    def identity(cls, sizes):
        sizes = _check_sizes(sizes)

        return cls(sizes, object_identity(sum(sizes)))

    @classmethod
    def zeros(cls, sizes):
        sizes = _check_sizes(sizes)
        total = sum(sizes)

        return cls(sizes, np.zeros((total, total), dtype=object))

    @property
    def sizes(self):
        return self._sizes

    @property
    def offsets(self):
        return self._offsets

    @property
    def levels(self):
        return len(self._sizes)

    @property
    def values(self):
        return self._entries

    @property
    def is_binary(self):
        return all(value in (0, 1) for value in self._entries.flat)

    def __len__(self):
        return self._offsets[-1]

    def __repr__(self):
        return '{}(sizes={}, shape={})'.format(self.__class__.__name__,
                                               self._sizes,
                                               self._entries.shape)

    def __str__(self):
        return tabulate(shorten_rows(self._entries.tolist()), tablefmt='plain')

    def _level_slice(self, level):
        level = check_int(level, 'level')
        if not 1 <= level <= self.levels:
            raise DomainError('Level must be in [1, {}], got {}'.format(self.levels, level))

        return slice(self._offsets[level - 1], self._offsets[level])

    def block(self, r, s):
        """Block of rows on level r and columns on level s (1-based levels)."""
        return self._entries[self._level_slice(r), self._level_slice(s)]

    def equals(self, other):
        if not isinstance(other, IncidenceMatrix):
            return False

        return self._sizes == other._sizes and np.array_equal(self._entries, other._entries)

    def _check_compatible(self, other):
        check_type(other, IncidenceMatrix)
        if self._sizes != other._sizes:
            raise DomainError('Incompatible level sizes {} and {}'.format(self._sizes, other._sizes))

    def _element_wise_operation(self, other, operation):
        if isinstance(other, IncidenceMatrix):
            self._check_compatible(other)
            other = other._entries
        elif not isinstance(other, int):
            raise TypeError('Can only apply operation with int or IncidenceMatrix')

        if operation == '+':
            result = self._entries + other
        elif operation == '-':
            result = self._entries - other
        elif operation == '*':
            result = self._entries * other
        else:
            raise ValueError('Unsupported operation: {}'.format(operation))

        return IncidenceMatrix(self._sizes, result)

    def _matrix_product(self, other):
        self._check_compatible(other)

        return IncidenceMatrix(self._sizes, exact_dot(self._entries, other._entries))

    def inverse(self):
        """Exact inverse of a unit upper-triangular matrix by block back-substitution.

        Returns
        -------
        IncidenceMatrix

        Raises
        ------
        DomainError
            If a diagonal entry is not 1 or an entry below the diagonal is nonzero.

        """
        entries = self._entries
        total = len(self)

        for label in range(total):
            if entries[label, label] != 1:
                raise DomainError('Cannot invert: diagonal entry at label {} is {}, expected 1'
                                  .format(label + 1, entries[label, label]))
        lower = np.argwhere(np.tril(entries, -1) != 0)
        if len(lower) > 0:
            row, column = lower[0]
            raise DomainError('Cannot invert: nonzero entry below the diagonal at ({}, {})'
                              .format(row + 1, column + 1))

        inverse = np.zeros((total, total), dtype=object)
        for level in reversed(range(self.levels)):
            low, high = self._offsets[level], self._offsets[level + 1]
            rhs = np.zeros((high - low, total), dtype=object)
            rhs[:, low:high] = object_identity(high - low)
            if high < total:
                rhs[:, high:] = -exact_dot(entries[low:high, high:], inverse[high:, high:])

            diagonal = entries[low:high, low:high]
            if _is_identity(diagonal):
                inverse[low:high, :] = rhs
            else:
                inverse[low:high, :] = exact_dot(_unitriangular_inverse(diagonal), rhs)

        return IncidenceMatrix(self._sizes, inverse)

    def to_dict(self):
        return {'sizes': list(self._sizes), 'entries': self._entries.tolist()}

    def to_csv(self, filepath=None):
        """Dense decimal CSV, one row per line; returns the text when no path is given."""
        from ..io.csv import matrix_to_csv

        return matrix_to_csv(self, filepath)


class CodingMatrix(KodagCommon):
    """Per-level-pair coefficients c_{r,s} of a closed-form Moebius matrix.

    Examples
    --------
    >>> from kodag import Sequence, coding_matrix
    >>> coding = coding_matrix(Sequence.naturals(), 4)
    >>> coding
    CodingMatrix(n=4)
    >>> coding.row(1)
    [1, -1, 1, -2]

    """
    def __init__(self, c):
        c = to_object_array(c)
        if c.shape[0] != c.shape[1]:
            raise DomainError('Coding matrix must be square, got shape {}'.format(c.shape))
        c.setflags(write=False)
        self._c = c

    @property
    def n(self):
        return self._c.shape[0]

    @property
    def values(self):
        return self._c

    def entry(self, r, s):
        return self._c[r - 1, s - 1]

    def row(self, r):
        """Entries c_{r,r}, c_{r,r+1}, ..., c_{r,n}."""
        return self._c[r - 1, r - 1:].tolist()

    def __len__(self):
        return self.n

    def __repr__(self):
        return '{}(n={})'.format(self.__class__.__name__, self.n)

    def __str__(self):
        headers = [''] + list(range(1, self.n + 1))
        rows = [[r + 1] + self._c[r].tolist() for r in range(self.n)]

        return tabulate(rows, headers=headers)

    def to_dict(self):
        return {'n': self.n, 'c': self._c.tolist()}
