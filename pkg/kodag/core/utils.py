import numbers

import numpy as np

from .errors import DomainError


def check_type(data, expected_types):
    if data is not None and not isinstance(data, expected_types):
        raise TypeError('Expected: {}, received: {}'.format(str(expected_types), type(data).__name__))

    return data


def check_int(value, name, minimum=None):
    # bool is an int subclass but never a valid level or count
    if isinstance(value, (bool, np.bool_)) or not isinstance(value, numbers.Integral):
        raise TypeError('Expected an integer for {}, received: {}'.format(name, type(value).__name__))

    value = int(value)
    if minimum is not None and value < minimum:
        raise DomainError('{} must be >= {}, got {}'.format(name, minimum, value))

    return value


def check_in_range(value, name, low, high):
    value = check_int(value, name)
    if not low <= value <= high:
        raise DomainError('{} must be in [{}, {}], got {}'.format(name, low, high, value))

    return value


_as_python_int = np.frompyfunc(int, 1, 1)


def to_object_array(data):
    """Copy nested integer data into a 2-d numpy array of Python ints."""
    arr = np.array(data, dtype=object)
    if arr.ndim != 2:
        raise DomainError('Expected a 2-dimensional matrix, got {} dimension(s)'.format(arr.ndim))

    return np.asarray(_as_python_int(arr), dtype=object).reshape(arr.shape)


def shorten_rows(rows, limit=50, keep=20):
    if len(rows) > limit:
        return list(rows[:keep]) + [['...']] + list(rows[-keep:])
    else:
        return list(rows)
