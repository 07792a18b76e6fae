import numpy as np


def assert_matrix_equal(actual, expected):
    """Compare an IncidenceMatrix against another one or against nested lists."""
    if hasattr(expected, 'sizes'):
        assert actual.sizes == expected.sizes
        expected = expected.values

    np.testing.assert_array_equal(actual.values.astype(np.int64), np.array(expected, dtype=np.int64))


def region(matrix, size=16):
    return matrix.values[:size, :size].tolist()


# zeta of the naturals cobweb, labels 1..16
ZETA_NATURALS = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
]

# zeta of the Fibonacci cobweb with a root level
ZETA_FIBONACCI_ROOT = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
]

MOBIUS_NATURALS = [
    [1, -1, -1, 1, 1, 1, -2, -2, -2, -2, 6, 6, 6, 6, 6, -24],
    [0, 1, 0, -1, -1, -1, 2, 2, 2, 2, -6, -6, -6, -6, -6, 24],
    [0, 0, 1, -1, -1, -1, 2, 2, 2, 2, -6, -6, -6, -6, -6, 24],
    [0, 0, 0, 1, 0, 0, -1, -1, -1, -1, 3, 3, 3, 3, 3, -12],
    [0, 0, 0, 0, 1, 0, -1, -1, -1, -1, 3, 3, 3, 3, 3, -12],
    [0, 0, 0, 0, 0, 1, -1, -1, -1, -1, 3, 3, 3, 3, 3, -12],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, -1, -1, -1, -1, 4],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, -1, -1, -1, -1, 4],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, -1, -1, -1, -1, 4],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, -1, -1, -1, 4],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
]

MOBIUS_FIBONACCI_ROOT = [
    [1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, -1, -1, 1, 1, 1, -2, -2, -2, -2, -2, 8, 8, 8],
    [0, 0, 0, 1, 0, -1, -1, -1, 2, 2, 2, 2, 2, -8, -8, -8],
    [0, 0, 0, 0, 1, -1, -1, -1, 2, 2, 2, 2, 2, -8, -8, -8],
    [0, 0, 0, 0, 0, 1, 0, 0, -1, -1, -1, -1, -1, 4, 4, 4],
    [0, 0, 0, 0, 0, 0, 1, 0, -1, -1, -1, -1, -1, 4, 4, 4],
    [0, 0, 0, 0, 0, 0, 0, 1, -1, -1, -1, -1, -1, 4, 4, 4],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, -1, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, -1, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, -1, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, -1, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
]

# coding matrix rows c_{r,r}, ..., c_{r,6}
CODING_NATURALS = [[1, -1, 1, -2, 6, -24],
                   [1, -1, 2, -6, 24],
                   [1, -1, 3, -12],
                   [1, -1, 4],
                   [1, -1],
                   [1]]

CODING_ONE_ONE_THREES = [[1, -1, 0, 0, 0, 0],
                         [1, -1, 2, -4, 8],
                         [1, -1, 2, -4],
                         [1, -1, 2],
                         [1, -1],
                         [1]]

CODING_ONE_THREES = [[1, -1, 2, -4, 8, -16],
                     [1, -1, 2, -4, 8],
                     [1, -1, 2, -4],
                     [1, -1, 2],
                     [1, -1],
                     [1]]
