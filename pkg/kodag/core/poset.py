import bisect
import logging
import numbers
from collections import namedtuple
from fractions import Fraction

import numpy as np
from tabulate import tabulate

from ..config import MAX_SEED
from .errors import DomainError, JoinConditionError
from .fsequence import Sequence
from .generic import KodagCommon
from .matrix import IncidenceMatrix, exact_dot, level_offsets
from .utils import check_int, check_type, check_in_range

log = logging.getLogger(__name__)

NodeRef = namedtuple('NodeRef', ['level', 'pos'])


def _to_block(data, rows, columns, index):
    raw = np.asarray(data)
    if raw.size and raw.dtype.kind not in 'iu':
        raise DomainError('Block {} must hold integer entries, got dtype {}'.format(index, raw.dtype))

    block = raw.astype(np.int64)
    if block.ndim == 1 and block.size == 0:
        block = block.reshape((rows, columns))
    if block.shape != (rows, columns):
        raise DomainError('Block {} must have shape {}x{}, got {}'.format(index, rows, columns, block.shape))
    if not np.isin(block, (0, 1)).all():
        raise DomainError('Block {} has entries outside {{0, 1}}'.format(index))

    block = block.astype(np.uint8)
    block.setflags(write=False)

    return block


class GradedPoset(KodagCommon):
    """F-denominated graded poset as a chain of bipartite layers.

    Level t has ``sizes[t - 1]`` nodes; block t is the 0/1 biadjacency matrix from level t to level t+1.
    A cobweb poset has every block all-ones.

    Attributes
    ----------
    sizes
    blocks
    levels
    is_cobweb

    Examples
    --------
    >>> from kodag import GradedPoset
    >>> p = GradedPoset([1, 2, 2], [[[1, 1]], [[1, 0], [0, 1]]])
    >>> p
    GradedPoset(sizes=(1, 2, 2), cobweb=False)
    >>> len(p)
    5
    >>> print(p)
      level    size    arcs up
    -------  ------  ---------
          1       1          2
          2       2          2
          3       2          0

    """
    def __init__(self, sizes, blocks):
        """Initialize a GradedPoset.

        Parameters
        ----------
        sizes : list of int
            Positive level sizes s_1..s_n.
        blocks : list of array_like
            n - 1 biadjacency matrices; block t has shape s_t x s_{t+1}.

        """
        check_type(sizes, (list, tuple))
        check_type(blocks, (list, tuple))
        if len(sizes) == 0:
            raise DomainError('A graded poset needs at least one level')
        sizes = tuple(check_int(size, 'level size', minimum=1) for size in sizes)
        if len(blocks) != len(sizes) - 1:
            raise DomainError('{} levels need {} blocks, got {}'.format(len(sizes), len(sizes) - 1, len(blocks)))

        self._sizes = sizes
        self._blocks = tuple(_to_block(block, sizes[t], sizes[t + 1], t + 1) for t, block in enumerate(blocks))
        self._offsets = level_offsets(sizes)

    @property
    def sizes(self):
        return self._sizes

    @property
    def blocks(self):
        return self._blocks

    @property
    def values(self):
        return self._blocks

    @property
    def levels(self):
        return len(self._sizes)

    @property
    def offsets(self):
        return self._offsets

    @property
    def is_cobweb(self):
        return all(block.all() for block in self._blocks)

    def block(self, t):
        """Biadjacency block B_t between levels t and t+1."""
        t = check_in_range(t, 'block index', 1, self.levels - 1)

        return self._blocks[t - 1]

    def equals(self, other):
        if not isinstance(other, GradedPoset):
            return False

        return self._sizes == other._sizes and all(np.array_equal(a, b)
                                                   for a, b in zip(self._blocks, other._blocks))

    def __len__(self):
        return self._offsets[-1]

    def __repr__(self):
        return '{}(sizes={}, cobweb={})'.format(self.__class__.__name__,
                                                self._sizes,
                                                self.is_cobweb)

    def __str__(self):
        arcs = [int(block.sum()) for block in self._blocks] + [0]
        rows = [[level, size, arc] for level, size, arc in zip(range(1, self.levels + 1), self._sizes, arcs)]

        return tabulate(rows, headers=['level', 'size', 'arcs up'])

    def to_dict(self):
        return {'version': 1,
                'sizes': list(self._sizes),
                'blocks': [block.tolist() for block in self._blocks]}


def cobweb(seq, n):
    """Cobweb poset of the first n levels of an F-sequence.

    Parameters
    ----------
    seq : Sequence
    n : int
        Number of levels, at least 1.

    Returns
    -------
    GradedPoset

    Examples
    --------
    >>> from kodag import Sequence, cobweb
    >>> cobweb(Sequence.naturals(), 3).sizes
    (1, 2, 3)
    >>> cobweb(Sequence.fibonacci(with_root=True), 7).sizes
    (1, 1, 1, 2, 3, 5, 8)

    """
    check_type(seq, Sequence)
    n = check_int(n, 'n', minimum=1)
    sizes = seq.terms(n)

    return GradedPoset(sizes, [np.ones((sizes[t], sizes[t + 1]), dtype=np.uint8) for t in range(n - 1)])


def natural_join(p, q):
    """Glue q on top of p along the shared level (last of p, first of q).

    Raises
    ------
    JoinConditionError
        If the shared level sizes differ.

    """
    check_type(p, GradedPoset)
    check_type(q, GradedPoset)
    if p.sizes[-1] != q.sizes[0]:
        raise JoinConditionError(p.sizes[-1], q.sizes[0])

    return GradedPoset(p.sizes + q.sizes[1:], p.blocks + q.blocks)


def layers(p):
    """Split p into its two-level di-bicliques (or p itself when it has one level)."""
    if p.levels == 1:
        return [p]

    return [GradedPoset(p.sizes[t:t + 2], [p.blocks[t]]) for t in range(p.levels - 1)]


def layer(p, k, n):
    """Sub-poset spanned by levels k..n."""
    n = check_in_range(n, 'n', 1, p.levels)
    k = check_in_range(k, 'k', 1, n)

    return GradedPoset(p.sizes[k - 1:n], p.blocks[k - 1:n - 1])


def _check_node(p, node):
    level = check_in_range(node[0], 'level', 1, p.levels)
    pos = check_in_range(node[1], 'pos', 1, p.sizes[level - 1])

    return NodeRef(level, pos)


def linear_label(p, node):
    """1-based linear label of a node: sizes of the lower levels plus its position."""
    node = _check_node(p, node)

    return p.offsets[node.level - 1] + node.pos


def grid_of(p, label):
    """Inverse of `linear_label`."""
    label = check_in_range(label, 'label', 1, len(p))
    level = bisect.bisect_left(p.offsets, label)

    return NodeRef(level, label - p.offsets[level - 1])


def level_of(p, label):
    return grid_of(p, label).level


def cover_matrix(p):
    """Cover relation matrix kappa: only the superdiagonal level blocks are populated.

    Examples
    --------
    >>> from kodag import Sequence, cobweb, cover_matrix
    >>> int(sum(cover_matrix(cobweb(Sequence.naturals(), 3)).values.flat))
    8

    """
    total = len(p)
    entries = np.zeros((total, total), dtype=object)
    offsets = p.offsets
    for t, block in enumerate(p.blocks):
        entries[offsets[t]:offsets[t + 1], offsets[t + 1]:offsets[t + 2]] = block.astype(object)

    return IncidenceMatrix(p.sizes, entries)


def adjacency(p):
    """Hasse digraph adjacency matrix A_F; identical to the cover matrix."""
    return cover_matrix(p)


def block_product(p, r, s):
    """Integer product B_r B_{r+1} ... B_{s-1}.

    Entry (i, j) counts the saturated chains from node (r, i) to node (s, j).

    Parameters
    ----------
    p : GradedPoset
    r : int
    s : int
        1 <= r < s <= number of levels.

    Returns
    -------
    numpy.ndarray
        Object array of shape s_r x s_s.

    """
    r = check_int(r, 'r')
    s = check_int(s, 's')
    if r >= s:
        raise DomainError('Block product needs r < s, got r={}, s={}'.format(r, s))
    check_in_range(r, 'r', 1, p.levels)
    check_in_range(s, 's', 1, p.levels)

    product = p.blocks[r - 1].astype(object)
    for t in range(r, s - 1):
        product = exact_dot(product, p.blocks[t])

    return product


def mute_nodes(p):
    """Nodes lacking arcs up (below the top level) or arcs down (above the bottom level).

    Examples
    --------
    >>> from kodag import GradedPoset, mute_nodes
    >>> mute_nodes(GradedPoset([1, 2], [[[1, 0]]]))
    [NodeRef(level=2, pos=2)]

    """
    mute = set()
    for t, block in enumerate(p.blocks):
        for row in np.flatnonzero(block.sum(axis=1) == 0):
            mute.add(NodeRef(t + 1, int(row) + 1))
        for column in np.flatnonzero(block.sum(axis=0) == 0):
            mute.add(NodeRef(t + 2, int(column) + 1))

    return sorted(mute)


def _check_density(density):
    if not isinstance(density, numbers.Real) or isinstance(density, bool):
        raise TypeError('Expected a rational density, received: {}'.format(type(density).__name__))
    density = Fraction(density)
    if not 0 < density <= 1:
        raise DomainError('Density must be in (0, 1], got {}'.format(density))

    return density


def random_poset(seq, n, density=1, seed=0, allow_mute=False):
    """Seeded random graded poset with level sizes taken from seq.

    Every block bit is set independently with probability `density`. Unless `allow_mute`, each
    all-zero row gets its first bit set and then each all-zero column gets its first bit set, so
    no node is mute.

    Parameters
    ----------
    seq : Sequence
    n : int
        Number of levels.
    density : Fraction or float, optional
        In (0, 1].
    seed : int, optional
    allow_mute : bool, optional

    Returns
    -------
    GradedPoset

    """
    check_type(seq, Sequence)
    n = check_int(n, 'n', minimum=1)
    density = _check_density(density)
    seed = check_in_range(seed, 'seed', 0, MAX_SEED)

    rng = np.random.RandomState(seed)
    sizes = seq.terms(n)
    blocks = []
    for t in range(n - 1):
        block = (rng.random_sample((sizes[t], sizes[t + 1])) < float(density)).astype(np.uint8)
        if not allow_mute:
            block[block.sum(axis=1) == 0, 0] = 1
            block[0, block.sum(axis=0) == 0] = 1
        blocks.append(block)

    log.debug('random poset sizes=%s density=%s seed=%d allow_mute=%s', sizes, density, seed, allow_mute)

    return GradedPoset(sizes, blocks)
