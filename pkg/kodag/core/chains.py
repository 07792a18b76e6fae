import itertools
import logging
from collections import namedtuple
from fractions import Fraction

import numpy as np
from tabulate import tabulate

from ..config import ENUMERATION_CAP
from .errors import CapExceededError, DomainError
from .fsequence import Sequence, falling, ffactorial, fnomial
from .generic import KodagCommon
from .incidence import max_matrix
from .poset import GradedPoset, NodeRef, _check_node, block_product, cobweb
from .utils import check_in_range, check_int, check_type, shorten_rows

log = logging.getLogger(__name__)

Chain = namedtuple('Chain', ['nodes'])
HyperBoxPoint = namedtuple('HyperBoxPoint', ['start', 'coords'])
IdentityReport = namedtuple('IdentityReport', ['name', 'holds', 'lhs', 'rhs', 'method'])


class ChainSet(KodagCommon):
    """Maximal chains of the layer spanned by levels k..n, in lexicographic order.

    Examples
    --------
    >>> from kodag import Sequence, cobweb, enumerate_layer_chains
    >>> chains = enumerate_layer_chains(cobweb(Sequence.naturals(), 3), 2, 3)
    >>> chains
    ChainSet(k=2, n=3, count=6)
    >>> chains.chains[0]
    Chain(nodes=(NodeRef(level=2, pos=1), NodeRef(level=3, pos=1)))

    """
    def __init__(self, k, n, chains):
        self._k = k
        self._n = n
        self._chains = tuple(chains)

    @property
    def k(self):
        return self._k

    @property
    def n(self):
        return self._n

    @property
    def chains(self):
        return self._chains

    @property
    def values(self):
        return self._chains

    def __len__(self):
        return len(self._chains)

    def __iter__(self):
        return iter(self._chains)

    def __repr__(self):
        return '{}(k={}, n={}, count={})'.format(self.__class__.__name__,
                                                 self._k,
                                                 self._n,
                                                 len(self))

    def __str__(self):
        headers = ['level {}'.format(level) for level in range(self._k, self._n + 1)]
        rows = [[node.pos for node in chain.nodes] for chain in self._chains]

        return tabulate(shorten_rows(rows), headers=headers)

    def to_dict(self):
        return {'k': self._k,
                'n': self._n,
                'chains': [[[node.level, node.pos] for node in chain.nodes] for chain in self._chains]}


def _check_layer(p, k, n):
    n = check_in_range(n, 'n', 1, p.levels)
    k = check_in_range(k, 'k', 1, n)

    return k, n


def layer_chain_count(p, k, n):
    """Exact number of maximal chains of the layer k..n, as the entry sum of B_k ... B_{n-1}."""
    check_type(p, GradedPoset)
    k, n = _check_layer(p, k, n)
    if k == n:
        return p.sizes[k - 1]

    return sum(block_product(p, k, n).flat)


def _successors(p):
    return [[[int(j) + 1 for j in np.flatnonzero(row)] for row in block] for block in p.blocks]


def enumerate_layer_chains(p, k, n, cap=ENUMERATION_CAP):
    """Every chain through levels k, k+1, ..., n whose steps are covers.

    Parameters
    ----------
    p : GradedPoset
    k : int
    n : int
        1 <= k <= n <= number of levels.
    cap : int, optional
        Largest number of chains that may be materialized.

    Returns
    -------
    ChainSet

    Raises
    ------
    CapExceededError
        When the projected chain count is above `cap`; it carries the exact projected count.

    """
    check_type(p, GradedPoset)
    k, n = _check_layer(p, k, n)
    cap = check_int(cap, 'cap', minimum=0)

    projected = layer_chain_count(p, k, n)
    if projected > cap:
        raise CapExceededError(projected, cap)
    log.debug('enumerating %d chains of layer %d..%d', projected, k, n)

    successors = _successors(p)
    chains = []

    def extend(path):
        last = path[-1]
        if last.level == n:
            chains.append(Chain(tuple(path)))
            return
        for pos in successors[last.level - 1][last.pos - 1]:
            path.append(NodeRef(last.level + 1, pos))
            extend(path)
            path.pop()

    for pos in range(1, p.sizes[k - 1] + 1):
        extend([NodeRef(k, pos)])

    return ChainSet(k, n, chains)


def count_interval_chains(p, x, y):
    """Number of maximal chains of the interval [x, y] by depth-first search over covers.

    Incomparable pairs give 0 and x = y gives 1.
    """
    check_type(p, GradedPoset)
    x = _check_node(p, x)
    y = _check_node(p, y)
    successors = _successors(p)

    def paths_from(node):
        if node == y:
            return 1
        if node.level >= y.level:
            return 0
        return sum(paths_from(NodeRef(node.level + 1, pos)) for pos in successors[node.level - 1][node.pos - 1])

    return paths_from(x)


def hyperbox_encode(chain):
    """Within-level positions of a layer chain."""
    check_type(chain, Chain)

    return HyperBoxPoint(chain.nodes[0].level, tuple(node.pos for node in chain.nodes))


def hyperbox_decode(seq, point):
    """Cobweb layer chain at a point of the box [k_F] x [(k+1)_F] x ... x [n_F].

    Raises
    ------
    DomainError
        If a coordinate is outside its level.

    """
    check_type(seq, Sequence)
    check_type(point, HyperBoxPoint)
    start = check_int(point.start, 'start', minimum=1)

    nodes = []
    for level, pos in enumerate(point.coords, start):
        size = seq.term(level)
        if not 1 <= pos <= size:
            raise DomainError('Coordinate {} is outside level {} of size {}'.format(pos, level, size))
        nodes.append(NodeRef(level, pos))

    return Chain(tuple(nodes))


def hyperbox_points(seq, k, n):
    """Points of the box V_{k,n} in lexicographic order."""
    check_type(seq, Sequence)
    n = check_int(n, 'n', minimum=1)
    k = check_in_range(k, 'k', 1, n)

    ranges = [range(1, seq.term(level) + 1) for level in range(k, n + 1)]
    for coords in itertools.product(*ranges):
        yield HyperBoxPoint(k, coords)


def _counted(p, k, n, cap):
    """Layer count by enumeration within the cap and by block products past it."""
    projected = layer_chain_count(p, k, n)
    if projected > cap:
        return projected, 'block_product'

    return len(enumerate_layer_chains(p, k, n, cap)), 'enumeration'


def _check_markov_levels(r, k, s):
    r = check_int(r, 'r', minimum=1)
    k = check_int(k, 'k')
    s = check_int(s, 's')
    if not r <= k <= s:
        raise DomainError('Markov identities need r <= k <= s, got r={}, k={}, s={}'.format(r, k, s))

    return r, k, s


def _markov_reports(p, r, k, s, cap):
    left, left_method = _counted(p, r, k, cap)
    right, right_method = _counted(p, k, s, cap)
    whole, whole_method = _counted(p, r, s, cap)
    methods = {left_method, right_method, whole_method}
    method = 'enumeration' if methods == {'enumeration'} else 'block_product'

    k_size = p.sizes[k - 1]
    reports = [IdentityReport('markov-product r={} k={} s={}'.format(r, k, s),
                              left * right == k_size * whole, left * right, k_size * whole, method)]
    if k < s:
        shifted, shifted_method = _counted(p, k + 1, s, cap)
        reports.append(IdentityReport('markov-shifted r={} k={} s={}'.format(r, k, s),
                                      left * shifted == whole, left * shifted, whole,
                                      method if shifted_method == 'enumeration' else 'block_product'))

    return reports


def check_markov(seq, r, k, s, cap=ENUMERATION_CAP):
    """Both Markov-like layer identities on the cobweb of seq.

    C^{r,k} C^{k,s} = k_F C^{r,s} always; C^{r,k} C^{k+1,s} = C^{r,s} only when k < s.

    Returns
    -------
    list of IdentityReport

    Examples
    --------
    >>> from kodag import Sequence, check_markov
    >>> [(report.lhs, report.rhs) for report in check_markov(Sequence.naturals(), 1, 2, 4)]
    [(48, 48), (24, 24)]

    """
    check_type(seq, Sequence)
    r, k, s = _check_markov_levels(r, k, s)

    return _markov_reports(cobweb(seq, s), r, k, s, cap)


def check_markov_poset(p, r, k, s, cap=ENUMERATION_CAP):
    """Markov-like layer identities evaluated on an arbitrary graded poset."""
    check_type(p, GradedPoset)
    r, k, s = _check_markov_levels(r, k, s)
    check_in_range(s, 's', 1, p.levels)

    return _markov_reports(p, r, k, s, cap)


def _as_number(value):
    value = Fraction(value)

    return value.numerator if value.denominator == 1 else value


def theorem1_check(seq, n, k, cap=ENUMERATION_CAP):
    """Layer count of levels k+1..n against fnomial(n, k) (n-k)_F!, plus m_F! against the chains of the m-level cobweb.

    Returns
    -------
    list of IdentityReport

    """
    check_type(seq, Sequence)
    n = check_int(n, 'n', minimum=1)
    k = check_int(k, 'k', minimum=0)
    if k >= n:
        raise DomainError('Layer cardinality needs 0 <= k < n, got n={}, k={}'.format(n, k))

    m = n - k
    count, method = _counted(cobweb(seq, n), k + 1, n, cap)
    expected = _as_number(fnomial(seq, n, k) * ffactorial(seq, m))
    factorial_count, factorial_method = _counted(cobweb(seq, m), 1, m, cap)

    return [IdentityReport('layer-cardinality n={} k={}'.format(n, k), count == expected, count, expected, method),
            IdentityReport('factorial-chains m={}'.format(m), factorial_count == ffactorial(seq, m),
                           factorial_count, ffactorial(seq, m), factorial_method)]


def theorem3_check(seq, k, n, cap=ENUMERATION_CAP):
    """Sum of [Max] from the first level-k node over level n, against the falling factorial and the layer count.

    Returns
    -------
    list of IdentityReport

    Examples
    --------
    >>> from kodag import Sequence, theorem3_check
    >>> report = theorem3_check(Sequence.naturals(), 1, 4)[0]
    >>> report.holds, report.lhs
    (True, 24)

    """
    check_type(seq, Sequence)
    n = check_int(n, 'n', minimum=2)
    k = check_in_range(k, 'k', 1, n - 1)

    p = cobweb(seq, n)
    total = sum(max_matrix(p).block(k, n)[0])
    expected = falling(seq, n, n - k)
    count, method = _counted(p, k + 1, n, cap)

    return [IdentityReport('max-row-sum k={} n={}'.format(k, n), total == expected, total, expected, 'max_matrix'),
            IdentityReport('max-row-sum-chains k={} n={}'.format(k, n), total == count, total, count, method)]


def theorem3_general(p, k, n):
    """Row sums of [Max] from every level-k node over level n; holds when they all agree."""
    check_type(p, GradedPoset)
    k, n = _check_layer(p, k, n)
    sums = [sum(row) for row in max_matrix(p).block(k, n).tolist()]

    return IdentityReport('max-row-sums k={} n={}'.format(k, n), len(set(sums)) == 1, sums, None, 'max_matrix')


def fnomial_via_max(seq, n, k, mode='derived'):
    """F-nomial coefficient recovered from [Max] row sums.

    Parameters
    ----------
    seq : Sequence
    n : int
    k : int
        0 <= k <= n.
    mode : {'derived', 'literal'}, optional
        'derived' checks fnomial(n, n-k) = sum over level n of [Max] from a level-k node, divided by (n-k)_F!;
        k = 0 sums from every node of level 1. 'literal' evaluates
        fnomial(n, k) = [Max] between the first nodes of levels k-2 and n+1, divided by (n-k)_F!.

    Returns
    -------
    IdentityReport
        `holds` is None when the literal form needs a level below 1.

    Examples
    --------
    >>> from kodag import Sequence, fnomial_via_max
    >>> report = fnomial_via_max(Sequence.naturals(), 4, 2)
    >>> report.holds, report.rhs
    (True, Fraction(6, 1))

    """
    check_type(seq, Sequence)
    n = check_int(n, 'n', minimum=0)
    k = check_in_range(k, 'k', 0, n)

    if mode == 'derived':
        name = 'fnomial-via-max n={} k={}'.format(n, k)
        if n == 0:
            total = 1
        else:
            block = max_matrix(cobweb(seq, n)).block(max(k, 1), n)
            total = sum(block.flat) if k == 0 else sum(block[0])
        lhs = fnomial(seq, n, n - k)
        rhs = Fraction(total, ffactorial(seq, n - k))
    elif mode == 'literal':
        name = 'fnomial-via-max-literal l={} k={}'.format(n, k)
        lhs = fnomial(seq, n, k)
        if k - 2 < 1:
            return IdentityReport(name, None, lhs, None, 'not-evaluable')
        chains = max_matrix(cobweb(seq, n + 1)).block(k - 2, n + 1)[0, 0]
        rhs = Fraction(chains, ffactorial(seq, n - k))
    else:
        raise ValueError('Unknown mode {!r}; expected derived or literal'.format(mode))

    return IdentityReport(name, lhs == rhs, lhs, rhs, 'max_matrix')


def corollary_check(seq, k, n):
    """Chain count between the first nodes of levels k and n.

    Asserted: [Max]_{k,n} n_F equals the falling factorial of n_F with n-k factors. Reported: the
    printed closed form fnomial(n-1, k-2) (n-k+1)_F!, not evaluable for k < 2.

    Returns
    -------
    list of IdentityReport

    """
    check_type(seq, Sequence)
    n = check_int(n, 'n', minimum=2)
    k = check_in_range(k, 'k', 1, n - 1)

    chains = max_matrix(cobweb(seq, n)).block(k, n)[0, 0]
    lhs = chains * seq.term(n)
    rhs = falling(seq, n, n - k)
    reports = [IdentityReport('max-entry k={} n={}'.format(k, n), lhs == rhs, lhs, rhs, 'max_matrix')]

    name = 'max-entry-printed k={} n={}'.format(k, n)
    if k < 2:
        reports.append(IdentityReport(name, None, chains, None, 'not-evaluable'))
    else:
        printed = _as_number(fnomial(seq, n - 1, k - 2) * ffactorial(seq, n - k + 1))
        reports.append(IdentityReport(name, chains == printed, chains, printed, 'closed_form'))

    return reports
