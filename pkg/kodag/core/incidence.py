import logging
from collections import namedtuple

import numpy as np

from .errors import DomainError, PreconditionError
from .fsequence import Sequence, cumulative
from .matrix import CodingMatrix, IncidenceMatrix, KrotonValue, boolean_dot, level_offsets, object_identity
from .poset import GradedPoset, NodeRef, block_product, cover_matrix
from .utils import check_int, check_type

log = logging.getLogger(__name__)

Mismatch = namedtuple('Mismatch', ['row', 'col', 'block', 'expected', 'actual'])
ClosedFormResult = namedtuple('ClosedFormResult', ['matrix', 'agrees_with_inversion', 'first_mismatch'])
BlockReport = namedtuple('BlockReport', ['passed', 'first_offending', 'reason'])
KrotonVariants = namedtuple('KrotonVariants', ['r', 's', 'canonical', 'rising', 'shifted'])


def _grid_vectors(sizes):
    """Level and position (both 1-based) of every linear label."""
    levels = np.repeat(np.arange(1, len(sizes) + 1), sizes)
    positions = np.concatenate([np.arange(1, size + 1) for size in sizes])

    return levels, positions


def _cobweb_sizes(seq, n):
    check_type(seq, Sequence)
    n = check_int(n, 'n', minimum=1)

    return seq.terms(n)


def zeta_closure(p):
    """Reflexive-transitive Boolean closure of the cover relation.

    OR of the Boolean powers kappa^0 .. kappa^(n-1); kappa is nilpotent so no fixed-point test is needed.

    Parameters
    ----------
    p : GradedPoset

    Returns
    -------
    IncidenceMatrix
        0/1 characteristic matrix of the partial order.

    Examples
    --------
    >>> from kodag import Sequence, cobweb, zeta_closure
    >>> zeta_closure(cobweb(Sequence.naturals(), 2)).values.tolist()
    [[1, 1, 1], [0, 1, 0], [0, 0, 1]]

    """
    check_type(p, GradedPoset)
    kappa = cover_matrix(p).values.astype(bool)

    reach = np.eye(len(p), dtype=bool)
    power = reach
    products = 0
    for _ in range(p.levels - 1):
        power = boolean_dot(power, kappa)
        products += 1
        if not power.any():
            break
        reach |= power

    log.debug('zeta closure of %d nodes after %d Boolean products', len(p), products)

    return IncidenceMatrix(p.sizes, reach.astype(np.int64))


def zeta_strict(p):
    """Strict order matrix zeta minus delta."""
    return zeta_closure(p) - IncidenceMatrix.identity(p.sizes)


def zeta_block_formula(p):
    """Zeta assembled blockwise: identity diagonal blocks, L(B_r ... B_{s-1}) above them."""
    check_type(p, GradedPoset)
    entries = object_identity(len(p))
    offsets = p.offsets
    for r in range(1, p.levels):
        for s in range(r + 1, p.levels + 1):
            reachable = (block_product(p, r, s) > 0).astype(np.int64)
            entries[offsets[r - 1]:offsets[r], offsets[s - 1]:offsets[s]] = reachable.astype(object)

    return IncidenceMatrix(p.sizes, entries)


def zeta_formula_kwasniewski(seq, n, form='delta'):
    """Cobweb zeta as the half-plane of ones minus the staircase cut.

    zeta(x, y) = zeta_1(x, y) - zeta_0(x, y) over linear labels, where zeta_1 is the sum of delta(x + k, y)
    over k >= 0 and zeta_0 removes, for a label at position k of a level of size s_F, the next s_F - k labels.

    Parameters
    ----------
    seq : Sequence
    n : int
        Number of levels.
    form : {'delta', 'bracket'}, optional
        'delta' sums shifted identity matrices; 'bracket' evaluates the same terms as indicator brackets.

    Returns
    -------
    IncidenceMatrix

    """
    sizes = _cobweb_sizes(seq, n)
    offsets = level_offsets(sizes)
    total = offsets[-1]

    if form == 'delta':
        zeta_one = sum(np.eye(total, k=k, dtype=np.int64) for k in range(total))
        zeta_zero = np.zeros((total, total), dtype=np.int64)
        for level, size in enumerate(sizes):
            for k in range(1, size + 1):
                x = offsets[level] + k - 1
                # sum over r in 1..size-k of delta(x + r, y)
                zeta_zero[x, x + 1:x + 1 + size - k] += 1
    elif form == 'bracket':
        labels = np.arange(1, total + 1)
        x, y = labels[:, None], labels[None, :]
        zeta_one = (x <= y).astype(np.int64)
        zeta_zero = np.zeros((total, total), dtype=np.int64)
        for level in range(len(sizes)):
            in_level = (x > offsets[level]) & (x <= offsets[level + 1])
            zeta_zero += (in_level & (x < y) & (y <= offsets[level + 1])).astype(np.int64)
    else:
        raise ValueError('Unknown form {!r}; expected delta or bracket'.format(form))

    return IncidenceMatrix(sizes, zeta_one - zeta_zero)


def zeta_formula_krot(seq, n):
    """Cobweb zeta in grid coordinates: delta(s, u) delta(t, v) + sum over k >= 1 of delta(t + k, v).

    Here t, v are the levels and s, u the positions of the two nodes.
    """
    sizes = _cobweb_sizes(seq, n)
    levels, positions = _grid_vectors(sizes)
    t, v = levels[:, None], levels[None, :]
    s, u = positions[:, None], positions[None, :]

    zeta = ((s == u) & (t == v)).astype(np.int64)
    for k in range(1, len(sizes)):
        zeta += (t + k == v).astype(np.int64)

    return IncidenceMatrix(sizes, zeta)


def zeta_formula_dziemianczuk(seq, n):
    """Cobweb zeta from cumulative sums S: [x <= y] - [x < y] * sum over m of [x > S(m)][y <= S(m + 1)]."""
    sizes = _cobweb_sizes(seq, n)
    bounds = [cumulative(seq, m) for m in range(len(sizes) + 1)]
    labels = np.arange(1, bounds[-1] + 1)
    x, y = labels[:, None], labels[None, :]

    same_step = np.zeros((len(labels), len(labels)), dtype=np.int64)
    for m in range(len(sizes)):
        same_step += ((x > bounds[m]) & (y <= bounds[m + 1])).astype(np.int64)

    zeta = (x <= y).astype(np.int64) - (x < y).astype(np.int64) * same_step

    return IncidenceMatrix(sizes, zeta)


def mobius_inverse(zeta):
    """Moebius matrix as the exact inverse of a unit upper-triangular 0/1 zeta.

    Raises
    ------
    DomainError
        If zeta is not 0/1 or its diagonal is not all ones.

    Examples
    --------
    >>> from kodag import Sequence, cobweb, zeta_closure, mobius_inverse
    >>> mu = mobius_inverse(zeta_closure(cobweb(Sequence.naturals(), 3)))
    >>> mu.values[0].tolist()
    [1, -1, -1, 1, 1, 1]

    """
    check_type(zeta, IncidenceMatrix)
    if not zeta.is_binary:
        raise DomainError('Zeta must be a 0/1 matrix')

    return zeta.inverse()


def mobius_recurrence(p):
    """Moebius matrix by mu(x, x) = 1 and mu(x, y) = -sum of mu(x, z) over x <= z < y.

    The recurrence runs over the explicit order relation, one level of y at a time.
    """
    check_type(p, GradedPoset)
    comparable = zeta_closure(p).values.astype(bool)
    offsets = p.offsets
    total = len(p)

    mu = np.zeros((total, total), dtype=object)
    for x in range(total):
        row = np.zeros(total, dtype=object)
        row[x] = 1
        start_level = int(np.searchsorted(offsets, x, side='right'))
        for level in range(start_level, p.levels):
            low, high = offsets[level], offsets[level + 1]
            interval_sums = row[x:low].dot(comparable[x:low, low:high].astype(object))
            row[low:high] = np.where(comparable[x, low:high], -interval_sums, 0)
        mu[x] = row

    return IncidenceMatrix(p.sizes, mu)


def _kroton_product(seq, r, s):
    value = 1
    for i in range(r + 1, s):
        value *= seq.term(i) - 1

    return value


def _check_level_pair(r, s):
    r = check_int(r, 'r', minimum=1)
    s = check_int(s, 's')
    if s <= r:
        raise DomainError('Kroton functions need s > r, got r={}, s={}'.format(r, s))

    return r, s


def kroton(seq, r, s):
    """Kroton value K_s(r_F), the product of (i_F - 1) for r < i < s (empty product 1).

    Examples
    --------
    >>> from kodag import Sequence, kroton
    >>> kroton(Sequence.naturals(), 1, 5)
    KrotonValue(r=1, s=5, value=6)
    >>> kroton(Sequence.fibonacci(with_root=True), 3, 7).value
    8

    """
    check_type(seq, Sequence)
    r, s = _check_level_pair(r, s)

    return KrotonValue(r, s, _kroton_product(seq, r, s))


def kroton_recurrence(seq, r, s):
    """K_s(r_F) from K_{r+1}(r_F) = 1 and K_{t+1}(r_F) = K_t(r_F) * (t_F - 1)."""
    r, s = _check_level_pair(r, s)

    value = 1
    for t in range(r + 1, s):
        value = value * (seq.term(t) - 1)

    return value


def _alternating(seq, r, s, weighted):
    values = {r: 1}
    for t in range(r + 1, s + 1):
        total = 0
        for i in range(r, t):
            weight = seq.term(i) if weighted and i > r else 1
            total += (-1) ** (t - i) * weight * values[i]
        values[t] = -total

    return values[s]


def kroton_alternating(seq, r, s):
    """K_{r,s} = -sum over r <= i < s of (-1)^(s-i) w_i K_{r,i}, with K_{r,r} = 1.

    The weight w_i counts the level-i nodes of an interval starting on level r: 1 for i = r and
    i_F above it. This is the level form of mu * zeta = delta on cobwebs.
    """
    r, s = _check_level_pair(r, s)

    return _alternating(seq, r, s, weighted=True)


def kroton_alternating_literal(seq, r, s):
    """Unweighted alternating sum with K_{r,r} = 1; does not match K_s(r_F) in general."""
    r, s = _check_level_pair(r, s)

    return _alternating(seq, r, s, weighted=False)


def kroton_variants(seq, r, s):
    """Canonical Kroton value next to the rising-factorial and r+2..s index forms."""
    r, s = _check_level_pair(r, s)
    rising = 1
    for i in range(r + 1, s + 1):
        rising *= seq.term(i) - 1
    shifted = 1
    for i in range(r + 2, s + 1):
        shifted *= seq.term(i) - 1

    return KrotonVariants(r, s, _kroton_product(seq, r, s), rising, shifted)


def coding_matrix(seq, n):
    """Coding matrix c_{r,s} = [r = s] + [s > r] (-1)^(s-r) K_s(r_F) of the first n levels.

    Examples
    --------
    >>> from kodag import Sequence, coding_matrix
    >>> coding_matrix(Sequence.naturals(), 6).row(1)
    [1, -1, 1, -2, 6, -24]

    """
    check_type(seq, Sequence)
    n = check_int(n, 'n', minimum=1)

    c = np.zeros((n, n), dtype=object)
    for r in range(1, n + 1):
        c[r - 1, r - 1] = 1
        for s in range(r + 1, n + 1):
            c[r - 1, s - 1] = (-1) ** (s - r) * _kroton_product(seq, r, s)

    return CodingMatrix(c)


def first_mismatch(actual, expected):
    """First entry in row-major order where two matrices over the same levels differ, or None."""
    differing = np.argwhere(actual.values != expected.values)
    if len(differing) == 0:
        return None

    row, col = (int(index) for index in differing[0])
    levels = np.searchsorted(expected.offsets, [row, col], side='right')

    return Mismatch(row + 1, col + 1, (int(levels[0]), int(levels[1])),
                    expected.values[row, col], actual.values[row, col])


def mobius_closed_form(p, mode='strict'):
    """Candidate Moebius matrix with block (r, s) = c_{r,s} on every pair joined by a chain and 0 elsewhere.

    Parameters
    ----------
    p : GradedPoset
    mode : {'strict', 'conjecture'}, optional
        'strict' accepts cobweb posets only; 'conjecture' accepts any poset and reports the
        first disagreement with exact inversion.

    Returns
    -------
    ClosedFormResult

    Raises
    ------
    PreconditionError
        In strict mode on a non-cobweb poset.

    """
    check_type(p, GradedPoset)
    if mode not in ('strict', 'conjecture'):
        raise ValueError('Unknown mode {!r}; expected strict or conjecture'.format(mode))
    if mode == 'strict' and not p.is_cobweb:
        raise PreconditionError('Strict closed form is only stated for cobweb posets; use conjecture mode')

    coding = coding_matrix(Sequence.explicit(list(p.sizes)), p.levels)
    entries = object_identity(len(p))
    offsets = p.offsets
    for r in range(1, p.levels):
        for s in range(r + 1, p.levels + 1):
            reachable = (block_product(p, r, s) != 0).astype(int).astype(object)
            entries[offsets[r - 1]:offsets[r], offsets[s - 1]:offsets[s]] = coding.entry(r, s) * reachable
    candidate = IncidenceMatrix(p.sizes, entries)

    mismatch = first_mismatch(candidate, mobius_inverse(zeta_closure(p)))
    if mismatch is not None:
        log.debug('closed form disagrees with inversion at (%d, %d), block %s: exact %d, candidate %d',
                  mismatch.row, mismatch.col, mismatch.block, mismatch.expected, mismatch.actual)

    return ClosedFormResult(candidate, mismatch is None, mismatch)


def _check_grid_node(seq, node):
    level = check_int(node[0], 'level')
    pos = check_int(node[1], 'pos')
    if level < 1:
        raise DomainError('Level must be >= 1, got {}'.format(level))
    size = seq.term(level)
    if not 1 <= pos <= size:
        raise DomainError('Position must be in [1, {}] on level {}, got {}'.format(size, level, pos))

    return NodeRef(level, pos)


def krot_mobius(seq, x, y, form='bracket'):
    """Cobweb Moebius function in grid coordinates.

    mu(<s,t>, <u,v>) = delta(s,u) delta(t,v) - delta(t+1,v) + [t+1 < v] (-1)^(v-t) prod_{i=t+1}^{v-1} (i_F - 1)

    Parameters
    ----------
    seq : Sequence
    x : NodeRef or tuple
        (level t, position s).
    y : NodeRef or tuple
        (level v, position u).
    form : {'bracket', 'sum'}, optional
        'sum' spells the last term as a sum over k >= 2 of delta(t+k, v) (-1)^k times the product.

    Returns
    -------
    int

    Examples
    --------
    >>> from kodag import Sequence, krot_mobius
    >>> krot_mobius(Sequence.naturals(), (1, 1), (4, 3))
    -2

    """
    check_type(seq, Sequence)
    t, s = _check_grid_node(seq, x)
    v, u = _check_grid_node(seq, y)

    value = int(s == u and t == v) - int(t + 1 == v)
    if form == 'bracket':
        if t + 1 < v:
            value += (-1) ** (v - t) * _kroton_product(seq, t, v)
    elif form == 'sum':
        for k in range(2, v - t + 1):
            value += int(t + k == v) * (-1) ** k * _kroton_product(seq, t, v)
    else:
        raise ValueError('Unknown form {!r}; expected bracket or sum'.format(form))

    return value


def krot_mobius_matrix(seq, n, form='bracket'):
    """Full grid scan of `krot_mobius` over the first n levels, laid out by linear labels."""
    sizes = _cobweb_sizes(seq, n)
    nodes = [NodeRef(level, pos) for level, size in enumerate(sizes, 1) for pos in range(1, size + 1)]

    entries = np.zeros((len(nodes), len(nodes)), dtype=object)
    for i, x in enumerate(nodes):
        for j in range(i, len(nodes)):
            entries[i, j] = krot_mobius(seq, x, nodes[j], form)

    return IncidenceMatrix(sizes, entries)


def eta(p):
    """Reflexive cover matrix kappa + delta."""
    return cover_matrix(p) + IncidenceMatrix.identity(p.sizes)


def eta_inverse(p):
    """Inverse of eta as the finite series sum of (-kappa)^k."""
    check_type(p, GradedPoset)
    negated = -cover_matrix(p)

    power = IncidenceMatrix.identity(p.sizes)
    total = power
    for _ in range(p.levels - 1):
        power = power @ negated
        total = total + power

    return total


def max_matrix(p):
    """[Max] = (I - kappa)^-1 = sum of kappa^k over the integers.

    Entry (x, y) counts the maximal chains of the interval [x, y].

    Examples
    --------
    >>> from kodag import Sequence, cobweb, max_matrix
    >>> m = max_matrix(cobweb(Sequence.naturals(), 4))
    >>> m.block(1, 4).tolist()
    [[6, 6, 6, 6]]

    """
    check_type(p, GradedPoset)
    kappa = cover_matrix(p)

    power = IncidenceMatrix.identity(p.sizes)
    total = power
    for _ in range(p.levels - 1):
        power = power @ kappa
        total = total + power

    return total


def max_inverse(p):
    """[Max]^-1 = delta - kappa."""
    return IncidenceMatrix.identity(p.sizes) - cover_matrix(p)


def l_logic(m):
    """Entrywise indicator of positive entries.

    Raises
    ------
    DomainError
        On a negative entry.

    """
    check_type(m, IncidenceMatrix)
    negative = np.argwhere(m.values < 0)
    if len(negative) > 0:
        row, col = negative[0]
        raise DomainError('L-Logic is defined on nonnegative matrices; entry ({}, {}) is {}'
                          .format(row + 1, col + 1, m.values[row, col]))

    return IncidenceMatrix(m.sizes, (m.values > 0).astype(np.int64))


def validate_block_structure(m):
    """Check zeros below the block diagonal and diagonal diagonal-blocks.

    Returns
    -------
    BlockReport
        With the first offending 1-based (row, col) in row-major order.

    """
    check_type(m, IncidenceMatrix)
    levels, _ = _grid_vectors(m.sizes)
    total = len(m)
    rows, cols = np.arange(total)[:, None], np.arange(total)[None, :]

    below = levels[None, :] < levels[:, None]
    inside = (levels[None, :] == levels[:, None]) & (rows != cols)
    offending = np.argwhere((m.values != 0) & (below | inside))
    if len(offending) == 0:
        return BlockReport(True, None, None)

    row, col = (int(index) for index in offending[0])
    reason = 'below block diagonal' if below[row, col] else 'off-diagonal inside diagonal block'

    return BlockReport(False, (row + 1, col + 1), reason)
