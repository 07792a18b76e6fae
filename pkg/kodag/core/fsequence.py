import logging
import re
from collections import namedtuple
from fractions import Fraction

import numpy as np
from tabulate import tabulate

from ..config import MAX_SEED
from .errors import DomainError, SequenceParseError
from .utils import check_in_range, check_int, check_type

log = logging.getLogger(__name__)

_KINDS = ('naturals', 'fibonacci', 'gaussian', 'constant', 'explicit')
_ROOT_SUFFIX = '+root'
_DECIMAL = re.compile(r'[0-9]+')

AdmissibilityReport = namedtuple('AdmissibilityReport', ['admissible', 'first_violation'])


class Sequence(object):
    """Positive level sizes k_F of an F-denominated poset.

    Levels are 1-based. With `with_root` an extra level of size 1 is put before level 1, shifting
    the underlying sequence up by one.

    Attributes
    ----------
    kind
    param
    with_root
    spec

    Examples
    --------
    >>> from kodag import Sequence
    >>> Sequence.fibonacci().terms(7)
    [1, 1, 2, 3, 5, 8, 13]
    >>> Sequence.fibonacci(with_root=True).terms(7)
    [1, 1, 1, 2, 3, 5, 8]
    >>> Sequence.gaussian(2).term(4)
    15
    >>> Sequence.explicit([1, 3, 2])
    Sequence(spec=list:1,3,2)

    """
    def __init__(self, kind, param=None, with_root=False):
        """Initialize a Sequence.

        Parameters
        ----------
        kind : {'naturals', 'fibonacci', 'gaussian', 'constant', 'explicit'}
        param : int or list of int, optional
            q for gaussian, c for constant, the terms for explicit.
        with_root : bool, optional
            Prepend a level of size 1.

        """
        if kind not in _KINDS:
            raise ValueError('Unknown sequence kind {!r}; expected one of {}'.format(kind, _KINDS))

        if kind == 'gaussian':
            param = check_int(param, 'q', minimum=2)
        elif kind == 'constant':
            param = check_int(param, 'c', minimum=1)
        elif kind == 'explicit':
            check_type(param, (list, tuple))
            if len(param) == 0:
                raise DomainError('Explicit sequences must be nonempty')
            param = tuple(check_int(value, 'term', minimum=1) for value in param)
        else:
            param = None

        self._kind = kind
        self._param = param
        self._with_root = bool(with_root)

    @classmethod
    def naturals(cls, with_root=False):
        return cls('naturals', with_root=with_root)

    @classmethod
    def fibonacci(cls, with_root=False):
        return cls('fibonacci', with_root=with_root)

    @classmethod
    def gaussian(cls, q, with_root=False):
        return cls('gaussian', q, with_root=with_root)

    @classmethod
    def constant(cls, c, with_root=False):
        return cls('constant', c, with_root=with_root)

    @classmethod
    def explicit(cls, values, with_root=False):
        return cls('explicit', values, with_root=with_root)

    @property
    def kind(self):
        return self._kind

    @property
    def param(self):
        return self._param

    @property
    def with_root(self):
        return self._with_root

    @property
    def length(self):
        """Number of defined terms, None when unbounded."""
        if self._kind != 'explicit':
            return None

        return len(self._param) + int(self._with_root)

    @property
    def spec(self):
        """Canonical spec string, the inverse of `parse_sequence`."""
        if self._kind == 'naturals':
            text = 'nat'
        elif self._kind == 'fibonacci':
            text = 'fib'
        elif self._kind == 'gaussian':
            text = 'gauss:{}'.format(self._param)
        elif self._kind == 'constant':
            text = 'const:{}'.format(self._param)
        else:
            text = 'list:' + ','.join(str(value) for value in self._param)

        return text + _ROOT_SUFFIX if self._with_root else text

    def _base_term(self, k):
        if self._kind == 'naturals':
            return k
        elif self._kind == 'fibonacci':
            previous, current = 0, 1
            for _ in range(k - 1):
                previous, current = current, previous + current
            return current
        elif self._kind == 'gaussian':
            q = self._param
            return (q ** k - 1) // (q - 1)
        elif self._kind == 'constant':
            return self._param
        else:
            if k > len(self._param):
                raise DomainError('Explicit sequence {} has no term {}'.format(self.spec, k))
            return self._param[k - 1]

    def term(self, k):
        """Size k_F of level k.

        Parameters
        ----------
        k : int
            Level index, at least 1.

        Returns
        -------
        int

        """
        k = check_int(k, 'k', minimum=1)
        if self._with_root:
            return 1 if k == 1 else self._base_term(k - 1)

        return self._base_term(k)

    def terms(self, n):
        n = check_int(n, 'n', minimum=0)

        return [self.term(k) for k in range(1, n + 1)]

    def __eq__(self, other):
        if not isinstance(other, Sequence):
            return NotImplemented

        return (self._kind, self._param, self._with_root) == (other._kind, other._param, other._with_root)

    def __hash__(self):
        return hash((self._kind, self._param, self._with_root))

    def __repr__(self):
        return '{}(spec={})'.format(self.__class__.__name__, self.spec)

    def __str__(self):
        shown = 10 if self.length is None else min(10, self.length)
        header = ['k'] + list(range(1, shown + 1))
        row = ['k_F'] + self.terms(shown)

        return tabulate([header, row], tablefmt='plain')


class FNomialValue(Fraction):
    """Exact F-nomial coefficient, stored as a reduced fraction.

    Examples
    --------
    >>> from kodag import FNomialValue
    >>> value = FNomialValue(12, 2)
    >>> value
    FNomialValue(6, 1)
    >>> value.is_integral
    True

    """
    __slots__ = ()

    @property
    def is_integral(self):
        return self.denominator == 1


def term(seq, k):
    return seq.term(k)


def cumulative(seq, k):
    """S(k), the number of nodes on levels 1..k; S(0) = 0."""
    k = check_int(k, 'k', minimum=0)

    return sum(seq.terms(k))


def ffactorial(seq, n):
    """F-factorial n_F! = 1_F * 2_F * ... * n_F, with 0_F! = 1.

    Examples
    --------
    >>> from kodag import Sequence, ffactorial
    >>> ffactorial(Sequence.fibonacci(), 5)
    30

    """
    n = check_int(n, 'n', minimum=0)

    result = 1
    for value in seq.terms(n):
        result *= value

    return result


def falling(seq, n, k):
    """Falling F-factorial n_F * (n-1)_F * ... * (n-k+1)_F.

    Parameters
    ----------
    seq : Sequence
    n : int
    k : int
        Number of factors; 0 <= k <= n.

    Returns
    -------
    int

    """
    n = check_int(n, 'n', minimum=0)
    k = check_int(k, 'k', minimum=0)
    if k > n:
        raise DomainError('Falling factorial needs k <= n, got n={}, k={}'.format(n, k))

    result = 1
    for index in range(n - k + 1, n + 1):
        result *= seq.term(index)

    return result


def fnomial(seq, n, k):
    """F-nomial coefficient n_F^(k falling) / k_F! as an exact reduced fraction.

    Parameters
    ----------
    seq : Sequence
    n : int
    k : int
        0 <= k <= n.

    Returns
    -------
    FNomialValue

    Examples
    --------
    >>> from kodag import Sequence, fnomial
    >>> fnomial(Sequence.fibonacci(), 4, 2)
    FNomialValue(6, 1)
    >>> fnomial(Sequence.gaussian(2), 4, 2)
    FNomialValue(35, 1)

    """
    n = check_int(n, 'n', minimum=0)
    k = check_int(k, 'k')
    if k < 0 or k > n:
        raise DomainError('F-nomial needs 0 <= k <= n, got n={}, k={}'.format(n, k))

    return FNomialValue(falling(seq, n, k), ffactorial(seq, k))


def is_admissible(seq, n_max):
    """Check integrality of every F-nomial with 0 <= k <= n <= n_max.

    Returns
    -------
    AdmissibilityReport
        The first violation is the lexicographically smallest (n, k), or None.

    """
    n_max = check_int(n_max, 'n_max', minimum=0)

    for n in range(n_max + 1):
        for k in range(n + 1):
            if not fnomial(seq, n, k).is_integral:
                log.debug('%s is not admissible: fnomial(%d, %d) is fractional', seq.spec, n, k)
                return AdmissibilityReport(False, (n, k))

    return AdmissibilityReport(True, None)


def pascal_binomial(n, k):
    """Classical binomial coefficient by additive Pascal recursion."""
    n = check_int(n, 'n', minimum=0)
    k = check_int(k, 'k')
    if k < 0 or k > n:
        return 0

    row = [1]
    for _ in range(n):
        row = [1] + [left + right for left, right in zip(row, row[1:])] + [1]

    return row[k]


def _parse_decimal(token, name, minimum):
    if _DECIMAL.fullmatch(token) is None:
        raise SequenceParseError(token, '{} must be a decimal integer'.format(name))

    value = int(token)
    if value < minimum:
        raise SequenceParseError(token, '{} must be >= {}'.format(name, minimum))

    return value


def parse_sequence(spec):
    """Parse a sequence spec string.

    Accepted forms are ``nat``, ``fib``, ``gauss:Q`` (Q >= 2), ``const:C`` (C >= 1) and
    ``list:a,b,...`` (all >= 1), each optionally followed by ``+root``. Parsing is case-sensitive.

    Parameters
    ----------
    spec : str

    Returns
    -------
    Sequence

    Raises
    ------
    SequenceParseError
        Naming the offending token.

    Examples
    --------
    >>> from kodag import parse_sequence
    >>> parse_sequence('fib+root').terms(4)
    [1, 1, 1, 2]
    >>> parse_sequence('list:1,3,3').spec
    'list:1,3,3'

    """
    check_type(spec, str)

    with_root = spec.endswith(_ROOT_SUFFIX)
    body = spec[:-len(_ROOT_SUFFIX)] if with_root else spec

    if body == 'nat':
        return Sequence.naturals(with_root)
    elif body == 'fib':
        return Sequence.fibonacci(with_root)

    kind, separator, argument = body.partition(':')
    if separator == '':
        raise SequenceParseError(body, 'unknown sequence kind')

    if kind == 'gauss':
        return Sequence.gaussian(_parse_decimal(argument, 'q', 2), with_root)
    elif kind == 'const':
        return Sequence.constant(_parse_decimal(argument, 'c', 1), with_root)
    elif kind == 'list':
        if argument == '':
            raise SequenceParseError(argument, 'explicit lists must be nonempty')
        values = [_parse_decimal(token, 'term', 1) for token in argument.split(',')]
        return Sequence.explicit(values, with_root)
    else:
        raise SequenceParseError(kind, 'unknown sequence kind')


def random_explicit_sequences(count, length, low=1, high=6, seed=0):
    """Seeded explicit sequences with terms drawn uniformly from [low, high]."""
    seed = check_in_range(seed, 'seed', 0, MAX_SEED)
    rng = np.random.RandomState(seed)

    return [Sequence.explicit(rng.randint(low, high + 1, size=length).tolist()) for _ in range(count)]
