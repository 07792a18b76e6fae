from .errors import PreconditionError
from .incidence import zeta_closure
from .poset import GradedPoset
from .utils import check_int, check_type


def lascala_rows(zeta):
    """Glyph rows of an upper-triangular zeta: blank below the diagonal, '1' on it, '0' and '-' above it."""
    rows = []
    for x, row in enumerate(zeta.values.tolist()):
        glyphs = [' '] * x + ['1'] + ['-' if value else '0' for value in row[x + 1:]]
        rows.append(' '.join(glyphs))

    return rows


def render_lascala(p, width=None):
    """Staircase rendering of a cobweb zeta matrix.

    Each row of level s at position k shows a run of s_F - k zeros after its diagonal one; every
    later column is '-'.

    Parameters
    ----------
    p : GradedPoset
        Cobweb poset.
    width : int, optional
        Maximum number of characters per line. Rows left empty by the cut are dropped.

    Returns
    -------
    str

    Raises
    ------
    PreconditionError
        If p is not a cobweb poset.

    Examples
    --------
    >>> from kodag import Sequence, cobweb, render_lascala
    >>> print(render_lascala(cobweb(Sequence.naturals(), 3)))
    1 - - - - -
      1 0 - - -
        1 - - -
          1 0 0
            1 0
              1

    """
    check_type(p, GradedPoset)
    if not p.is_cobweb:
        raise PreconditionError('The staircase rendering needs a cobweb poset')

    rows = lascala_rows(zeta_closure(p))
    if width is not None:
        width = check_int(width, 'width', minimum=1)
        rows = [row[:width] for row in rows]

    return '\n'.join(row.rstrip() for row in rows if row.strip())
