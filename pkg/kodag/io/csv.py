from pandas import DataFrame as pd_DataFrame
from pandas import read_csv as pd_read_csv
from pandas.errors import EmptyDataError, ParserError

from ..core.errors import DocumentError, DomainError
from ..core.matrix import IncidenceMatrix


def matrix_to_csv(m, filepath=None, sep=','):
    """Save an IncidenceMatrix as dense decimal CSV, one row per line.

    Entries are written as decimal strings so integers beyond 64 bits survive pandas.

    Parameters
    ----------
    m : IncidenceMatrix
    filepath : str, optional
        When None, the CSV text is returned instead.
    sep : str, optional

    Returns
    -------
    str or None

    See Also
    --------
    pandas.DataFrame.to_csv : https://pandas.pydata.org/pandas-docs/stable/generated/pandas.DataFrame.to_csv.html

    """
    pd_df = pd_DataFrame([[str(value) for value in row] for row in m.values.tolist()])

    return pd_df.to_csv(filepath, sep=sep, header=False, index=False)


def read_matrix_csv(filepath, sizes, sep=','):
    """Read a dense decimal CSV written by `matrix_to_csv`.

    Parameters
    ----------
    filepath : str
    sizes : list of int
        Level sizes of the matrix; CSV carries no block structure.
    sep : str, optional

    Returns
    -------
    IncidenceMatrix

    Raises
    ------
    DocumentError
        If the file is empty, ragged or holds non-integer cells.

    """
    try:
        pd_df = pd_read_csv(filepath, sep=sep, header=None, dtype=str)
    except (EmptyDataError, ParserError) as error:
        raise DocumentError('Cannot parse matrix CSV {}: {}'.format(filepath, error))
    except OSError as error:
        raise DocumentError('Cannot read {}: {}'.format(filepath, error.strerror))

    if pd_df.isnull().values.any():
        raise DocumentError('Matrix CSV {} has missing cells'.format(filepath))

    try:
        entries = [[int(cell) for cell in row] for row in pd_df.values.tolist()]
        return IncidenceMatrix(sizes, entries)
    except (DomainError, ValueError) as error:
        raise DocumentError('Invalid matrix CSV {}: {}'.format(filepath, error))
