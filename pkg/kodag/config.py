from fractions import Fraction

import tabulate

# matrices and staircases are rendered with significant leading blanks
tabulate.PRESERVE_WHITESPACE = True

ENUMERATION_CAP = 10 ** 6
VERIFY_ENUMERATION_CAP = 10 ** 4

DEFAULT_SEED = 0
MAX_SEED = 2 ** 32 - 1
DEFAULT_DENSITY = Fraction(1)
DEFAULT_FORMAT = 'json'
LASCALA_FORMAT = 'ascii'

FIXTURE_SEQUENCES = ('nat', 'fib', 'fib+root', 'gauss:2', 'const:3')

RANDOM_DENSITIES = (Fraction(2, 5), Fraction(7, 10), Fraction(1))
RANDOM_MAX_LEVELS = 6
RANDOM_MAX_SIZE = 5

# brute-force chain counting is only run below these bounds
ORACLE_MAX_LEVELS = 6
ORACLE_MAX_SIZE = 4

KROTON_MAX_LEVEL = 12
THEOREM_MAX_LEVEL = 7
ORACLE_RANDOM_COUNT = 50

EXIT_OK = 0
EXIT_VERIFY_FAILURE = 1
EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_CONJECTURE_MISMATCH = 4
EXIT_CAP = 5

LOG_FORMAT = '%(asctime)s %(name)s %(levelname)s: %(message)s'
