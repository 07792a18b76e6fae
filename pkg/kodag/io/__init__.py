from .csv import matrix_to_csv, read_matrix_csv
from .json import Fixture, chain_count_dict, dumps_canonical, matrix_from_dict, poset_from_dict, read_fixture, \
    read_matrix, read_poset, to_dict, write_matrix, write_poset
