# Acceptance scale: every fixture cobweb up to the level where gauss:2 has a few hundred nodes,
# and the verification suites with their default bounds.
import io

import pandas as pd
from tabulate import tabulate

from benchmarks.utils import benchmark, generate_posets
from kodag import max_matrix, mobius_inverse, mobius_recurrence, zeta_closure
from kodag.verify import SUITES, run_suite

operations = [
    ('closure', lambda p: zeta_closure(p)),
    ('inversion', lambda p: mobius_inverse(zeta_closure(p))),
    ('recurrence', lambda p: mobius_recurrence(p)),
    ('max', lambda p: max_matrix(p))
]


def _parse(output):
    df = pd.DataFrame(output.split('\n'), columns=['output'])
    df[['op', 'time']] = df['output'].str.rsplit(':', n=1, expand=True)
    df = df.drop('output', axis=1).dropna()
    df['time'] = df['time'].map(lambda x: x.split()[0]).astype(float)

    return df


def run_matrix_benchmarks(levels=8, runs=3):
    output_file = io.StringIO()
    for spec, p in generate_posets(levels):
        for name, operation in operations:
            benchmark('{} {}'.format(spec, name), operation, (p,), runs, output_file)

    return _parse(output_file.getvalue())


def run_suite_benchmarks(runs=1):
    output_file = io.StringIO()
    for suite in SUITES[1:]:
        benchmark(suite, lambda name: list(run_suite(name, random_count=20, seed=1)), (suite,), runs, output_file)

    return _parse(output_file.getvalue())


if __name__ == '__main__':
    for df in (run_matrix_benchmarks(), run_suite_benchmarks()):
        print(tabulate(df, headers=['operation', 'seconds'], showindex=False))
