import sys
import time
from functools import wraps

from kodag import cobweb, parse_sequence
from kodag.config import FIXTURE_SEQUENCES


def generate_posets(levels=8):
    print('Generating cobweb posets with {} levels...'.format(levels))

    posets = [(spec, cobweb(parse_sequence(spec), levels)) for spec in FIXTURE_SEQUENCES]
    for spec, p in posets:
        print('{}: {} nodes'.format(spec, len(p)))

    return posets


# decorator to time a function
def timer(runs=5, file=sys.stdout):
    def function_timer(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            return_values = []
            runtimes = []
            for _ in range(runs):
                start = time.perf_counter()
                return_value = func(*args, **kwargs)
                runtimes.append(time.perf_counter() - start)
                return_values.append(return_value)

            print('{func}: {time:.8f} seconds'.format(func=func.__name__, time=sum(runtimes) / runs), file=file)

            return return_values
        return wrapper
    return function_timer


def benchmark(name, operation, args, runs=5, file=sys.stdout):
    assert runs > 0

    print('Running benchmark on: {}'.format(name))
    print('Averaging over {} runs'.format(runs))

    def run():
        return operation(*args)
    run.__name__ = name

    return timer(runs=runs, file=file)(run)()
