import numpy as np
import pytest

from kodag import GradedPoset, Sequence, cobweb


@pytest.fixture(scope='module')
def naturals():
    return Sequence.naturals()


@pytest.fixture(scope='module')
def fibonacci_root():
    return Sequence.fibonacci(with_root=True)


@pytest.fixture(scope='module')
def cobweb_naturals_4(naturals):
    return cobweb(naturals, 4)


@pytest.fixture(scope='module')
def cobweb_naturals_6(naturals):
    return cobweb(naturals, 6)


@pytest.fixture(scope='module')
def cobweb_fibonacci_root_7(fibonacci_root):
    return cobweb(fibonacci_root, 7)


# sizes [1, 2, 2] with an identity block on top: the smallest poset where the closed form breaks
@pytest.fixture(scope='module')
def counterexample():
    return GradedPoset([1, 2, 2], [np.ones((1, 2), dtype=np.int64), np.eye(2, dtype=np.int64)])


@pytest.fixture(scope='module')
def chain_with_mute():
    return GradedPoset([1, 2, 1], [[[1, 1]], [[1], [0]]])
