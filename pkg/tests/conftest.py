import random

import pytest
from hypothesis import strategies as st

from curventropy.sl2z import IDENTITY, S_MATRIX, T_MATRIX, Mat2Z, compose, inverse

GENERATORS = (S_MATRIX, T_MATRIX, inverse(T_MATRIX))


def word_matrix(letters) -> Mat2Z:
    A = IDENTITY
    for i in letters:
        A = compose(A, GENERATORS[i])
    return A


def random_matrix(rng: random.Random, max_len: int = 20) -> Mat2Z:
    return word_matrix(rng.randrange(3) for _ in range(rng.randint(0, max_len)))


def random_hyperbolic(rng: random.Random, max_len: int = 20, max_trace=None) -> Mat2Z:
    """Random word matrix with trace > 2 (and <= max_trace if given)."""
    while True:
        A = random_matrix(rng, max_len)
        if A.trace < -2:
            A = -A
        if A.trace > 2 and (max_trace is None or A.trace <= max_trace):
            return A


def naive_matmul(X, Y):
    """Independent 2x2 product on nested lists."""
    return [[sum(X[i][k] * Y[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


matrices = st.lists(st.integers(0, 2), max_size=25).map(word_matrix)
hyperbolic = matrices.filter(lambda A: abs(A.trace) > 2).map(lambda A: A if A.trace > 0 else -A)
type_m = st.integers(1, 5).flatmap(lambda n: st.lists(st.integers(1, 6), min_size=2 * n, max_size=2 * n)).map(tuple)


@pytest.fixture
def rng():
    return random.Random(20261015)


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
