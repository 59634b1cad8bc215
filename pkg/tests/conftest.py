import numpy as np
import pytest

from fairlnc.dataset import Dataset


def blobs(n=200, separation=6.0, n_features=2, seed=0):
    """Two well separated Gaussian blobs; the label is the blob index."""
    rng = np.random.default_rng(seed)
    y = np.arange(n) % 2
    X = rng.normal(size=(n, n_features))
    X[:, 0] += (y - 0.5) * separation
    return X, y


def make_dataset(X, y, group=None, name="toy"):
    if group is None:
        group = (np.arange(len(y)) // 2) % 2
    return Dataset(X, y, group, name=name)


@pytest.fixture
def separable():
    return blobs()


CRITERIA = {}


@pytest.fixture
def criterion():
    """Record a pass/fail line for an acceptance criterion."""
    def record(number, ok, detail):
        CRITERIA[number] = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
        print(CRITERIA[number])
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for number in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[number])
