import numpy as np
import pytest

from condmds.datasets import load_kinship


@pytest.fixture(scope="session")
def kinship():
    return load_kinship()


def random_dissimilarity(rng, n):
    """Symmetric nonnegative matrix with zero diagonal (not necessarily metric)."""
    d = np.abs(rng.normal(size=(n, n))) + 0.1
    d = d + d.T
    np.fill_diagonal(d, 0.0)
    return d


def random_weights(rng, n):
    w = rng.uniform(0.0, 1.0, size=(n, n))
    w = (w + w.T) / 2
    np.fill_diagonal(w, 0.0)
    return w


def metric_dissimilarity(rng, n, dim=3):
    """Euclidean distance matrix of random points: always a metric."""
    pts = rng.normal(size=(n, dim))
    diff = pts[:, None, :] - pts[None, :, :]
    return np.sqrt((diff**2).sum(-1))
