"""Scikit-learn style estimators wrapping the functional optimizers.

Both estimators take a precomputed dissimilarity matrix as ``X`` and the
auxiliary conditioning coordinates as ``y``, mirroring how supervised
manifold learners in the ecosystem pass side information to ``fit``.
"""

import numpy as np
from sklearn.base import BaseEstimator

from condmds.exceptions import InputValidationError
from condmds.geodesic import cond_isomap
from condmds.smacof import cond_smacof

__all__ = ["ConditionalMDS", "ConditionalIsomap"]


class ConditionalMDS(BaseEstimator):
    """Conditional multidimensional scaling via majorization.

    Learns an embedding U (``embedding_``) and a conditioning transform B
    (``b_matrix_``) that jointly reproduce a dissimilarity matrix, with the
    known auxiliary coordinates absorbing their share of the structure.

    Parameters
    ----------
    n_components : int
        Embedding dimension.
    weights : str or array-like
        "uniform", "sammon", or an explicit symmetric weight matrix.
    gamma : float
        Minimum per-iteration stress improvement; smaller values iterate
        longer.
    max_iter : int
        Iteration cap per restart.
    random_state : int
        Seed for the random initial configuration.
    diag_b : bool
        Constrain B to a diagonal matrix (cheaper for large q).
    restarts : int
        Random restarts; the best final stress is kept.
    scale_aux : bool
        Rescale auxiliary columns internally for conditioning; reported B
        is in original units.

    Attributes
    ----------
    embedding_ : (N, n_components) ndarray
    b_matrix_ : (q, q) ndarray
    stress_ : float
    stress_trace_ : ndarray
    n_iter_ : int
    termination_ : str
    """

    def __init__(self, n_components=2, weights="uniform", gamma=1e-6,
                 max_iter=1000, random_state=42, diag_b=False, restarts=1,
                 scale_aux=False):
        self.n_components = n_components
        self.weights = weights
        self.gamma = gamma
        self.max_iter = max_iter
        self.random_state = random_state
        self.diag_b = diag_b
        self.restarts = restarts
        self.scale_aux = scale_aux

    def _fit_report(self, X, y):
        if y is None:
            raise InputValidationError(
                "auxiliary coordinates are required: pass the (N, q) matrix as y"
            )
        y = np.asarray(y, dtype=float)
        if y.ndim == 1:
            y = y[:, None]
        return cond_smacof(
            X, y, self.weights,
            n_components=self.n_components, gamma=self.gamma,
            max_iter=self.max_iter, seed=self.random_state,
            diag_b=self.diag_b, restarts=self.restarts,
            scale_aux=self.scale_aux,
        )

    def fit(self, X, y=None):
        """Fit to a precomputed (N, N) dissimilarity matrix X, conditioning on y."""
        report = self._fit_report(X, y)
        self._store(report)
        return self

    def fit_transform(self, X, y=None):
        """Fit and return the learned (N, n_components) embedding."""
        self.fit(X, y)
        return self.embedding_

    def _store(self, report):
        self.report_ = report
        self.embedding_ = report.embedding
        self.b_matrix_ = report.b_matrix
        self.stress_ = report.final_stress
        self.stress_trace_ = report.stress_trace
        self.n_iter_ = report.n_iter
        self.termination_ = report.termination


class ConditionalIsomap(ConditionalMDS):
    """Conditional ISOMAP: the conditional fit on geodesic graph distances.

    Dissimilarities are replaced by shortest-path distances over a
    k-nearest-neighbor (or epsilon-radius) graph before optimizing, so the
    embedding unrolls nonlinear manifolds.

    Additional parameters
    ---------------------
    n_neighbors : int or None
        k for the neighbor graph (exclusive with ``radius``).
    radius : float or None
        Epsilon threshold for the radius graph.
    mutual : bool
        Keep an edge only when both endpoints select each other.
    on_disconnect : str
        "error" raises on a disconnected graph, "largest" restricts the
        problem to the largest component (``kept_indices_`` records
        survivors).
    """

    def __init__(self, n_components=2, weights="uniform", gamma=1e-6,
                 max_iter=1000, random_state=42, diag_b=False, restarts=1,
                 scale_aux=False, n_neighbors=5, radius=None, mutual=False,
                 on_disconnect="error"):
        super().__init__(
            n_components=n_components, weights=weights, gamma=gamma,
            max_iter=max_iter, random_state=random_state, diag_b=diag_b,
            restarts=restarts, scale_aux=scale_aux,
        )
        self.n_neighbors = n_neighbors
        self.radius = radius
        self.mutual = mutual
        self.on_disconnect = on_disconnect

    def _fit_report(self, X, y):
        if y is None:
            raise InputValidationError(
                "auxiliary coordinates are required: pass the (N, q) matrix as y"
            )
        y = np.asarray(y, dtype=float)
        if y.ndim == 1:
            y = y[:, None]
        k = self.n_neighbors if self.radius is None else None
        return cond_isomap(
            X, y, self.weights,
            k=k, epsilon=self.radius, mutual=self.mutual,
            on_disconnect=self.on_disconnect,
            n_components=self.n_components, gamma=self.gamma,
            max_iter=self.max_iter, seed=self.random_state,
            diag_b=self.diag_b, restarts=self.restarts,
            scale_aux=self.scale_aux,
        )

    def fit(self, X, y=None):
        """Fit on geodesic distances derived from the dissimilarity matrix X."""
        report = self._fit_report(X, y)
        self._store(report)
        self.graph_distances_ = report.graph_distances
        self.kept_indices_ = report.kept_indices
        return self
