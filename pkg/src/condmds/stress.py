"""Objective-function machinery for conditional multidimensional scaling.

The embedding being optimized is the pair (U, B): U holds the unknown
coordinates of each point, and the square matrix B rescales the known
auxiliary coordinates V so that both contribute to the fitted distance

    d_ij(U, B)^2 = ||u_i - u_j||^2 + ||B^T (v_i - v_j)||^2.

Conditional stress is the weighted squared misfit between those distances
and the input dissimilarities, summed over unordered pairs. This module
builds the two fixed quadratic operators (the weight Laplacian H and its
auxiliary projection G = V^T H V), the per-iterate coefficient matrix used
by the Guttman transform, and the majorizing surrogate that the optimizer
descends.
"""

import enum
from dataclasses import dataclass

import numpy as np

from condmds.linalg import pseudo_inverse

__all__ = [
    "DissimilarityTransform",
    "Operators",
    "StressDecomposition",
    "weight_laplacian",
    "auxiliary_gram",
    "build_operators",
    "is_uniform_weights",
    "conditional_distance",
    "joint_distance_matrix",
    "conditional_stress",
    "stress_from_distances",
    "stress_decomposition",
    "guttman_coefficients",
    "majorizer_value",
]


class DissimilarityTransform(enum.Enum):
    """Transform applied to dissimilarities before fitting.

    Only the identity is supported; the enum exists so a non-metric variant
    has a seam to land in without changing call signatures.
    """

    IDENTITY = "identity"


def weight_laplacian(weights):
    """Graph Laplacian H of the weight matrix.

    Off-diagonal entries are -w_ij, the diagonal holds each row's weight sum,
    so every row of H sums to zero and H is positive semidefinite.
    """
    w = np.asarray(weights, dtype=float)
    h = -w.copy()
    np.fill_diagonal(h, 0.0)
    np.fill_diagonal(h, -h.sum(axis=1))
    return h


def auxiliary_gram(aux, lap):
    """Quadratic form G = V^T H V of the auxiliary coordinates (q x q, PSD).

    Accumulated pair by pair as sum_{i<j} w_ij (v_i - v_j)(v_i - v_j)^T,
    which is algebraically identical to the matrix product but stays
    exactly zero for a constant auxiliary column; the product form leaves
    rounding noise there, and a relative pseudoinverse cutoff would then
    invert that noise. A zero row/column marks a column that cannot absorb
    any part of the dissimilarities.
    """
    v = np.asarray(aux, dtype=float)
    w = -np.asarray(lap, dtype=float).copy()
    np.fill_diagonal(w, 0.0)
    iu, ju = np.triu_indices(v.shape[0], k=1)
    diff = v[iu] - v[ju]
    return np.einsum("p,pk,pl->kl", w[iu, ju], diff, diff)


def is_uniform_weights(weights):
    """True when every off-diagonal weight equals exactly 1."""
    w = np.asarray(weights)
    mask = ~np.eye(w.shape[0], dtype=bool)
    return bool(np.all(w[mask] == 1.0))


@dataclass(frozen=True)
class Operators:
    """Fixed per-problem matrices precomputed before iterating.

    ``g_plus_vt`` is G^+ V^T, so the transform update is a single chain of
    matrix products. ``uniform`` marks the all-ones weight fast path, where
    the embedding update divides by N instead of multiplying by H^+.
    """

    h: np.ndarray
    h_plus: np.ndarray
    g: np.ndarray
    g_plus_vt: np.ndarray
    uniform: bool

    @property
    def n(self):
        return self.h.shape[0]


def build_operators(weights, aux, uniform=None, rcond=1e-12):
    """Assemble the Operators bundle for a weight matrix and auxiliary V.

    When ``uniform`` is None the all-ones fast path is auto-detected. On the
    fast path H^+ has the closed form (centering matrix) / N, so no matrix
    is ever decomposed for the embedding update.
    """
    w = np.asarray(weights, dtype=float)
    v = np.asarray(aux, dtype=float)
    n = w.shape[0]
    if uniform is None:
        uniform = is_uniform_weights(w)
    h = weight_laplacian(w)
    if uniform:
        h_plus = (np.eye(n) - 1.0 / n) / n
    else:
        h_plus = pseudo_inverse(h, rcond=rcond)
    g = auxiliary_gram(v, h)
    g_plus_vt = pseudo_inverse(g, rcond=rcond) @ v.T
    return Operators(h=h, h_plus=h_plus, g=g, g_plus_vt=g_plus_vt, uniform=uniform)


def conditional_distance(u, b, aux, i, j):
    """Fitted distance between points i and j for the embedding (U, B)."""
    du = u[i] - u[j]
    dv = b.T @ (aux[i] - aux[j])
    return float(np.sqrt(np.sum(du * du) + np.sum(dv * dv)))


def joint_distance_matrix(u, b, aux):
    """All-pairs fitted distances of the embedding (U, B) as an N x N array.

    Squared distances are accumulated from explicit coordinate differences
    (not the Gram-matrix shortcut) so each entry matches the per-pair
    definition bit for bit.
    """
    u = np.asarray(u, dtype=float)
    vb = np.asarray(aux, dtype=float) @ b
    du = u[:, None, :] - u[None, :, :]
    dv = vb[:, None, :] - vb[None, :, :]
    sq = np.sum(du * du, axis=-1) + np.sum(dv * dv, axis=-1)
    return np.sqrt(sq)


def stress_from_distances(delta, weights, dists):
    """Stress of an already-evaluated distance matrix.

    Accumulation runs in row-major order over the upper triangle for
    reproducibility.
    """
    iu, ju = np.triu_indices(dists.shape[0], k=1)
    resid = delta[iu, ju] - dists[iu, ju]
    return float(np.sum(weights[iu, ju] * resid * resid))


def conditional_stress(delta, weights, u, b, aux,
                       transform=DissimilarityTransform.IDENTITY):
    """Conditional stress: sum over i<j of w_ij (delta_ij - d_ij(U, B))^2.

    Zero exactly when the fitted distances reproduce every dissimilarity
    carrying positive weight.
    """
    if transform is not DissimilarityTransform.IDENTITY:
        raise ValueError(f"unsupported dissimilarity transform: {transform}")
    return stress_from_distances(delta, weights, joint_distance_matrix(u, b, aux))


@dataclass(frozen=True)
class StressDecomposition:
    """The three terms of the expanded stress.

    eta_delta_sq is the data constant sum w d^2, eta_sq the fitted squared
    distances term, rho the cross term; total() recombines them and must
    agree with the direct stress sum.
    """

    eta_delta_sq: float
    eta_sq: float
    rho: float

    def total(self):
        return self.eta_delta_sq + self.eta_sq - 2.0 * self.rho


def stress_decomposition(delta, weights, u, b, aux):
    """Split the conditional stress into its constant, quadratic and cross terms."""
    d = joint_distance_matrix(u, b, aux)
    iu, ju = np.triu_indices(d.shape[0], k=1)
    w = weights[iu, ju]
    dd = delta[iu, ju]
    dij = d[iu, ju]
    return StressDecomposition(
        eta_delta_sq=float(np.sum(w * dd * dd)),
        eta_sq=float(np.sum(w * dij * dij)),
        rho=float(np.sum(w * dd * dij)),
    )


def guttman_coefficients(delta, weights, dists):
    """Coefficient matrix C of the Guttman transform, evaluated at an iterate.

    Off-diagonal: c_ij = -w_ij * delta_ij / d_ij for pairs at positive
    distance, 0 for coincident pairs. The diagonal is set to minus the
    off-diagonal row sum, so rows of C sum to zero like the Laplacian H;
    that zero-row-sum structure is what keeps C @ Z centered and makes the
    majorization step descend.

    Parameters
    ----------
    delta : (N, N) ndarray
        Input dissimilarities.
    weights : (N, N) ndarray
    dists : (N, N) ndarray
        Fitted distances d_ij at the current iterate.
    """
    with np.errstate(divide="ignore", invalid="ignore"):
        c = np.where(dists > 0, -weights * delta / np.where(dists > 0, dists, 1.0), 0.0)
    np.fill_diagonal(c, 0.0)
    np.fill_diagonal(c, -c.sum(axis=1))
    return c


def majorizer_value(delta, weights, u, b, anchor_u, anchor_b, aux):
    """Value of the quadratic surrogate at (U, B), anchored at (Z_u, Z_b).

    The surrogate
        eta_delta^2 + tr(U^T H U) + tr(B^T G B)
            - 2 tr(U^T C Z_u) - 2 tr(B^T V^T C V Z_b),
    with C evaluated at the anchor, upper-bounds the conditional stress by
    the Cauchy-Schwarz inequality and touches it when (U, B) equals the
    anchor. Minimizing it in closed form gives the update formulas used by
    the optimizer.
    """
    v = np.asarray(aux, dtype=float)
    h = weight_laplacian(weights)
    g = auxiliary_gram(v, h)
    anchor_d = joint_distance_matrix(anchor_u, anchor_b, v)
    c = guttman_coefficients(delta, weights, anchor_d)

    iu, ju = np.triu_indices(delta.shape[0], k=1)
    eta_delta_sq = float(np.sum(weights[iu, ju] * delta[iu, ju] ** 2))
    quad = float(np.trace(u.T @ h @ u) + np.trace(b.T @ g @ b))
    cross_u = float(np.trace(u.T @ c @ anchor_u))
    cross_b = float(np.trace(b.T @ v.T @ c @ v @ anchor_b))
    return eta_delta_sq + quad - 2.0 * cross_u - 2.0 * cross_b
