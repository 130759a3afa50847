"""The conditional SMACOF optimizer.

Each iteration builds the Guttman coefficient matrix at the previous
iterate and applies the closed-form updates

    U <- H^+ C U_prev        (or C U_prev / N for all-ones weights)
    B <- G^+ V^T C V B_prev  (or the per-coordinate ratio when B is diagonal)

which jointly minimize the majorizing surrogate, so the stress trace is
non-increasing by construction. Iteration stops when the per-step stress
improvement drops to the threshold ``gamma`` or after ``max_iter`` steps.
"""

from dataclasses import dataclass, field

import numpy as np

from condmds.exceptions import InputValidationError
from condmds.stress import (
    build_operators,
    guttman_coefficients,
    joint_distance_matrix,
    stress_from_distances,
)
from condmds.validation import check_auxiliary, check_dissimilarity
from condmds.weights import resolve_weights

__all__ = [
    "FitReport",
    "initialize_embedding",
    "update_embedding",
    "update_transform",
    "update_transform_diag",
    "cond_smacof",
]


@dataclass
class FitReport:
    """Outcome of one conditional SMACOF run (best restart when several).

    ``stress_trace`` includes the stress of the initial configuration, so
    its length is ``n_iter + 1``. ``termination`` is "converged" when the
    improvement criterion fired, "max_iterations" otherwise. ``restart_stresses``
    lists (seed, final stress) for every restart that was run.
    """

    embedding: np.ndarray
    b_matrix: np.ndarray
    stress_trace: np.ndarray
    n_iter: int
    termination: str
    seed: int
    restart_stresses: list = field(default_factory=list)

    @property
    def final_stress(self):
        return float(self.stress_trace[-1])


def initialize_embedding(n, q, n_components, seed):
    """Starting point: B is the q x q identity, U is uniform on [-1, 1].

    Deterministic for a given seed.
    """
    rng = np.random.default_rng(seed)
    u0 = rng.uniform(-1.0, 1.0, size=(n, n_components))
    b0 = np.eye(q)
    return u0, b0


def update_embedding(ops, c, anchor_u):
    """Closed-form embedding update U = H^+ C Z_u.

    On the all-ones fast path this is C Z_u / N: the Laplacian pseudoinverse
    reduces to the centering matrix over N, and C Z_u is already centered
    because rows of C sum to zero, so no inversion is needed.
    """
    if ops.uniform:
        return (c @ anchor_u) / ops.n
    return ops.h_plus @ (c @ anchor_u)


def update_transform(ops, c, aux, anchor_b):
    """Closed-form transform update B = G^+ V^T C V Z_b.

    Directions in the null space of G (auxiliary combinations the weights
    cannot see) receive a zero update via the pseudoinverse.
    """
    return ops.g_plus_vt @ c @ (aux @ anchor_b)


def update_transform_diag(ops, c, aux, anchor_b):
    """Diagonal-constrained transform update b_i = (t_ii / g_ii) z_i.

    T = V^T C V; only its diagonal and the diagonal of G enter, so the cost
    is linear in q once T is formed. Coordinates with g_ii = 0 stay at zero
    (the cutoff is relative, matching the pseudoinverse used on the full
    path, so rounding noise in a degenerate g_ii does not blow up).
    """
    t_diag = np.einsum("ki,kl,li->i", aux, c, aux)
    g_diag = np.diagonal(ops.g)
    z = np.diagonal(anchor_b)
    cutoff = 1e-12 * max(float(g_diag.max(initial=0.0)), 0.0)
    valid = g_diag > cutoff
    b = np.where(valid, t_diag / np.where(valid, g_diag, 1.0) * z, 0.0)
    return np.diag(b)


def _single_fit(delta, aux, w, n_components, gamma, max_iter, seed, diag_b, ops):
    u, b = initialize_embedding(delta.shape[0], aux.shape[1], n_components, seed)
    dists = joint_distance_matrix(u, b, aux)
    trace = [stress_from_distances(delta, w, dists)]
    termination = "max_iterations"
    for _ in range(max_iter):
        c = guttman_coefficients(delta, w, dists)
        u = update_embedding(ops, c, u)
        if diag_b:
            b = update_transform_diag(ops, c, aux, b)
        else:
            b = update_transform(ops, c, aux, b)
        dists = joint_distance_matrix(u, b, aux)
        trace.append(stress_from_distances(delta, w, dists))
        if trace[-2] - trace[-1] <= gamma:
            termination = "converged"
            break
    return u, b, np.asarray(trace), termination


def cond_smacof(delta, aux, weights="uniform", *, n_components=2, gamma=1e-6,
                max_iter=1000, seed=42, diag_b=False, restarts=1,
                uniform_fast_path=None, scale_aux=False, allow_zero_weights=False,
                validate=True):
    """Fit a conditional MDS embedding by majorization.

    Parameters
    ----------
    delta : (N, N) array_like
        Symmetric nonnegative dissimilarities with zero diagonal.
    aux : (N, q) array_like
        Known auxiliary coordinates to condition on.
    weights : str or (N, N) array_like
        "uniform", "sammon", or an explicit weight matrix.
    n_components : int
        Embedding dimension p.
    gamma : float
        Minimum stress improvement per iteration; iteration stops once the
        improvement is at or below this (or at ``max_iter``).
    max_iter : int
        Iteration cap per restart.
    seed : int
        Seed of the first restart; restart r uses ``seed + r``.
    diag_b : bool
        Constrain the conditioning transform B to be diagonal.
    restarts : int
        Number of random restarts; the lowest final stress wins, ties going
        to the lowest seed.
    uniform_fast_path : bool or None
        Force or suppress the all-ones-weights update shortcut (None:
        auto-detect).
    scale_aux : bool
        Rescale auxiliary columns to unit max-abs before fitting, for
        numerical conditioning only; the returned B is mapped back to the
        original units.
    allow_zero_weights : bool
        Passed through to the Sammon scheme for zero dissimilarities.
    validate : bool
        Skip input validation when False (inputs already checked upstream).

    Returns
    -------
    FitReport
    """
    if validate:
        delta = check_dissimilarity(delta)
        aux = check_auxiliary(aux, delta.shape[0])
    else:
        delta = np.asarray(delta, dtype=float)
        aux = np.asarray(aux, dtype=float)
    if n_components < 1:
        raise InputValidationError(f"n_components must be >= 1, got {n_components}")
    if gamma < 0:
        raise InputValidationError(f"gamma must be >= 0, got {gamma}")
    if max_iter < 1:
        raise InputValidationError(f"max_iter must be >= 1, got {max_iter}")
    if restarts < 1:
        raise InputValidationError(f"restarts must be >= 1, got {restarts}")

    w, _ = resolve_weights(weights, delta, allow_zero=allow_zero_weights)

    col_scale = None
    if scale_aux:
        col_scale = np.max(np.abs(aux), axis=0)
        col_scale[col_scale == 0] = 1.0
        aux = aux / col_scale

    ops = build_operators(w, aux, uniform=uniform_fast_path)

    best = None
    restart_stresses = []
    for r in range(restarts):
        run_seed = seed + r
        u, b, trace, termination = _single_fit(
            delta, aux, w, n_components, gamma, max_iter, run_seed, diag_b, ops
        )
        restart_stresses.append((run_seed, float(trace[-1])))
        if best is None or trace[-1] < best[2][-1]:
            best = (u, b, trace, termination, run_seed)

    u, b, trace, termination, run_seed = best
    if col_scale is not None:
        b = b / col_scale[:, None]
    return FitReport(
        embedding=u,
        b_matrix=b,
        stress_trace=trace,
        n_iter=len(trace) - 1,
        termination=termination,
        seed=run_seed,
        restart_stresses=restart_stresses,
    )
