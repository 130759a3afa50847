"""Input validation helpers.

All public entry points (the estimators, ``cond_smacof``, ``cond_isomap``
and the CLI) funnel their inputs through these checks; the numeric kernels
themselves assume validated arrays.
"""

import numpy as np

from condmds.exceptions import InputValidationError

__all__ = [
    "check_matrix",
    "check_dissimilarity",
    "check_weights",
    "check_auxiliary",
]


def check_matrix(a, name="matrix"):
    """Coerce ``a`` to a 2-D float array with finite entries.

    Raises InputValidationError otherwise.
    """
    arr = np.asarray(a, dtype=float)
    if arr.ndim != 2:
        raise InputValidationError(f"{name} must be 2-D, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise InputValidationError(f"{name} must be non-empty, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        i, j = np.argwhere(~np.isfinite(arr))[0]
        raise InputValidationError(f"{name} has a non-finite entry at ({i}, {j})")
    return arr


def check_dissimilarity(delta, tol=1e-9):
    """Validate an N x N dissimilarity matrix.

    Must be square with N >= 2, symmetric to within ``tol``, nonnegative,
    finite, and zero on the diagonal. Returns the validated float array.
    """
    d = check_matrix(delta, name="dissimilarity matrix")
    n = d.shape[0]
    if d.shape[1] != n:
        raise InputValidationError(
            f"dissimilarity matrix must be square, got shape {d.shape}"
        )
    if n < 2:
        raise InputValidationError("dissimilarity matrix needs at least 2 points")
    asym = np.abs(d - d.T)
    if asym.max() > tol:
        i, j = np.unravel_index(np.argmax(asym), asym.shape)
        raise InputValidationError(
            f"dissimilarity matrix is asymmetric at ({i}, {j}): "
            f"{d[i, j]!r} vs {d[j, i]!r}"
        )
    if d.min() < 0:
        i, j = np.unravel_index(np.argmin(d), d.shape)
        raise InputValidationError(
            f"dissimilarity matrix has a negative entry at ({i}, {j}): {d[i, j]!r}"
        )
    diag = np.diagonal(d)
    if np.any(diag != 0):
        i = int(np.argmax(diag != 0))
        raise InputValidationError(
            f"dissimilarity matrix has a nonzero diagonal entry at ({i}, {i}): "
            f"{d[i, i]!r}"
        )
    return d


def check_weights(w, n):
    """Validate an N x N weight matrix against the problem size ``n``.

    Symmetric, nonnegative, zero diagonal, finite, and at least one positive
    off-diagonal entry.
    """
    arr = check_matrix(w, name="weight matrix")
    if arr.shape != (n, n):
        raise InputValidationError(
            f"weight matrix shape {arr.shape} does not match N={n}"
        )
    if not np.array_equal(arr, arr.T):
        i, j = np.argwhere(arr != arr.T)[0]
        raise InputValidationError(f"weight matrix is asymmetric at ({i}, {j})")
    if arr.min() < 0:
        i, j = np.unravel_index(np.argmin(arr), arr.shape)
        raise InputValidationError(
            f"weight matrix has a negative entry at ({i}, {j}): {arr[i, j]!r}"
        )
    if np.any(np.diagonal(arr) != 0):
        i = int(np.argmax(np.diagonal(arr) != 0))
        raise InputValidationError(f"weight matrix has a nonzero diagonal at ({i}, {i})")
    if not np.any(arr > 0):
        raise InputValidationError("weight matrix must have at least one positive entry")
    return arr


def check_auxiliary(v, n):
    """Validate an N x q auxiliary coordinate matrix."""
    arr = check_matrix(v, name="auxiliary matrix")
    if arr.shape[0] != n:
        raise InputValidationError(
            f"auxiliary matrix has {arr.shape[0]} rows but the dissimilarity "
            f"matrix has {n}"
        )
    return arr
