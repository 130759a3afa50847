"""Dense matrix kernels: Moore-Penrose pseudoinverse and a Laplacian shortcut.

Everything here is O(N^3) dense linear algebra; the intended problem sizes
are hundreds to low thousands of points.
"""

import numpy as np

from condmds.exceptions import NumericError

__all__ = ["pseudo_inverse", "laplacian_pinv"]

DEFAULT_RCOND = 1e-12


def pseudo_inverse(a, rcond=DEFAULT_RCOND):
    """Moore-Penrose pseudoinverse via singular value decomposition.

    Singular values at or below ``rcond * s_max`` are treated as zero, which
    keeps the inverse well defined for rank-deficient input (e.g. Laplacians,
    or Gram matrices of collinear columns).

    Parameters
    ----------
    a : (m, n) array_like
        Matrix to invert. Must be finite.
    rcond : float
        Relative cutoff for small singular values, >= 0.

    Returns
    -------
    (n, m) ndarray
    """
    arr = np.asarray(a, dtype=float)
    if rcond < 0:
        raise ValueError(f"rcond must be nonnegative, got {rcond}")
    if not np.all(np.isfinite(arr)):
        raise NumericError("cannot decompose a matrix with non-finite entries")
    try:
        return np.linalg.pinv(arr, rcond=rcond)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - SVD rarely fails
        raise NumericError(f"singular value decomposition failed: {exc}") from exc


def laplacian_pinv(lap):
    """Pseudoinverse of a connected weighted-graph Laplacian, without an SVD.

    For a symmetric matrix L with zero row sums whose only null direction is
    the constant vector, the pseudoinverse has the closed form

        L^+ = (L + J)^{-1} - J / N^2,

    where J is the all-ones N x N matrix. Adding J fills the rank-one gap on
    the constant direction, and the correction removes it again.

    Raises
    ------
    NumericError
        If ``L + J`` is singular, which signals that ``lap`` is not the
        Laplacian of a connected graph (extra null directions survive).
    """
    arr = np.asarray(lap, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise NumericError("cannot decompose a matrix with non-finite entries")
    n = arr.shape[0]
    try:
        inv = np.linalg.inv(arr + np.ones((n, n)))
    except np.linalg.LinAlgError as exc:
        raise NumericError(
            "L + ones is singular: input is not a connected-graph Laplacian"
        ) from exc
    return inv - 1.0 / (n * n)
