"""Weight schemes for the stress objective."""

import numpy as np

from condmds.exceptions import InputValidationError
from condmds.validation import check_weights

__all__ = ["weights_uniform", "weights_sammon", "resolve_weights", "WEIGHT_SCHEMES"]

WEIGHT_SCHEMES = ("uniform", "sammon")


def weights_uniform(n):
    """All-ones weights (zero diagonal): every pair counts equally."""
    if n < 2:
        raise InputValidationError(f"need at least 2 points, got n={n}")
    w = np.ones((n, n))
    np.fill_diagonal(w, 0.0)
    return w


def weights_sammon(delta, allow_zero=False):
    """Sammon mapping weights w_ij = 1 / (delta_ij * S), S = sum over i<j of delta_ij.

    Small dissimilarities get large weights, so local structure dominates
    the fit. Undefined for pairs with delta_ij = 0: by default that raises,
    ``allow_zero=True`` instead assigns those pairs zero weight (the pair
    stops constraining the embedding).
    """
    d = np.asarray(delta, dtype=float)
    n = d.shape[0]
    off = ~np.eye(n, dtype=bool)
    s = float(np.sum(np.triu(d, k=1)))
    if s <= 0:
        raise InputValidationError("Sammon weights need at least one positive dissimilarity")
    zero_pairs = off & (d == 0)
    if np.any(zero_pairs) and not allow_zero:
        i, j = np.argwhere(zero_pairs)[0]
        raise InputValidationError(
            f"Sammon weight undefined for zero dissimilarity at ({i}, {j}); "
            "pass allow_zero=True to drop such pairs"
        )
    w = np.zeros_like(d)
    pos = off & (d > 0)
    w[pos] = 1.0 / (d[pos] * s)
    return w


def resolve_weights(weights, delta, allow_zero=False):
    """Turn a scheme name or explicit matrix into (W, scheme_tag).

    Named schemes are data dependent, so geodesic preprocessing must call
    this again on the graph distances rather than reusing a matrix built
    from the raw input; the returned tag records which scheme to rebuild.
    """
    n = delta.shape[0]
    if isinstance(weights, str):
        if weights == "uniform":
            return weights_uniform(n), "uniform"
        if weights == "sammon":
            return weights_sammon(delta, allow_zero=allow_zero), "sammon"
        raise InputValidationError(
            f"unknown weight scheme {weights!r}; expected one of {WEIGHT_SCHEMES}"
        )
    return check_weights(weights, n), "custom"
