"""Nonnegative least squares by the active-set method.

Small dense problems only.  The passive-set subproblems are solved with
numpy's lstsq, so at convergence the dual is zero on the passive set up to
roundoff and bounded by `kkt_tol` on the active set.
"""

import numpy as np

from .errors import SolverError


def nnls(A, b, kkt_tol=1e-11, max_iter=None):
    """Minimize ||A x - b|| subject to x >= 0.

    Returns (x, residual_norm).  `kkt_tol` bounds the largest positive dual
    component allowed on the active (zero) set at exit.
    """
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    m, n = A.shape
    if b.shape != (m,):
        raise SolverError(f"shape mismatch: A is {A.shape}, b is {b.shape}")
    if max_iter is None:
        max_iter = 6 * n + 30

    x = np.zeros(n)
    passive = np.zeros(n, dtype=bool)
    for _ in range(max_iter):
        w = A.T @ (b - A @ x)
        w_masked = np.where(passive, -np.inf, w)
        j = int(np.argmax(w_masked))
        if passive.all() or w_masked[j] <= kkt_tol:
            return x, float(np.linalg.norm(A @ x - b))
        passive[j] = True
        while True:
            z = np.zeros(n)
            z[passive], *_ = np.linalg.lstsq(A[:, passive], b, rcond=None)
            if z[passive].min() > 0.0:
                x = z
                break
            # step toward z until the first passive component hits zero
            mask = passive & (z <= 0.0)
            ratios = x[mask] / (x[mask] - z[mask])
            step = float(ratios.min())
            x = x + step * (z - x)
            passive &= x > 1e-15 * max(1.0, float(np.abs(x).max()))
            x[~passive] = 0.0
            if not passive.any():
                break
    raise SolverError("active-set iteration limit exceeded")


def kkt_residual(A, b, x):
    """Largest violation of the stationarity conditions at x for min ||Ax-b||, x>=0."""
    g = A.T @ (A @ x - b)
    on = x > 0.0
    return float(max(np.abs(g[on]).max() if on.any() else 0.0,
                     max(0.0, -(g[~on].min()) if (~on).any() else 0.0)))
