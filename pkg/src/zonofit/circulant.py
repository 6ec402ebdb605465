"""Circulant linear algebra via FFT diagonalization.

A circulant matrix C with first column c has entries C[i, j] = c[(i - j) mod n]
and eigenvalues equal to the DFT of c.  Solves and products are done in the
spectral domain; the dense route exists for cross-checking.
"""

import numpy as np

from .bodies import regular_subdivision
from .errors import ParameterError, SolverError


class CirculantMatrix:
    """n-by-n circulant matrix stored as its first column."""

    def __init__(self, first_column):
        c = np.asarray(first_column, dtype=float)
        if c.ndim != 1 or len(c) == 0:
            raise ParameterError("first column must be a nonempty 1-D array")
        self.first_column = c
        self.n = len(c)

    def spectrum(self):
        """Eigenvalues, ordered by DFT frequency of the first column."""
        return np.fft.fft(self.first_column)

    def dense(self):
        c = self.first_column
        idx = (np.arange(self.n)[:, None] - np.arange(self.n)[None, :]) % self.n
        return c[idx]

    def matvec(self, x):
        x = np.asarray(x, dtype=float)
        if x.shape != (self.n,):
            raise ParameterError(f"expected vector of length {self.n}, got shape {x.shape}")
        return np.fft.ifft(self.spectrum() * np.fft.fft(x)).real

    def solve(self, b, rtol=1e-12):
        """Solve C x = b in the spectral domain.

        Raises SolverError naming the offending frequency when any eigenvalue
        magnitude falls at or below rtol times the largest.
        """
        b = np.asarray(b, dtype=float)
        if b.shape != (self.n,):
            raise ParameterError(f"expected vector of length {self.n}, got shape {b.shape}")
        lam = self.spectrum()
        mags = np.abs(lam)
        cutoff = rtol * mags.max()
        bad = np.flatnonzero(mags <= cutoff)
        if mags.max() == 0.0 or len(bad) > 0:
            k = int(bad[0]) if len(bad) else 0
            raise SolverError(
                f"circulant system is numerically singular at spectral index {k} "
                f"(|lambda_{k}| = {mags[k]:.3e} <= {cutoff:.3e})"
            )
        return np.fft.ifft(np.fft.fft(b) / lam).real

    def condition_number(self):
        mags = np.abs(self.spectrum())
        if mags.min() == 0.0:
            return np.inf
        return float(mags.max() / mags.min())

    def __repr__(self):
        return f"CirculantMatrix(n={self.n})"


def circulant_solve(c, b, rtol=1e-12):
    """Solve Circ(first_column) x = b; accepts a CirculantMatrix or a first column."""
    if not isinstance(c, CirculantMatrix):
        c = CirculantMatrix(c)
    return c.solve(b, rtol=rtol)


def feret_matrix(n):
    """Circulant matrix F with entries |sin(theta_i - theta_j)| on the regular grid.

    F maps a zonotope's face-length vector to its Feret diameters at the grid
    angles.  Its spectrum has strictly positive magnitudes for n > 1, so the
    map is invertible.
    """
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise ParameterError(f"feret_matrix needs an integer n >= 2, got {n!r}")
    return CirculantMatrix(np.abs(np.sin(regular_subdivision(n))))
