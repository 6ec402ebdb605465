"""Centrally symmetric zonotopes: Minkowski sums of centered segments.

A zonotope here is sum_i alpha_i * S_(theta_i + t) with face lengths
alpha_i >= 0, strictly increasing base directions theta_i in [0, pi), and a
rotation offset t.  Closed forms:

    H(eta) = sum_i alpha_i |sin(eta - t - theta_i)|
    U      = 2 * sum_i alpha_i
    A      = (1/2) * sum_{i,j} alpha_i alpha_j |sin(theta_i - theta_j)|
"""

import numpy as np

from .bodies import SymmetricConvexBody, regular_subdivision
from .errors import ParameterError
from .polygons import ConvexPolygon


class Zonotope(SymmetricConvexBody):
    """Zonotope from face lengths, directions, and a rotation offset.

    Parameters
    ----------
    alpha : array_like
        Nonnegative face lengths (may be empty: the degenerate point).
    theta : array_like, optional
        Strictly increasing directions in [0, pi).  Defaults to the regular
        subdivision theta_i = (i-1)pi/n, in which case `regular` is True.
    t : float
        Rotation offset applied to every direction.
    """

    kind = "zonotope"
    is_smooth = False

    def __init__(self, alpha, theta=None, t=0.0):
        alpha = np.atleast_1d(np.asarray(alpha, dtype=float))
        if alpha.ndim != 1:
            raise ParameterError("alpha must be a 1-D array")
        if alpha.size and alpha.min() < 0.0:
            raise ParameterError(
                f"face lengths must be nonnegative (min was {alpha.min():.3e})"
            )
        if theta is None:
            theta = regular_subdivision(len(alpha)) if len(alpha) else np.zeros(0)
            self.regular = True
        else:
            theta = np.atleast_1d(np.asarray(theta, dtype=float))
            if theta.shape != alpha.shape:
                raise ParameterError("theta and alpha must have the same length")
            if theta.size and (theta.min() < 0.0 or theta.max() >= np.pi):
                raise ParameterError("directions must lie in [0, pi)")
            if theta.size > 1 and np.any(np.diff(theta) <= 0.0):
                raise ParameterError("directions must be strictly increasing")
            self.regular = bool(
                theta.size and np.allclose(theta, regular_subdivision(len(theta)), atol=1e-12)
            )
        self.alpha = alpha
        self.theta = theta
        self.t = float(t)
        self.n = len(alpha)

    def feret(self, eta):
        eta = np.asarray(eta, dtype=float)
        if self.n == 0:
            return np.zeros_like(eta)
        gaps = eta[..., None] - self.t - self.theta
        return np.abs(np.sin(gaps)) @ self.alpha

    @property
    def lipschitz_bound(self):
        return float(self.alpha.sum())

    def perimeter(self):
        """2 * sum of face lengths."""
        return 2.0 * float(self.alpha.sum())

    def area(self):
        """(1/2) sum_{i,j} alpha_i alpha_j |sin(theta_i - theta_j)|."""
        if self.n == 0:
            return 0.0
        s = np.abs(np.sin(self.theta[:, None] - self.theta[None, :]))
        return 0.5 * float(self.alpha @ s @ self.alpha)

    def vertices(self):
        """Boundary vertices as a counterclockwise ConvexPolygon.

        Zero-length faces are dropped; an empty or all-zero zonotope collapses
        to the origin, a single face to a segment.
        """
        keep = self.alpha > 0.0
        alpha, theta = self.alpha[keep], self.theta[keep] + self.t
        m = len(alpha)
        if m == 0:
            return ConvexPolygon([[0.0, 0.0]])
        edges = alpha[:, None] * np.stack([np.cos(theta), np.sin(theta)], axis=-1)
        v0 = -0.5 * edges.sum(axis=0)
        half = np.vstack([v0, v0 + np.cumsum(edges, axis=0)[:-1]])
        return ConvexPolygon(np.vstack([half, -half]))

    def rotated(self, angle):
        """Same face lengths with the rotation offset advanced by `angle`."""
        return Zonotope(self.alpha, None if self.regular else self.theta, self.t + angle)

    def __repr__(self):
        tag = "regular, " if self.regular else ""
        return f"Zonotope(n={self.n}, {tag}t={self.t:.6g})"


def zonotope_feret(z, eta):
    return z.feret(eta)


def zonotope_perimeter(z):
    return z.perimeter()


def zonotope_area(z):
    return z.area()


def zonotope_vertices(z):
    return z.vertices()


def point_in_zonotope(point, z, tol=1e-9):
    """Slab membership test: |<p, u(theta_i + t)>| <= H(theta_i + t)/2 for all faces."""
    p = np.asarray(point, dtype=float)
    if z.n == 0:
        return bool(np.hypot(p[0], p[1]) <= tol)
    ang = z.theta + z.t
    u = np.stack([-np.sin(ang), np.cos(ang)], axis=-1)
    return bool(np.all(np.abs(u @ p) <= 0.5 * z.feret(ang) + tol))
