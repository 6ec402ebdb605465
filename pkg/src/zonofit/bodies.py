"""Symmetric convex bodies known through their Feret (caliper) diameter.

The Feret diameter H(theta) of a planar convex body is its width in the
direction u(theta) = (-sin theta, cos theta), i.e. the distance between the
two supporting lines orthogonal to u(theta).  For a body that is symmetric
about the origin, H = 2h where h is the support function, H is pi-periodic,
and H determines the body.  Every shape here evaluates H on scalar or array
angles and carries a Lipschitz bound on H used for grid-error control.
"""

import numpy as np

from .errors import ParameterError, SymmetryError


def direction(theta):
    """Unit direction u(theta) = (-sin theta, cos theta), stacked on the last axis."""
    t = np.asarray(theta, dtype=float)
    return np.stack([-np.sin(t), np.cos(t)], axis=-1)


def regular_subdivision(n):
    """Angles theta_i = (i-1)*pi/n for i = 1..n."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ParameterError(f"subdivision size must be a positive integer, got {n!r}")
    return np.arange(n) * (np.pi / float(n))


class SymmetricConvexBody:
    """Base class: a centrally symmetric convex set evaluated via H(theta)."""

    kind = "abstract"
    #: True when H is smooth (no kinks); drives quadrature panel counts.
    is_smooth = True

    def feret(self, theta):
        """Feret diameter at angle(s) theta; returns a scalar for scalar input."""
        raise NotImplementedError

    @property
    def lipschitz_bound(self):
        """Upper bound on |H(s) - H(t)| / |s - t|."""
        raise NotImplementedError

    def __repr__(self):
        return f"<{type(self).__name__}>"


class Segment(SymmetricConvexBody):
    """Centered segment of given length along direction `angle`.

    H(theta) = length * |sin(angle - theta)|.
    """

    kind = "segment"
    is_smooth = False

    def __init__(self, length, angle=0.0):
        if length < 0:
            raise ParameterError(f"segment length must be >= 0, got {length}")
        self.length = float(length)
        self.angle = float(angle)

    def feret(self, theta):
        return self.length * np.abs(np.sin(self.angle - np.asarray(theta, dtype=float)))

    @property
    def lipschitz_bound(self):
        return self.length

    def __repr__(self):
        return f"Segment(length={self.length}, angle={self.angle})"


class Disk(SymmetricConvexBody):
    """Centered disk of radius r; H is the constant 2r."""

    kind = "disk"

    def __init__(self, r):
        if r < 0:
            raise ParameterError(f"disk radius must be >= 0, got {r}")
        self.r = float(r)

    def feret(self, theta):
        return np.full_like(np.asarray(theta, dtype=float), 2.0 * self.r)

    @property
    def lipschitz_bound(self):
        return 0.0

    def __repr__(self):
        return f"Disk(r={self.r})"


class Ellipse(SymmetricConvexBody):
    """Centered ellipse with semiaxes (a, b); the a-axis points along `phi`.

    H(theta) = 2 * sqrt(a^2 sin^2(theta - phi) + b^2 cos^2(theta - phi)).
    """

    kind = "ellipse"

    def __init__(self, a, b, phi=0.0):
        if a < 0 or b < 0:
            raise ParameterError(f"ellipse semiaxes must be >= 0, got ({a}, {b})")
        self.a = float(a)
        self.b = float(b)
        self.phi = float(phi)

    def feret(self, theta):
        t = np.asarray(theta, dtype=float) - self.phi
        return 2.0 * np.sqrt((self.a * np.sin(t)) ** 2 + (self.b * np.cos(t)) ** 2)

    @property
    def lipschitz_bound(self):
        return 2.0 * max(self.a, self.b)

    def __repr__(self):
        return f"Ellipse(a={self.a}, b={self.b}, phi={self.phi})"


class SymmetricPolygon(SymmetricConvexBody):
    """Convex polygon that is centrally symmetric about its vertex centroid.

    The construction recenters the vertices on the centroid and rejects vertex
    sets that do not match their own point reflection within `tol`.
    """

    kind = "polygon"
    is_smooth = False

    def __init__(self, vertices, tol=1e-9):
        v = np.asarray(vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2 or len(v) < 2:
            raise ParameterError("polygon needs an (m, 2) vertex array with m >= 2")
        center = v.mean(axis=0)
        v = v - center
        for p in v:
            if np.min(np.hypot(v[:, 0] + p[0], v[:, 1] + p[1])) > tol:
                raise SymmetryError(
                    "vertex set is not centrally symmetric within tolerance "
                    f"{tol:g} (offending vertex {p + center})"
                )
        self.vertices = v
        self.center = center

    def feret(self, theta):
        u = direction(theta)
        proj = u @ self.vertices.T
        return proj.max(axis=-1) - proj.min(axis=-1)

    @property
    def lipschitz_bound(self):
        return 2.0 * float(np.hypot(self.vertices[:, 0], self.vertices[:, 1]).max())

    def __repr__(self):
        return f"SymmetricPolygon({len(self.vertices)} vertices)"


class MinkowskiSum(SymmetricConvexBody):
    """Minkowski sum of symmetric bodies; H is the sum of the parts' H."""

    kind = "minkowski_sum"

    def __init__(self, parts):
        parts = list(parts)
        if not parts:
            raise ParameterError("minkowski_sum needs at least one part")
        self.parts = parts
        self.is_smooth = all(p.is_smooth for p in parts)

    def feret(self, theta):
        t = np.asarray(theta, dtype=float)
        total = np.zeros_like(t)
        for p in self.parts:
            total = total + p.feret(t)
        return total

    @property
    def lipschitz_bound(self):
        return sum(p.lipschitz_bound for p in self.parts)

    def __repr__(self):
        return f"MinkowskiSum({self.parts!r})"


class Rotated(SymmetricConvexBody):
    """Body rotated counterclockwise by `angle`: H(theta) = H_base(theta - angle)."""

    kind = "rotated"

    def __init__(self, body, angle):
        self.body = body
        self.angle = float(angle)
        self.is_smooth = body.is_smooth

    def feret(self, theta):
        return self.body.feret(np.asarray(theta, dtype=float) - self.angle)

    @property
    def lipschitz_bound(self):
        return self.body.lipschitz_bound

    def __repr__(self):
        return f"Rotated({self.body!r}, angle={self.angle})"


class Scaled(SymmetricConvexBody):
    """Body scaled by a real factor r: H(theta) = |r| * H_base(theta)."""

    kind = "scaled"

    def __init__(self, body, factor):
        self.body = body
        self.factor = float(factor)
        self.is_smooth = body.is_smooth

    def feret(self, theta):
        return abs(self.factor) * self.body.feret(theta)

    @property
    def lipschitz_bound(self):
        return abs(self.factor) * self.body.lipschitz_bound

    def __repr__(self):
        return f"Scaled({self.body!r}, factor={self.factor})"


def rotate(body, angle):
    """Counterclockwise rotation, returning a rotated view of the body."""
    return Rotated(body, angle)


def scale(body, factor):
    """Homothety by a real factor (negative factors flip, same body by symmetry)."""
    return Scaled(body, factor)


class FeasibilityReport:
    """Outcome of checking sampled (angle, value) pairs against width axioms.

    Attributes hold the worst violation of each tested property; `worst`
    aggregates them and `ok(tol)` applies a single threshold.
    """

    def __init__(self, negativity, periodicity_gap, subadditivity, triples_checked):
        self.negativity = float(negativity)
        self.periodicity_gap = float(periodicity_gap)
        self.subadditivity = float(subadditivity)
        self.triples_checked = int(triples_checked)

    @property
    def worst(self):
        return max(self.negativity, self.periodicity_gap, self.subadditivity)

    def ok(self, tol=1e-9):
        return self.worst <= tol

    def __repr__(self):
        return (
            f"FeasibilityReport(negativity={self.negativity:.3e}, "
            f"periodicity_gap={self.periodicity_gap:.3e}, "
            f"subadditivity={self.subadditivity:.3e}, "
            f"triples_checked={self.triples_checked})"
        )


def feret_feasibility_check(samples, angle_tol=1e-9):
    """Check whether sampled Feret values could come from a symmetric convex body.

    `samples` is a sequence of (angle, value) pairs.  Three necessary
    conditions are tested: nonnegativity, pi-periodicity on angle pairs that
    coincide mod pi, and the chord inequality
    H(t + b) <= H(t) + 2|sin(b/2)| H(t + (b + pi)/2) on every triple of
    sampled angles that forms such a pattern (within `angle_tol`).

    Returns a FeasibilityReport with worst violation magnitudes.
    """
    pairs = [(float(a), float(v)) for a, v in samples]
    if not pairs:
        raise ParameterError("need at least one sample")
    ang = np.array([p[0] for p in pairs])
    val = np.array([p[1] for p in pairs])

    negativity = max(0.0, float(-val.min()))

    red = np.mod(ang, np.pi)
    order = np.argsort(red)
    periodicity = 0.0
    for ii in range(len(order) - 1):
        i, j = order[ii], order[ii + 1]
        if red[j] - red[i] <= angle_tol:
            periodicity = max(periodicity, abs(val[i] - val[j]))
    # wrap-around pair (angles near 0 and near pi coincide mod pi)
    if len(order) >= 2:
        i, j = order[0], order[-1]
        if red[i] + np.pi - red[j] <= angle_tol:
            periodicity = max(periodicity, abs(val[i] - val[j]))

    # index sampled angles mod pi for triple lookup
    subadd = 0.0
    triples = 0
    n = len(pairs)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            beta = ang[j] - ang[i]
            mid = ang[i] + (beta + np.pi) / 2.0
            gap = np.mod(red - np.mod(mid, np.pi), np.pi)
            gap = np.minimum(gap, np.pi - gap)
            k = int(np.argmin(gap))
            if gap[k] > angle_tol:
                continue
            triples += 1
            lhs = val[j]
            rhs = val[i] + 2.0 * abs(np.sin(beta / 2.0)) * val[k]
            subadd = max(subadd, lhs - rhs)

    return FeasibilityReport(negativity, periodicity, max(0.0, subadd), triples)
